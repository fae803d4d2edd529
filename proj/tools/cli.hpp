/*
 * Copyright 2026 The charmean Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef CHARMEAN_TOOLS_CLI_HPP
#define CHARMEAN_TOOLS_CLI_HPP

#include <charmean/charmean.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charmean::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kIo = 3 };

inline constexpr std::string_view kCsvHeader = "q,M,N,m,a,lhs,main,abs_err,rel_err,norm_err,seconds";

/// One CSV line without the trailing newline; floats use 17 significant digits.
std::string format_csv_row(const cm_mean_value& row);

/// Inverse of format_csv_row. Returns nullopt for malformed lines.
std::optional<cm_mean_value> parse_csv_row(std::string_view line);

/// "lo..hi" selects every prime in the closed range; otherwise a comma
/// list of primes. Throws std::invalid_argument on malformed input or a
/// listed composite.
std::vector<std::uint64_t> parse_prime_selector(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charmean::cli

#endif  // CHARMEAN_TOOLS_CLI_HPP
