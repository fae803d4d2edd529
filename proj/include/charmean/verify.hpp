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

#ifndef CHARMEAN_VERIFY_HPP
#define CHARMEAN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace charmean::verify {

struct InvariantResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;  // first violation, if any

  bool pass() const { return violations == 0 && checked > 0; }
  /// Records one comparison; error > tolerance (or NaN) counts as a violation.
  void record(double error, const std::string& where = {});
  void merge(const InvariantResult& other);
};

struct VerifyReport {
  std::string suite;
  std::uint64_t qmax = 0;
  double seconds = 0.0;
  std::vector<InvariantResult> rows;

  bool pass() const;
  std::string to_json() const;
};

/// Orthogonality, lemma 1 at a in {0, 1, 2, 7/2}, direct vs structural
/// |tau|, and primitive-character counts and sums against enumeration, for
/// every q in [3, qmax].
VerifyReport run_identities(std::uint64_t qmax, int threads = 0);

/// Gauss-sum multiplicativity and vanishing, the C-decomposition identity,
/// the coprime diagonal kernel, closed form vs block series, conjugation
/// and tau-path invariance. Each check caps q at its own limit.
VerifyReport run_lemmas(std::uint64_t qmax, int threads = 0);

/// Digamma and zeta(2, .) against definitional series and functional
/// equations. qmax is ignored.
VerifyReport run_special(int threads = 0);

/// Dispatch by name: "identities", "lemmas" or "special". Throws
/// std::invalid_argument for other names and std::domain_error for qmax < 3.
VerifyReport run_suite(std::string_view suite, std::uint64_t qmax, int threads = 0);

}  // namespace charmean::verify

#endif  // CHARMEAN_VERIFY_HPP
