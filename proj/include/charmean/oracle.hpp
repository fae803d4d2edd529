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

#ifndef CHARMEAN_ORACLE_HPP
#define CHARMEAN_ORACLE_HPP

#include <cstdint>

#include "charmean/chargroup.hpp"

// Slow reference evaluations used by the verification suites and tests.
// Nothing in the primary evaluation path calls into this namespace.
namespace charmean::oracle {

inline constexpr std::uint64_t kDefaultSeriesTerms = 1'000'000;

/// -gamma + sum_{n>=0} (1/(n+1) - 1/(n+x)), truncated after `terms` terms
/// with an Euler-Maclaurin tail.
double digamma_series(double x, std::uint64_t terms = kDefaultSeriesTerms);

/// sum_{n>=0} (n+x)^-2 truncated after `terms` terms with an
/// Euler-Maclaurin tail.
double hurwitz_zeta2_series(double x, std::uint64_t terms = kDefaultSeriesTerms);

/// sum_{n=1..terms, gcd(n,q)=1} (n+a)^-2 plus the density-weighted tail
/// (phi(q)/q) sum_{n>terms} (n+a)^-2.
double coprime_inverse_square_series(std::uint64_t q, double a, std::uint64_t terms = kDefaultSeriesTerms);

/// Smallest f | q such that chi(n) = 1 for every unit n = 1 (mod f),
/// found by scanning values.
std::uint64_t conductor_by_search(const Character& chi);

}  // namespace charmean::oracle

#endif  // CHARMEAN_ORACLE_HPP
