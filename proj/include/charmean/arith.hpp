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

#ifndef CHARMEAN_ARITH_HPP
#define CHARMEAN_ARITH_HPP

#include <cstdint>
#include <vector>

namespace charmean {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;
  bool operator==(const PrimePower&) const = default;
};

/// Prime-power decomposition of a positive modulus. Factors are sorted by
/// strictly increasing prime and every exponent is at least one; the
/// factorization of 1 is empty.
struct Factorization {
  std::uint64_t modulus = 1;
  std::vector<PrimePower> factors;
};

/// q = m_part * n_part where m_part collects the primes dividing q exactly
/// once and every prime of n_part divides it at least twice.
struct MNSplit {
  std::uint64_t m_part = 1;
  std::uint64_t n_part = 1;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Inverse of a modulo mod; throws std::domain_error when gcd(a, mod) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division. Throws std::domain_error for n == 0.
Factorization factorize(std::uint64_t n);

int moebius(std::uint64_t n);
int moebius(const Factorization& f);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);

/// All positive divisors in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

/// Number of primitive characters modulo q, sum_{d|q} mu(d) phi(q/d).
std::uint64_t primitive_count(std::uint64_t q);

/// Sum of chi(r) over the primitive characters chi mod q, evaluated as
/// sum_{d | (q, r-1)} mu(q/d) phi(d). Requires q >= 2 and gcd(r, q) = 1.
std::int64_t primitive_char_sum(std::uint64_t q, std::int64_t r);

MNSplit split_mn(std::uint64_t q);
MNSplit split_mn(const Factorization& f);

/// 1 + 1/2 + ... + 1/t, with harmonic(0) == 0.
double harmonic(std::uint64_t t);

}  // namespace charmean

#endif  // CHARMEAN_ARITH_HPP
