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


#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "charmean/arith.hpp"

using namespace charmean;

namespace {

// Independent reference: naive trial division with no shortcuts.
std::vector<PrimePower> naive_factor(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; n > 1; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  }
  return out;
}

std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1 ? 1 : 0;
  return c;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("factorize small and worked values") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(1604).factors == std::vector<PrimePower>{{2, 2}, {401, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);
  }

  TEST_CASE("factorize agrees with naive trial division") {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      const auto f = factorize(n);
      CHECK(f.modulus == n);
      CHECK(f.factors == naive_factor(n));
    }
  }

  TEST_CASE("moebius, phi and divisors") {
    CHECK(moebius(1) == 1);
    CHECK(euler_phi(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(moebius(0), std::domain_error);
    CHECK_THROWS_AS(euler_phi(0), std::domain_error);
    CHECK_THROWS_AS(divisors(0), std::domain_error);
    for (std::uint64_t n = 1; n <= 500; ++n) {
      CHECK(euler_phi(n) == naive_phi(n));
      std::int64_t mobius_sum = 0;
      std::uint64_t phi_sum = 0;
      for (std::uint64_t d : divisors(n)) {
        mobius_sum += moebius(d);
        phi_sum += euler_phi(d);
      }
      CHECK(mobius_sum == (n == 1 ? 1 : 0));
      CHECK(phi_sum == n);
    }
  }

  TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(401));
    CHECK(is_prime(1009));
    CHECK_FALSE(is_prime(1604));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(18446744073709551557ULL));
    for (std::uint64_t n = 2; n < 2000; ++n) CHECK(is_prime(n) == (naive_factor(n).size() == 1 && naive_factor(n)[0].exponent == 1));
  }

  TEST_CASE("modular helpers") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(mul_mod(1ULL << 62, 8, 1000000007ULL) == ((1ULL << 62) % 1000000007ULL) * 8 % 1000000007ULL);
    CHECK(inverse_mod(3, 7) == 5);
  }

  TEST_CASE("primitive counts") {
    CHECK(primitive_count(1) == 1);
    CHECK(primitive_count(3) == 1);
    CHECK(primitive_count(6) == 0);
    CHECK(primitive_count(8) == 2);
    CHECK(primitive_count(401) == 399);
  }

  TEST_CASE("primitive character sums") {
    CHECK(primitive_char_sum(5, 1) == 3);
    CHECK(primitive_char_sum(5, 2) == -1);
    CHECK(primitive_char_sum(6, 5) == 0);
    CHECK(primitive_char_sum(5, -1) == primitive_char_sum(5, 4));
    CHECK_THROWS_AS(primitive_char_sum(6, 4), std::domain_error);
  }

  TEST_CASE("squarefull split") {
    CHECK(split_mn(12).m_part == 3);
    CHECK(split_mn(12).n_part == 4);
    CHECK(split_mn(30).m_part == 30);
    CHECK(split_mn(30).n_part == 1);
    CHECK(split_mn(8).m_part == 1);
    CHECK(split_mn(8).n_part == 8);
    CHECK(split_mn(1604).m_part == 401);
    CHECK(split_mn(1604).n_part == 4);
  }

  TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0.0);
    CHECK(harmonic(1) == 1.0);
    CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  }
}
