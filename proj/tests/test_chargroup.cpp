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

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "charmean/arith.hpp"
#include "charmean/chargroup.hpp"
#include "charmean/oracle.hpp"

using namespace charmean;
using Complex = std::complex<double>;

namespace {

bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

bool same_table(const Character& x, const Character& y) {
  const auto tx = x.value_table();
  const auto ty = y.value_table();
  for (std::size_t n = 0; n < tx.size(); ++n) {
    if (!near(tx[n], ty[n])) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("chargroup") {
  TEST_CASE("group shapes") {
    const auto g1 = CharacterGroup::build(1);
    CHECK(g1->size() == 1);
    const auto g8 = CharacterGroup::build(8);
    CHECK(g8->size() == 4);
    REQUIRE(g8->components().size() == 2);
    CHECK(g8->components()[0].order == 2);
    CHECK(g8->components()[1].order == 2);
    const auto g15 = CharacterGroup::build(15);
    CHECK(g15->size() == 8);
    REQUIRE(g15->components().size() == 2);
    CHECK(g15->components()[0].order * g15->components()[1].order == 8);
    CHECK_THROWS_AS(CharacterGroup::build(0), std::domain_error);
  }

  TEST_CASE("enumeration sizes and index round trip") {
    CHECK(CharacterGroup::build(3)->enumerate().size() == 2);
    CHECK(CharacterGroup::build(5)->enumerate().size() == 4);
    CHECK(CharacterGroup::build(12)->enumerate().size() == 4);
    for (std::uint64_t q : {7, 16, 24, 45, 64, 100}) {
      const auto g = CharacterGroup::build(q);
      CHECK(g->size() == euler_phi(q));
      for (std::uint64_t i = 0; i < g->size(); ++i) CHECK(g->character(i).index() == i);
    }
  }

  TEST_CASE("discrete logs round trip") {
    for (std::uint64_t q : {15, 32, 81, 200, 343}) {
      const auto g = CharacterGroup::build(q);
      for (std::uint64_t n = 0; n < q; ++n) {
        const auto logs = g->dlog(static_cast<std::int64_t>(n));
        CHECK(logs.has_value() == (std::gcd(n, q) == 1));
        if (logs) CHECK(g->exponentiate(*logs) == n % q);
      }
    }
  }

  TEST_CASE("evaluation") {
    const auto g3 = CharacterGroup::build(3);
    CHECK(near(g3->character(1)(2), -1.0));
    const auto g5 = CharacterGroup::build(5);
    const Character quartic = g5->character(std::vector<std::uint64_t>{1});
    CHECK(near(quartic(2), Complex(0.0, 1.0)));
    CHECK(near(quartic(3), Complex(0.0, -1.0)));
    CHECK(near(quartic(-2), quartic(3)));
    const auto g12 = CharacterGroup::build(12);
    for (std::int64_t n : {1, 5, 7, 11, -1}) CHECK(near(g12->principal()(n), 1.0));
    CHECK(near(g12->principal()(4), 0.0));
  }

  TEST_CASE("complete multiplicativity and periodicity") {
    const auto g = CharacterGroup::build(63);
    for (std::uint64_t i = 0; i < g->size(); i += 5) {
      const Character chi = g->character(i);
      for (std::int64_t m = 0; m < 63; m += 4) {
        for (std::int64_t n = 0; n < 63; n += 3) {
          CHECK(near(chi(m * n), chi(m) * chi(n)));
        }
        CHECK(near(chi(m + 63), chi(m)));
      }
    }
  }

  TEST_CASE("group operations") {
    const auto g5 = CharacterGroup::build(5);
    const Character quartic = g5->character(std::vector<std::uint64_t>{1});
    CHECK(multiply(quartic, conjugate(quartic)).is_principal());
    CHECK(conjugate(g5->principal()).is_principal());
    const Character square = multiply(quartic, quartic);
    CHECK(square.order() == 2);
    for (std::int64_t n = 1; n < 5; ++n) CHECK(near(square(n), quartic(n) * quartic(n)));
    CHECK_THROWS_AS(multiply(quartic, CharacterGroup::build(7)->principal()), std::domain_error);
    CHECK(is_principal(g5->principal()));
    CHECK_FALSE(is_principal(quartic));
  }

  TEST_CASE("conductors") {
    CHECK(CharacterGroup::build(20)->principal().conductor() == 1);
    const Character chi4 = CharacterGroup::build(4)->character(1);
    CHECK(chi4.conductor() == 4);
    CHECK(chi4.is_primitive());
    const auto g9 = CharacterGroup::build(9);
    const Character through3 = g9->character(std::vector<std::uint64_t>{3});
    CHECK(through3.conductor() == 3);
    CHECK_FALSE(through3.is_primitive());
    for (std::int64_t k = 0; k < 3; ++k) CHECK(near(through3(1 + 3 * k), 1.0));
  }

  TEST_CASE("conductor agrees with exhaustive search") {
    for (std::uint64_t q = 1; q <= 130; ++q) {
      const auto g = CharacterGroup::build(q);
      std::uint64_t primitive = 0;
      for (std::uint64_t i = 0; i < g->size(); ++i) {
        const Character chi = g->character(i);
        CHECK(chi.conductor() == oracle::conductor_by_search(chi));
        primitive += chi.is_primitive() ? 1 : 0;
      }
      CHECK(primitive == primitive_count(q));
    }
  }

  TEST_CASE("induction") {
    const auto g1 = CharacterGroup::build(1);
    CHECK(induce(g1->principal(), 12).is_principal());
    const Character chi3 = CharacterGroup::build(3)->character(1);
    const Character lifted = induce(chi3, 12);
    CHECK(lifted.modulus() == 12);
    CHECK(near(lifted(5), -1.0));
    CHECK(lifted.conductor() == 3);
    const Character chi4 = CharacterGroup::build(4)->character(1);
    CHECK(near(induce(chi4, 12)(3), 0.0));
    CHECK_THROWS_AS(induce(chi3, 10), std::domain_error);
  }

  TEST_CASE("CRT factorization") {
    const auto g15 = CharacterGroup::build(15);
    const auto [u, v] = crt_factor(g15->principal(), 3, 5);
    CHECK(u.is_principal());
    CHECK(v.is_principal());
    for (std::uint64_t i = 0; i < g15->size(); ++i) {
      const Character chi = g15->character(i);
      const auto [cu, cv] = crt_factor(chi, 3, 5);
      for (std::int64_t n = 1; n <= 15; ++n) CHECK(near(chi(n), cu(n) * cv(n)));
    }
    CHECK_THROWS_AS(crt_factor(CharacterGroup::build(12)->principal(), 2, 6), std::domain_error);
  }

  TEST_CASE("value table bitwise stable") {
    const Character chi = CharacterGroup::build(91)->character(17);
    const auto t1 = chi.value_table();
    const auto t2 = chi.value_table();
    CHECK(t1 == t2);
  }
}
