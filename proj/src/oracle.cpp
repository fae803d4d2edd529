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

#include "charmean/oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "charmean/arith.hpp"

namespace charmean::oracle {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace

double digamma_series(double x, std::uint64_t terms) {
  if (!(x > 0.0)) throw std::domain_error("digamma_series: x must be > 0");
  const double shift = x - 1.0;
  double sum = 0.0;
  for (std::uint64_t n = terms; n-- > 0;) {
    const double dn = static_cast<double>(n);
    sum += shift / ((dn + 1.0) * (dn + x));
  }
  const double big = static_cast<double>(terms);
  const double f = shift / ((big + 1.0) * (big + x));
  const double df = -shift * (2.0 * big + 1.0 + x) / ((big + 1.0) * (big + 1.0) * (big + x) * (big + x));
  const double tail = std::log1p(shift / (big + 1.0)) + 0.5 * f - df / 12.0;
  return -kEulerGamma + sum + tail;
}

double hurwitz_zeta2_series(double x, std::uint64_t terms) {
  if (!(x > 0.0)) throw std::domain_error("hurwitz_zeta2_series: x must be > 0");
  double sum = 0.0;
  for (std::uint64_t n = terms; n-- > 0;) {
    const double t = static_cast<double>(n) + x;
    sum += 1.0 / (t * t);
  }
  const double y = static_cast<double>(terms) + x;
  const double y2 = y * y;
  return sum + 1.0 / y + 0.5 / y2 + 1.0 / (6.0 * y2 * y) - 1.0 / (30.0 * y2 * y2 * y);
}

double coprime_inverse_square_series(std::uint64_t q, double a, std::uint64_t terms) {
  if (q == 0) throw std::domain_error("coprime_inverse_square_series: q must be >= 1");
  std::vector<char> unit(q);
  for (std::uint64_t r = 0; r < q; ++r) unit[r] = std::gcd(r, q) == 1 ? 1 : 0;
  double sum = 0.0;
  std::uint64_t r = terms % q;
  for (std::uint64_t n = terms; n >= 1; --n) {
    if (unit[r]) {
      const double t = static_cast<double>(n) + a;
      sum += 1.0 / (t * t);
    }
    r = (r == 0) ? q - 1 : r - 1;
  }
  const double density = static_cast<double>(euler_phi(q)) / static_cast<double>(q);
  const double y = static_cast<double>(terms) + 1.0 + a;
  return sum + density * (1.0 / y + 0.5 / (y * y));
}

std::uint64_t conductor_by_search(const Character& chi) {
  const std::uint64_t q = chi.modulus();
  const auto values = chi.value_table();
  for (std::uint64_t f : divisors(q)) {
    bool induced = true;
    for (std::uint64_t n = 1; n <= q && induced; n += f) {
      if (std::gcd(n % q, q) != 1) continue;
      if (std::abs(values[n % q] - 1.0) > 1e-9) induced = false;
    }
    if (induced) return f;
  }
  return q;
}

}  // namespace charmean::oracle
