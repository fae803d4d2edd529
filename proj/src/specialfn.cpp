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

#include "charmean/specialfn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace charmean {

namespace {

constexpr double kShiftThreshold = 16.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_14.
constexpr std::array<double, 7> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
};

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": argument must be positive and finite");
  }
}

}  // namespace

SpecialValue digamma_eval(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  double magnitude = 0.0;
  int steps = 0;
  while (x < kShiftThreshold) {
    shift += 1.0 / x;
    x += 1.0;
    ++steps;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double power = inv2;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    series += kBernoulli[k] / (2.0 * static_cast<double>(k + 1)) * power;
    power *= inv2;
  }
  const double asymptotic = std::log(x) - 0.5 / x - series;
  const double value = asymptotic - shift;
  magnitude = std::abs(asymptotic) + shift;
  return {value, kEps * (steps + 4) * magnitude};
}

double digamma(double x) { return digamma_eval(x).value; }

SpecialValue hurwitz_zeta2_eval(double alpha) {
  require_positive(alpha, "hurwitz_zeta2");
  double x = alpha;
  double shift = 0.0;
  int steps = 0;
  while (x < kShiftThreshold) {
    shift += 1.0 / (x * x);
    x += 1.0;
    ++steps;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv2 * inv;
  for (double b : kBernoulli) {
    series += b * power;
    power *= inv2;
  }
  const double asymptotic = inv + 0.5 * inv2 + series;
  const double value = asymptotic + shift;
  return {value, kEps * (steps + 4) * value};
}

double hurwitz_zeta2(double alpha) { return hurwitz_zeta2_eval(alpha).value; }

double zeta2() { return std::numbers::pi * std::numbers::pi / 6.0; }

}  // namespace charmean
