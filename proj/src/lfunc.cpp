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

#include "charmean/lfunc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "charmean/parallel.hpp"
#include "charmean/specialfn.hpp"

namespace charmean {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_nonprincipal(const Character& chi, const char* what) {
  if (chi.is_principal()) {
    throw std::domain_error(std::string(what) + ": principal character has a pole at s = 1");
  }
}

void require_shift(double a, const char* what) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw std::domain_error(std::string(what) + ": shift a must be finite and >= 0");
  }
}

// sum_{j>=0} (j + x)^-2 for x > 0: explicit head, Euler-Maclaurin tail.
double inverse_square_tail(double x) {
  constexpr int kHead = 32;
  double head = 0.0;
  for (int j = kHead - 1; j >= 0; --j) {
    const double t = j + x;
    head += 1.0 / (t * t);
  }
  const double y = x + kHead;
  const double y2 = y * y;
  const double tail = 1.0 / y + 0.5 / y2 + 1.0 / (6.0 * y2 * y) - 1.0 / (30.0 * y2 * y2 * y) +
                      1.0 / (42.0 * y2 * y2 * y2 * y);
  return head + tail;
}

}  // namespace

DigammaTable::DigammaTable(std::uint64_t q, double a) : modulus_(q), shift_(a), values_(q) {
  if (q == 0) throw std::domain_error("DigammaTable: modulus must be >= 1");
  require_shift(a, "DigammaTable");
  const double dq = static_cast<double>(q);
  for (std::uint64_t r = 1; r <= q; ++r) {
    const auto v = digamma_eval((static_cast<double>(r) + a) / dq);
    values_[r - 1] = v.value;
    magnitude_ += std::abs(v.value);
    evaluation_error_ += v.abs_error_estimate;
  }
}

LEvaluation shifted_l1_from_values(std::span<const std::complex<double>> chi_values, const DigammaTable& table) {
  const std::uint64_t q = table.modulus();
  if (chi_values.size() != q) throw std::invalid_argument("value table length does not match the modulus");
  std::vector<std::complex<double>> terms(q);
  for (std::uint64_t r = 1; r <= q; ++r) terms[r - 1] = chi_values[r % q] * table[r];
  const double dq = static_cast<double>(q);
  LEvaluation out;
  out.value = -pairwise_sum(terms) / dq;
  out.method = LMethod::digamma_closed_form;
  out.shift = table.shift();
  out.abs_error_estimate =
      (kEps * (std::log2(dq) + 4.0) * table.magnitude() + table.evaluation_error()) / dq;
  return out;
}

LEvaluation l1_closed(const Character& chi, const DigammaTable& at_zero) {
  require_nonprincipal(chi, "l1_closed");
  if (at_zero.shift() != 0.0) throw std::invalid_argument("l1_closed: table must have shift 0");
  return shifted_l1(chi, at_zero);
}

LEvaluation l1_closed(const Character& chi) {
  require_nonprincipal(chi, "l1_closed");
  return shifted_l1_from_values(chi.value_table(), DigammaTable(chi.modulus(), 0.0));
}

LEvaluation shifted_l1(const Character& chi, const DigammaTable& table) {
  require_nonprincipal(chi, "shifted_l1");
  if (table.modulus() != chi.modulus()) throw std::invalid_argument("shifted_l1: table modulus mismatch");
  return shifted_l1_from_values(chi.value_table(), table);
}

LEvaluation shifted_l1(const Character& chi, double a) {
  require_nonprincipal(chi, "shifted_l1");
  require_shift(a, "shifted_l1");
  return shifted_l1_from_values(chi.value_table(), DigammaTable(chi.modulus(), a));
}

LEvaluation aux_sum(const Character& chi, const DigammaTable& at_zero, const DigammaTable& at_a) {
  require_nonprincipal(chi, "aux_sum");
  const double a = at_a.shift();
  if (!(a > 0.0)) throw std::domain_error("aux_sum: shift a must be > 0");
  if (at_zero.shift() != 0.0) throw std::invalid_argument("aux_sum: first table must have shift 0");
  const auto values = chi.value_table();
  const auto l0 = shifted_l1_from_values(values, at_zero);
  const auto la = shifted_l1_from_values(values, at_a);
  LEvaluation out;
  out.value = (l0.value - la.value) / a;
  out.shift = a;
  out.abs_error_estimate = (l0.abs_error_estimate + la.abs_error_estimate) / a;
  return out;
}

LEvaluation aux_sum(const Character& chi, double a) {
  require_nonprincipal(chi, "aux_sum");
  require_shift(a, "aux_sum");
  if (!(a > 0.0)) throw std::domain_error("aux_sum: shift a must be > 0");
  return aux_sum(chi, DigammaTable(chi.modulus(), 0.0), DigammaTable(chi.modulus(), a));
}

LEvaluation l1a_via_lemma1(const Character& chi, double a) {
  require_nonprincipal(chi, "l1a_via_lemma1");
  require_shift(a, "l1a_via_lemma1");
  if (a == 0.0) return l1_closed(chi);
  const auto l0 = l1_closed(chi);
  const auto aux = aux_sum(chi, a);
  LEvaluation out;
  out.value = l0.value - a * aux.value;
  out.shift = a;
  out.abs_error_estimate = l0.abs_error_estimate + a * aux.abs_error_estimate;
  return out;
}

LEvaluation block_series_oracle(const Character& chi, double a, std::uint64_t blocks) {
  require_nonprincipal(chi, "block_series_oracle");
  require_shift(a, "block_series_oracle");
  if (blocks == 0) throw std::domain_error("block_series_oracle: blocks must be >= 1");
  const std::uint64_t q = chi.modulus();
  const auto values = chi.value_table();
  const double dq = static_cast<double>(q);

  std::vector<std::complex<double>> block_sums(blocks);
  std::vector<std::complex<double>> terms(q);
  double abs_sum = 0.0;
  for (std::uint64_t j = 0; j < blocks; ++j) {
    for (std::uint64_t r = 1; r <= q; ++r) {
      const double denom = static_cast<double>(j) * dq + static_cast<double>(r) + a;
      terms[r - 1] = values[r % q] / denom;
      abs_sum += std::abs(values[r % q]) / denom;
    }
    block_sums[j] = pairwise_sum(terms);
  }
  const std::complex<double> head = pairwise_sum(block_sums);

  std::complex<double> first_moment = 0.0;
  double second_moment = 0.0;
  for (std::uint64_t r = 1; r <= q; ++r) {
    first_moment += static_cast<double>(r) * values[r % q];
    second_moment += static_cast<double>(r) * static_cast<double>(r);
  }
  const double n = static_cast<double>(blocks);
  const std::complex<double> tail = -first_moment / (dq * dq) * inverse_square_tail(n + a / dq);
  // Per block the neglected remainder is at most second_moment / (j q)^3.
  const double tail_bound = second_moment / (dq * dq * dq) * (1.0 / (n * n * n) + 0.5 / (n * n));
  const double rounding = kEps * (std::log2(n * dq) + 4.0) * abs_sum;

  LEvaluation out;
  out.value = head + tail;
  out.method = LMethod::block_series;
  out.shift = a;
  out.abs_error_estimate = tail_bound + rounding;
  return out;
}

}  // namespace charmean
