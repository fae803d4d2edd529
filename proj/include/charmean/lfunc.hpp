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

#ifndef CHARMEAN_LFUNC_HPP
#define CHARMEAN_LFUNC_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "charmean/chargroup.hpp"

namespace charmean {

enum class LMethod { digamma_closed_form, block_series };

struct LEvaluation {
  std::complex<double> value;
  LMethod method = LMethod::digamma_closed_form;
  double abs_error_estimate = 0.0;
  double shift = 0.0;
};

/// psi((r + a) / q) for r = 1 .. q. Built once per (q, a) and shared
/// read-only by every character of the modulus.
class DigammaTable {
 public:
  DigammaTable(std::uint64_t q, double a);

  std::uint64_t modulus() const { return modulus_; }
  double shift() const { return shift_; }
  /// psi((r + a) / q), r in [1, q].
  double operator[](std::uint64_t r) const { return values_[r - 1]; }
  std::span<const double> values() const { return values_; }
  /// Sum of |psi| over the table plus the summed evaluation error bounds.
  double magnitude() const { return magnitude_; }
  double evaluation_error() const { return evaluation_error_; }

 private:
  std::uint64_t modulus_;
  double shift_;
  std::vector<double> values_;
  double magnitude_ = 0.0;
  double evaluation_error_ = 0.0;
};

/// sum_{n>=1} chi(n) / (n + a) = -(1/q) sum_{r=1}^{q} chi(r) psi((r + a)/q)
/// for a non-principal chi given as a value table chi(0..q-1).
LEvaluation shifted_l1_from_values(std::span<const std::complex<double>> chi_values, const DigammaTable& table);

/// L(1, chi). Throws std::domain_error for the principal character.
LEvaluation l1_closed(const Character& chi);
LEvaluation l1_closed(const Character& chi, const DigammaTable& at_zero);

/// L(1, chi, a) = sum_{n>=1} chi(n) / (n + a), a >= 0.
LEvaluation shifted_l1(const Character& chi, double a);
LEvaluation shifted_l1(const Character& chi, const DigammaTable& table);

/// sum_{n>=1} chi(n) / (n (n + a)) = (L(1, chi) - L(1, chi, a)) / a, a > 0.
LEvaluation aux_sum(const Character& chi, double a);
LEvaluation aux_sum(const Character& chi, const DigammaTable& at_zero, const DigammaTable& at_a);

/// L(1, chi) - a * aux_sum(chi, a); reduces to l1_closed at a = 0.
LEvaluation l1a_via_lemma1(const Character& chi, double a);

/// Direct summation of chi(n) / (n + a) over `blocks` complete periods,
/// plus the leading tail term -(sum_r r chi(r)) sum_{j>=blocks} (jq + a)^-2.
/// abs_error_estimate bounds the neglected tail and the rounding of the sum.
LEvaluation block_series_oracle(const Character& chi, double a, std::uint64_t blocks);

}  // namespace charmean

#endif  // CHARMEAN_LFUNC_HPP
