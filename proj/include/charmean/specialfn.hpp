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

#ifndef CHARMEAN_SPECIALFN_HPP
#define CHARMEAN_SPECIALFN_HPP

namespace charmean {

struct SpecialValue {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

/// Digamma psi(x) for x > 0: upward recurrence to x >= 16, then the
/// Stirling series with seven Bernoulli terms. Throws std::domain_error for
/// x <= 0 or NaN.
SpecialValue digamma_eval(double x);
double digamma(double x);

/// zeta(2, alpha) = sum_{n>=0} (n + alpha)^-2, i.e. the trigamma function.
SpecialValue hurwitz_zeta2_eval(double alpha);
double hurwitz_zeta2(double alpha);

/// pi^2 / 6.
double zeta2();

}  // namespace charmean

#endif  // CHARMEAN_SPECIALFN_HPP
