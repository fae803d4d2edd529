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

#ifndef CHARMEAN_GAUSS_HPP
#define CHARMEAN_GAUSS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "charmean/chargroup.hpp"

namespace charmean {

enum class GaussMethod { direct, structural };

struct GaussValue {
  std::complex<double> value;
  std::uint64_t modulus = 0;
  GaussMethod method = GaussMethod::direct;
};

/// G(m, chi) = sum_{a=1}^{q} chi(a) e(a m / q), summed pairwise over the
/// group's additive root table. m is reduced mod q.
GaussValue gauss_sum(std::int64_t m, const Character& chi);

/// tau(chi) = G(1, chi).
inline std::complex<double> tau(const Character& chi) { return gauss_sum(1, chi).value; }

/// |tau(chi)|^2 without summation. Per prime power p^alpha of q the local
/// factor is p^alpha when the local component is primitive, 1 when alpha is
/// 1 and the component is principal (tau of the principal character mod p
/// is mu(p)), and 0 otherwise (non-primitive with alpha >= 2).
std::uint64_t tau_abs_sq_fast(const Character& chi);
double tau_abs_fast(const Character& chi);

struct TauRow {
  std::uint64_t index = 0;
  std::complex<double> tau;
  double abs_direct = 0.0;
  double abs_fast = 0.0;
};

/// One row per character in index order. Bit-identical for any thread count.
std::vector<TauRow> tau_table(const CharacterGroup& group, int threads = 0);

}  // namespace charmean

#endif  // CHARMEAN_GAUSS_HPP
