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

#include "charmean/gauss.hpp"

#include <algorithm>
#include <cmath>

#include "charmean/parallel.hpp"

namespace charmean {

namespace {

std::complex<double> gauss_sum_from_table(std::int64_t m, const CharacterGroup& group,
                                          const std::vector<std::complex<double>>& values) {
  const std::uint64_t q = group.modulus();
  const auto sq = static_cast<std::int64_t>(q);
  const auto mm = static_cast<std::uint64_t>(((m % sq) + sq) % sq);
  const auto roots = group.additive_roots();
  std::vector<std::complex<double>> terms(q);
  for (std::uint64_t a = 0; a < q; ++a) terms[a] = values[a] * roots[mul_mod(a, mm, q)];
  return pairwise_sum(terms);
}

}  // namespace

GaussValue gauss_sum(std::int64_t m, const Character& chi) {
  return {gauss_sum_from_table(m, chi.group(), chi.value_table()), chi.modulus(), GaussMethod::direct};
}

std::uint64_t tau_abs_sq_fast(const Character& chi) {
  const auto comps = chi.group().components();
  const auto exps = chi.exponents();
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    std::vector<std::uint64_t> local(comps.size(), 0);
    local[i] = exps[i];
    std::size_t width = 1;
    if (c.prime == 2 && c.alpha >= 3) {
      local[i + 1] = exps[i + 1];
      width = 2;
    }
    const bool trivial = std::all_of(local.begin(), local.end(), [](auto k) { return k == 0; });
    const std::uint64_t local_conductor = chi.group().conductor(local);
    if (local_conductor == c.factor_modulus) {
      result *= c.factor_modulus;
    } else if (!(c.alpha == 1 && trivial)) {
      return 0;
    }
    i += width - 1;
  }
  return result;
}

double tau_abs_fast(const Character& chi) { return std::sqrt(static_cast<double>(tau_abs_sq_fast(chi))); }

std::vector<TauRow> tau_table(const CharacterGroup& group, int threads) {
  return parallel_map<TauRow>(group.size(), resolve_threads(threads), [&](std::size_t i) {
    const Character chi = group.character(i);
    TauRow row;
    row.index = i;
    row.tau = gauss_sum_from_table(1, group, chi.value_table());
    row.abs_direct = std::abs(row.tau);
    row.abs_fast = tau_abs_fast(chi);
    return row;
  });
}

}  // namespace charmean
