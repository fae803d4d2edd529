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

#include "charmean/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "charmean/arith.hpp"
#include "charmean/chargroup.hpp"
#include "charmean/gauss.hpp"
#include "charmean/lfunc.hpp"
#include "charmean/meanvalue.hpp"
#include "charmean/oracle.hpp"
#include "charmean/parallel.hpp"
#include "charmean/specialfn.hpp"

namespace charmean::verify {

namespace {

using Clock = std::chrono::steady_clock;
using Complex = std::complex<double>;

std::string at_q(std::uint64_t q, const std::string& rest = {}) {
  return "q=" + std::to_string(q) + (rest.empty() ? "" : " " + rest);
}

InvariantResult invariant(std::string name, double tolerance) {
  InvariantResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  return r;
}

// Runs per_q(q) for q in [lo, hi] in parallel and merges the per-q rows in
// ascending q, so the report does not depend on the thread count.
template <typename PerQ>
std::vector<InvariantResult> sweep_moduli(std::uint64_t lo, std::uint64_t hi, int threads, PerQ&& per_q) {
  if (hi < lo) return {};
  const auto parts = parallel_map<std::vector<InvariantResult>>(
      hi - lo + 1, resolve_threads(threads), [&](std::size_t i) { return per_q(lo + i); });
  std::vector<InvariantResult> merged = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (std::size_t k = 0; k < merged.size(); ++k) merged[k].merge(parts[i][k]);
  }
  return merged;
}

std::vector<InvariantResult> identities_for(std::uint64_t q) {
  auto orthogonality = invariant("orthogonality", 1e-10);
  auto lemma1 = invariant("lemma1_identity", 1e-9);
  auto tau_paths = invariant("tau_direct_vs_structural", 1e-8 * std::sqrt(static_cast<double>(q)));
  auto prim_sum = invariant("primitive_char_sum_vs_enumeration", 0.0);
  auto prim_count = invariant("primitive_count_vs_enumeration", 0.0);
  auto conductor_sum = invariant("conductor_partition", 0.0);

  const auto group = CharacterGroup::build(q);
  const std::uint64_t phi = group->size();
  std::vector<std::vector<Complex>> tables;
  std::vector<bool> primitive;
  tables.reserve(phi);
  for (std::uint64_t i = 0; i < phi; ++i) {
    const Character chi = group->character(i);
    tables.push_back(chi.value_table());
    primitive.push_back(chi.is_primitive());
  }

  for (std::uint64_t n = 0; n < q; ++n) {
    std::vector<Complex> column(phi);
    for (std::uint64_t i = 0; i < phi; ++i) column[i] = tables[i][n];
    const Complex total = pairwise_sum(column);
    const double expected = (n == 1 % q) ? static_cast<double>(phi) : 0.0;
    orthogonality.record(std::abs(total - expected), at_q(q, "n=" + std::to_string(n)));
  }

  constexpr double kShifts[] = {0.0, 1.0, 2.0, 3.5};
  for (std::uint64_t i = 1; i < phi; ++i) {
    const Character chi = group->character(i);
    for (double a : kShifts) {
      const auto via = l1a_via_lemma1(chi, a);
      const auto direct = shifted_l1(chi, a);
      lemma1.record(std::abs(via.value - direct.value),
                    at_q(q, "chi=" + std::to_string(i) + " a=" + std::to_string(a)));
    }
  }

  const auto rows = tau_table(*group, 1);
  for (const auto& row : rows) {
    tau_paths.record(std::abs(row.abs_direct - row.abs_fast), at_q(q, "chi=" + std::to_string(row.index)));
  }

  std::uint64_t enumerated_primitive = 0;
  for (bool p : primitive) enumerated_primitive += p ? 1 : 0;
  prim_count.record(enumerated_primitive == primitive_count(q) ? 0.0 : 1.0, at_q(q));

  for (std::uint64_t r = 1; r < q; ++r) {
    if (std::gcd(r, q) != 1) continue;
    Complex total = 0.0;
    for (std::uint64_t i = 0; i < phi; ++i) {
      if (primitive[i]) total += tables[i][r];
    }
    const auto closed = static_cast<double>(primitive_char_sum(q, static_cast<std::int64_t>(r)));
    const double rounded = std::round(total.real());
    const bool integral = std::abs(total - rounded) < 1e-8;
    prim_sum.record(integral && rounded == closed ? 0.0 : std::abs(total - closed) + 1.0,
                    at_q(q, "r=" + std::to_string(r)));
  }

  std::uint64_t partition = 0;
  for (std::uint64_t d : divisors(q)) partition += primitive_count(d);
  conductor_sum.record(partition == phi ? 0.0 : 1.0, at_q(q));

  return {orthogonality, lemma1, tau_paths, prim_sum, prim_count, conductor_sum};
}

std::vector<InvariantResult> lemma_checks_for(std::uint64_t q, std::uint64_t qmax) {
  auto lemma2 = invariant("lemma2_tau_multiplicative", 1e-9);
  auto crt = invariant("crt_factor_round_trip", 1e-12);
  auto twist = invariant("twisted_gauss_sum_modulus", 1e-8);
  auto decomposition = invariant("c_decomposition_identity", 1e-9);
  auto kernel = invariant("coprime_diagonal_kernel", 1e-8);
  auto conj = invariant("l_value_conjugation", 1e-12);
  auto scaling = invariant("tau_path_scaling_invariance", 1e-8);
  auto positivity = invariant("main_term_and_lhs_positive", 0.0);

  const auto group = CharacterGroup::build(q);
  const auto f = factorize(q);
  const double sqrt_q = std::sqrt(static_cast<double>(q));

  if (q <= std::min<std::uint64_t>(qmax, 200) && f.factors.size() >= 2) {
    const std::uint64_t u = f.factors.front().value();
    const std::uint64_t v = q / u;
    for (std::uint64_t i = 0; i < group->size(); ++i) {
      const Character chi = group->character(i);
      const auto [cu, cv] = crt_factor(chi, u, v);
      const double whole = std::abs(tau(chi));
      const double parts = std::abs(tau(cu)) * std::abs(tau(cv));
      const double err = parts > 1e-6 ? std::abs(whole - parts) / parts : std::abs(whole - parts) / sqrt_q;
      lemma2.record(err, at_q(q, "chi=" + std::to_string(i)));
      double worst = 0.0;
      for (std::uint64_t n = 0; n < q; ++n) {
        const auto sn = static_cast<std::int64_t>(n);
        worst = std::max(worst, std::abs(chi(sn) - cu(sn) * cv(sn)));
      }
      crt.record(worst, at_q(q, "chi=" + std::to_string(i)));
    }
  }

  if (q <= std::min<std::uint64_t>(qmax, 100)) {
    for (std::uint64_t i = 1; i < group->size(); ++i) {
      const Character chi = group->character(i);
      for (double a : {0.0, 1.5}) {
        const auto l = shifted_l1(chi, a).value;
        const auto lc = shifted_l1(conjugate(chi), a).value;
        conj.record(std::abs(lc - std::conj(l)), at_q(q, "chi=" + std::to_string(i)));
      }
      if (!chi.is_primitive()) continue;
      const double t = std::abs(tau(chi));
      for (std::int64_t m = 2; m < static_cast<std::int64_t>(q); ++m) {
        if (std::gcd(static_cast<std::uint64_t>(m), q) != 1) continue;
        twist.record(std::abs(std::abs(gauss_sum(m, chi).value) - t) / t, at_q(q, "m=" + std::to_string(m)));
      }
    }
  }

  if (q <= std::min<std::uint64_t>(qmax, 60)) {
    for (double m : {0.0, 1.0, 2.0}) {
      for (double a : {1.0, 2.0}) {
        const auto c = c_decomposition(q, m, a, {1, TauPath::structural});
        const double lhs = lhs_weighted(q, m, a, {1, TauPath::structural});
        decomposition.record(std::abs(c.recombined - lhs) / (1.0 + lhs),
                             at_q(q, "m=" + std::to_string(m) + " a=" + std::to_string(a)));
      }
    }
  }

  if (q <= std::min<std::uint64_t>(qmax, 500)) {
    for (double a : {1.0, 2.0, 3.0}) {
      const double closed = coprime_inverse_square_kernel(q, a);
      const double series = oracle::coprime_inverse_square_series(q, a);
      kernel.record(std::abs(closed - series), at_q(q, "a=" + std::to_string(a)));
    }
  }

  if (q <= std::min<std::uint64_t>(qmax, 300)) {
    const double a = 1.0;
    for (double m : {1.0, 2.0}) {
      const double scale = real_power(static_cast<double>(q), 0.5 * m);
      const double fast = lhs_weighted(q, m, a, {1, TauPath::structural}) / scale;
      const double direct = lhs_weighted(q, m, a, {1, TauPath::direct}) / scale;
      scaling.record(std::abs(fast - direct) / std::abs(fast), at_q(q, "m=" + std::to_string(m)));
    }
  }

  if (q <= std::min<std::uint64_t>(qmax, 60)) {
    for (double m : {1.0, 2.0}) {
      for (double a : {1.0, 2.0}) {
        const double main = main_term_theorem(q, m, a);
        const double lhs = lhs_weighted(q, m, a, {1, TauPath::structural});
        positivity.record(main > 0.0 && lhs >= 0.0 ? 0.0 : 1.0, at_q(q));
      }
    }
  }

  return {lemma2, crt, twist, decomposition, kernel, conj, scaling, positivity};
}

}  // namespace

void InvariantResult::record(double error, const std::string& where) {
  ++checked;
  if (std::isnan(error) || error > max_error) max_error = error;
  if (!(error <= tolerance)) {
    if (violations == 0) detail = where + " error=" + std::to_string(error);
    ++violations;
  }
}

void InvariantResult::merge(const InvariantResult& other) {
  if (violations == 0 && other.violations > 0) detail = other.detail;
  checked += other.checked;
  violations += other.violations;
  if (std::isnan(other.max_error) || other.max_error > max_error) max_error = other.max_error;
}

bool VerifyReport::pass() const {
  for (const auto& r : rows) {
    if (!r.pass()) return false;
  }
  return !rows.empty();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["command"] = "verify";
  j["suite"] = suite;
  j["qmax"] = qmax;
  j["seconds"] = seconds;
  j["pass"] = pass();
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"invariant", r.name},
                         {"pass", r.pass()},
                         {"checked", r.checked},
                         {"violations", r.violations},
                         {"max_error", std::isfinite(r.max_error) ? nlohmann::json(r.max_error) : nlohmann::json()},
                         {"tolerance", r.tolerance},
                         {"detail", r.detail}});
  }
  return j.dump(2);
}

VerifyReport run_identities(std::uint64_t qmax, int threads) {
  if (qmax < 3) throw std::domain_error("verify: qmax must be >= 3");
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "identities";
  report.qmax = qmax;
  report.rows = sweep_moduli(3, qmax, threads, identities_for);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerifyReport run_lemmas(std::uint64_t qmax, int threads) {
  if (qmax < 3) throw std::domain_error("verify: qmax must be >= 3");
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "lemmas";
  report.qmax = qmax;
  report.rows = sweep_moduli(3, qmax, threads, [&](std::uint64_t q) { return lemma_checks_for(q, qmax); });

  // Lemma 3: every non-primitive character mod a prime power p^alpha with
  // alpha >= 2 has tau = 0.
  auto vanishing = invariant("lemma3_tau_vanishing", 1e-9);
  for (std::uint64_t pe : {4, 8, 9, 16, 25, 27}) {
    const auto group = CharacterGroup::build(pe);
    for (std::uint64_t i = 0; i < group->size(); ++i) {
      const Character chi = group->character(i);
      if (chi.is_primitive()) continue;
      vanishing.record(std::abs(tau(chi)) / static_cast<double>(pe), at_q(pe, "chi=" + std::to_string(i)));
    }
  }
  report.rows.push_back(vanishing);

  // Closed form against the block-series oracle on random triples.
  // Normalized by the declared bounds, so the tolerance is 1.
  auto blocks = invariant("closed_form_vs_block_series", 1.0);
  std::mt19937_64 rng(20260115);
  const std::uint64_t qcap = std::min<std::uint64_t>(qmax, 100);
  std::uniform_int_distribution<std::uint64_t> pick_q(3, qcap);
  std::uniform_real_distribution<double> pick_a(0.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t q = pick_q(rng);
    const auto group = CharacterGroup::build(q);
    std::uniform_int_distribution<std::uint64_t> pick_chi(1, group->size() - 1);
    const Character chi = group->character(pick_chi(rng));
    const double a = pick_a(rng);
    const auto closed = shifted_l1(chi, a);
    const auto series = block_series_oracle(chi, a, 20000);
    const double allowed = series.abs_error_estimate + closed.abs_error_estimate;
    blocks.record(std::abs(closed.value - series.value) / allowed,
                  at_q(q, "chi=" + std::to_string(chi.index()) + " a=" + std::to_string(a)));
  }
  report.rows.push_back(blocks);

  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerifyReport run_special(int threads) {
  const auto start = Clock::now();
  VerifyReport report;
  report.suite = "special";

  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> wide(1e-3, 50.0);
  std::vector<double> args(100);
  for (double& x : args) x = wide(rng);
  const unsigned workers = resolve_threads(threads);

  auto digamma_oracle = invariant("digamma_vs_series", 1e-10);
  auto trigamma_oracle = invariant("hurwitz_zeta2_vs_series", 1e-10);
  const auto psi_ref = parallel_map<double>(args.size(), workers, [&](std::size_t i) {
    return oracle::digamma_series(args[i]);
  });
  const auto zeta_ref = parallel_map<double>(args.size(), workers, [&](std::size_t i) {
    return oracle::hurwitz_zeta2_series(args[i]);
  });
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string where = "x=" + std::to_string(args[i]);
    digamma_oracle.record(std::abs(digamma(args[i]) - psi_ref[i]) / std::abs(psi_ref[i]), where);
    trigamma_oracle.record(std::abs(hurwitz_zeta2(args[i]) - zeta_ref[i]) / std::abs(zeta_ref[i]), where);
  }

  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  auto zeta_one = invariant("hurwitz_zeta2_at_1", 1e-13);
  zeta_one.record(std::abs(hurwitz_zeta2(1.0) - pi2_6) / pi2_6, "alpha=1");
  zeta_one.record(std::abs(hurwitz_zeta2(1.0) - zeta2()), "zeta2()");

  auto known = invariant("digamma_known_values", 1e-13);
  constexpr double kGamma = 0.57721566490153286061;
  known.record(std::abs(digamma(1.0) + kGamma) / kGamma, "x=1");
  known.record(std::abs(digamma(2.0) - (1.0 - kGamma)) / (1.0 - kGamma), "x=2");
  const double half = -kGamma - 2.0 * std::numbers::ln2;
  known.record(std::abs(digamma(0.5) - half) / std::abs(half), "x=1/2");

  // Tolerance scales with the size of the recurrence step 1/x.
  auto recurrence = invariant("digamma_recurrence", 1e-13);
  auto shift = invariant("hurwitz_zeta2_shift", 1e-12);
  std::uniform_real_distribution<double> spread(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    double x = spread(rng);
    if (x <= 0.0) x = 0.5;
    const std::string where = "x=" + std::to_string(x);
    recurrence.record(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) / (1.0 + 1.0 / x), where);
    const double step = 1.0 / (x * x);
    shift.record(std::abs(hurwitz_zeta2(x) - hurwitz_zeta2(x + 1.0) - step) / step, where);
  }

  auto reflection = invariant("trigamma_reflection", 1e-10);
  for (double x : {1.0 / 3.0, 0.25, 0.4}) {
    const double s = std::sin(std::numbers::pi * x);
    const double expected = std::numbers::pi * std::numbers::pi / (s * s);
    reflection.record(std::abs(hurwitz_zeta2(x) + hurwitz_zeta2(1.0 - x) - expected) / expected,
                      "x=" + std::to_string(x));
  }

  report.rows = {digamma_oracle, trigamma_oracle, zeta_one, known, recurrence, shift, reflection};
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

VerifyReport run_suite(std::string_view suite, std::uint64_t qmax, int threads) {
  if (suite == "identities") return run_identities(qmax, threads);
  if (suite == "lemmas") return run_lemmas(qmax, threads);
  if (suite == "special") return run_special(threads);
  throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace charmean::verify
