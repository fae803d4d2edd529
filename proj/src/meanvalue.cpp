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

#include "charmean/meanvalue.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "charmean/arith.hpp"
#include "charmean/chargroup.hpp"
#include "charmean/gauss.hpp"
#include "charmean/lfunc.hpp"
#include "charmean/parallel.hpp"
#include "charmean/specialfn.hpp"

namespace charmean {

namespace {

void require_modulus(std::uint64_t q, const char* what) {
  if (q < 3) throw std::domain_error(std::string(what) + ": q must be >= 3");
}

void require_nonnegative(double x, const char* name, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": " + name + " must be finite and >= 0");
  }
}

void require_theorem_shift(double a, const char* what) {
  if (!(a >= 1.0) || !std::isfinite(a)) throw std::domain_error(std::string(what) + ": a must be >= 1");
}

double tau_weight(const Character& chi, const std::vector<std::complex<double>>& values, double m, TauPath path) {
  if (m == 0.0) return 1.0;
  if (path == TauPath::structural) {
    return real_power(static_cast<double>(tau_abs_sq_fast(chi)), 0.5 * m);
  }
  const auto roots = chi.group().additive_roots();
  std::vector<std::complex<double>> terms(values.size());
  for (std::size_t a = 0; a < values.size(); ++a) terms[a] = values[a] * roots[a];
  return real_power(std::abs(pairwise_sum(terms)), m);
}

double relative(double abs_err, double main) {
  return main == 0.0 ? std::numeric_limits<double>::infinity() : abs_err / std::abs(main);
}

// Groups and primitive characters mod N d shared by lemmas 6 and 7.
struct PrimitiveSetup {
  Factorization factorization;
  MNSplit split;
  std::shared_ptr<const CharacterGroup> inner;  // mod N d
  std::shared_ptr<const CharacterGroup> outer;  // mod q
  std::vector<std::uint64_t> primitive;         // indices into inner
};

PrimitiveSetup primitive_setup(std::uint64_t q, std::uint64_t d, double a, const char* what) {
  require_modulus(q, what);
  require_theorem_shift(a, what);
  PrimitiveSetup s;
  s.factorization = factorize(q);
  s.split = split_mn(s.factorization);
  if (d == 0 || s.split.m_part % d != 0) {
    throw std::domain_error("d must divide M=" + std::to_string(s.split.m_part));
  }
  const std::uint64_t nd = s.split.n_part * d;
  if (nd == 1) throw std::domain_error(std::string(what) + ": N d = 1 leaves only the principal character");
  s.inner = CharacterGroup::build(nd);
  s.outer = CharacterGroup::build(q);
  for (std::uint64_t i = 0; i < s.inner->size(); ++i) {
    if (s.inner->character(i).is_primitive()) s.primitive.push_back(i);
  }
  return s;
}

// sum_{k | q} mu(k) f(k) over squarefree divisors in ascending order.
template <typename F>
double moebius_sum(const Factorization& f, F&& term) {
  double total = 0.0;
  for (std::uint64_t k : divisors(f)) {
    const int mu = moebius(k);
    if (mu != 0) total += mu * term(static_cast<double>(k));
  }
  return total;
}

double floor_harmonic(double a, double k) { return harmonic(static_cast<std::uint64_t>(std::floor(a / k))); }

double theorem_base(const MNSplit& split, double m) {
  const double n = static_cast<double>(split.n_part);
  const double phi_n = static_cast<double>(euler_phi(split.n_part));
  return real_power(n, 0.5 * m - 1.0) * phi_n * phi_n * squarefree_weight_product(split.m_part, m);
}

}  // namespace

double real_power(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  if (base == 0.0) return 0.0;
  return std::exp(exponent * std::log(base));
}

double lhs_weighted(std::uint64_t q, double m, double a, const MeanValueOptions& options) {
  require_modulus(q, "lhs_weighted");
  require_nonnegative(m, "m", "lhs_weighted");
  require_nonnegative(a, "a", "lhs_weighted");
  const auto group = CharacterGroup::build(q);
  const DigammaTable table(q, a);
  const auto contributions =
      parallel_map<double>(group->size() - 1, resolve_threads(options.threads), [&](std::size_t i) {
        const Character chi = group->character(i + 1);
        const auto values = chi.value_table();
        const double weight = tau_weight(chi, values, m, options.tau_path);
        if (weight == 0.0) return 0.0;
        return weight * std::norm(shifted_l1_from_values(values, table).value);
      });
  return pairwise_sum(contributions);
}

double coprime_inverse_square_kernel(std::uint64_t q, double a) {
  if (q == 0) throw std::domain_error("coprime_inverse_square_kernel: q must be >= 1");
  if (!(a > 0.0)) throw std::domain_error("coprime_inverse_square_kernel: a must be > 0");
  return moebius_sum(factorize(q), [&](double k) { return hurwitz_zeta2(a / k) / (k * k); });
}

double squarefree_weight_product(std::uint64_t M, double m) {
  double product = 1.0;
  for (const auto& pp : factorize(M).factors) {
    const double p = static_cast<double>(pp.prime);
    const double pm = real_power(p, 0.5 * m);
    product *= p * pm - 2.0 * pm + 1.0;
  }
  return product;
}

double main_term_theorem(std::uint64_t q, double m, double a) {
  require_modulus(q, "main_term_theorem");
  if (!(m > 0.0) || !std::isfinite(m)) throw std::domain_error("main_term_theorem: m must be > 0");
  require_theorem_shift(a, "main_term_theorem");
  return theorem_base(split_mn(q), m) * coprime_inverse_square_kernel(q, a);
}

MeanValueReport mean_value_report(std::uint64_t q, double m, double a, const MeanValueOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MeanValueReport r;
  r.q = q;
  r.m = m;
  r.a = a;
  r.main = main_term_theorem(q, m, a);
  const auto split = split_mn(q);
  r.M = split.m_part;
  r.N = split.n_part;
  r.lhs = lhs_weighted(q, m, a, options);
  r.abs_err = std::abs(r.lhs - r.main);
  r.rel_err = relative(r.abs_err, r.main);
  r.norm_err = r.abs_err / real_power(static_cast<double>(q), 0.5 * m);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

LemmaReport lemma5_check(std::uint64_t q, double m, const MeanValueOptions& options) {
  require_modulus(q, "lemma5_check");
  if (!(m > 0.0) || !std::isfinite(m)) throw std::domain_error("lemma5_check: m must be > 0");
  const auto f = factorize(q);
  const auto split = split_mn(f);
  double all_primes = 1.0;
  double exact_primes = 1.0;
  for (const auto& pp : f.factors) {
    const double p = static_cast<double>(pp.prime);
    all_primes *= 1.0 - 1.0 / (p * p);
    if (pp.exponent == 1) exact_primes *= 1.0 - 1.0 / (p * p);
  }
  const double base = theorem_base(split, m) * zeta2();
  LemmaReport r;
  r.which = LemmaKind::lemma5;
  r.q = q;
  r.m = m;
  r.lhs = lhs_weighted(q, m, 0.0, options);
  r.main = base * all_primes;
  r.main_literal = base * exact_primes;
  r.abs_err = std::abs(r.lhs.real() - r.main);
  r.rel_err = relative(r.abs_err, r.main);
  r.error_scale = real_power(static_cast<double>(q), 0.5 * m);
  return r;
}

double lemma6_main(std::uint64_t q, std::uint64_t d, double a) {
  const auto f = factorize(q);
  const auto split = split_mn(f);
  const double n = static_cast<double>(split.n_part);
  const double phi_n = static_cast<double>(euler_phi(split.n_part));
  const double prefactor = phi_n * phi_n / n * static_cast<double>(primitive_count(d));
  const double first = zeta2() * moebius_sum(f, [&](double k) { return 1.0 / (a * k * k); });
  const double second = moebius_sum(f, [&](double k) { return floor_harmonic(a, k) / (a * a * k); });
  return prefactor * (first - second);
}

double lemma7_main(std::uint64_t q, std::uint64_t d, double a) {
  const auto f = factorize(q);
  const auto split = split_mn(f);
  const double n = static_cast<double>(split.n_part);
  const double phi_n = static_cast<double>(euler_phi(split.n_part));
  const double prefactor = phi_n * phi_n / n * static_cast<double>(primitive_count(d));
  const double a2 = a * a;
  const double first = zeta2() * moebius_sum(f, [&](double k) { return 1.0 / (a2 * k * k); });
  const double second = moebius_sum(f, [&](double k) { return hurwitz_zeta2(a / k) / (a2 * k * k); });
  const double third = 2.0 * moebius_sum(f, [&](double k) { return floor_harmonic(a, k) / (a2 * a * k); });
  return prefactor * (first + second - third);
}

namespace {

LemmaReport primitive_lemma(LemmaKind kind, std::uint64_t q, std::uint64_t d, double a,
                            const MeanValueOptions& options) {
  const char* what = kind == LemmaKind::lemma6 ? "lemma6_check" : "lemma7_check";
  const auto s = primitive_setup(q, d, a, what);
  const DigammaTable at_zero(q, 0.0);
  const DigammaTable at_a(q, a);
  const auto contributions = parallel_map<std::complex<double>>(
      s.primitive.size(), resolve_threads(options.threads), [&](std::size_t i) {
        const Character lifted = induce(s.inner->character(s.primitive[i]), s.outer);
        const auto aux = aux_sum(lifted, at_zero, at_a).value;
        if (kind == LemmaKind::lemma7) return std::complex<double>(std::norm(aux), 0.0);
        return aux * l1_closed(conjugate(lifted), at_zero).value;
      });
  LemmaReport r;
  r.which = kind;
  r.q = q;
  r.d = d;
  r.a = a;
  r.lhs = pairwise_sum(contributions);
  r.main = kind == LemmaKind::lemma6 ? lemma6_main(q, d, a) : lemma7_main(q, d, a);
  r.main_literal = std::numeric_limits<double>::quiet_NaN();
  r.abs_err = std::abs(r.lhs - r.main);
  r.rel_err = relative(r.abs_err, r.main);
  r.error_scale = 1.0;
  return r;
}

}  // namespace

LemmaReport lemma6_check(std::uint64_t q, std::uint64_t d, double a, const MeanValueOptions& options) {
  return primitive_lemma(LemmaKind::lemma6, q, d, a, options);
}

LemmaReport lemma7_check(std::uint64_t q, std::uint64_t d, double a, const MeanValueOptions& options) {
  return primitive_lemma(LemmaKind::lemma7, q, d, a, options);
}

double ref7_main(std::uint64_t q, double a) {
  const auto f = factorize(q);
  const double phi = static_cast<double>(euler_phi(f));
  const double diagonal = phi * coprime_inverse_square_kernel(q, a);
  const double harmonic_term = 4.0 * phi / a * moebius_sum(f, [&](double k) { return floor_harmonic(a, k) / k; });
  return diagonal - harmonic_term;
}

LemmaReport ref7_check(std::uint64_t q, double a, const MeanValueOptions& options) {
  require_modulus(q, "ref7_check");
  require_theorem_shift(a, "ref7_check");
  LemmaReport r;
  r.which = LemmaKind::ref7;
  r.q = q;
  r.a = a;
  r.lhs = lhs_weighted(q, 0.0, a, options);
  r.main = ref7_main(q, a);
  r.main_literal = std::numeric_limits<double>::quiet_NaN();
  r.abs_err = std::abs(r.lhs.real() - r.main);
  r.rel_err = relative(r.abs_err, r.main);
  const double dq = static_cast<double>(q);
  r.error_scale = static_cast<double>(euler_phi(q)) * std::log(dq) / std::sqrt(dq);
  return r;
}

Decomposition c_decomposition(std::uint64_t q, double m, double a, const MeanValueOptions& options) {
  require_modulus(q, "c_decomposition");
  require_nonnegative(m, "m", "c_decomposition");
  if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("c_decomposition: a must be > 0");
  const auto group = CharacterGroup::build(q);
  const DigammaTable at_zero(q, 0.0);
  const DigammaTable at_a(q, a);
  struct Terms {
    std::complex<double> c1, c2, c3, c4;
  };
  const auto terms = parallel_map<Terms>(group->size() - 1, resolve_threads(options.threads), [&](std::size_t i) {
    const Character chi = group->character(i + 1);
    const auto values = chi.value_table();
    const double w = tau_weight(chi, values, m, options.tau_path);
    const auto l0 = shifted_l1_from_values(values, at_zero).value;
    const auto la = shifted_l1_from_values(values, at_a).value;
    const auto aux = (l0 - la) / a;
    const auto l0_conj = std::conj(l0);
    return Terms{w * l0 * l0_conj, w * aux * l0_conj, w * std::conj(aux) * l0, w * aux * std::conj(aux)};
  });
  std::vector<std::complex<double>> c1(terms.size()), c2(terms.size()), c3(terms.size()), c4(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    c1[i] = terms[i].c1;
    c2[i] = terms[i].c2;
    c3[i] = terms[i].c3;
    c4[i] = terms[i].c4;
  }
  Decomposition out;
  out.a = a;
  out.c1 = pairwise_sum(c1);
  out.c2 = pairwise_sum(c2);
  out.c3 = pairwise_sum(c3);
  out.c4 = pairwise_sum(c4);
  out.recombined = (out.c1 - a * out.c2 - a * out.c3 + a * a * out.c4).real();
  return out;
}

ProbeReport interpretation_probe(std::uint64_t q, double m, double a, const MeanValueOptions& options) {
  require_modulus(q, "interpretation_probe");
  if (!(m > 0.0) || !std::isfinite(m)) throw std::domain_error("interpretation_probe: m must be > 0");
  require_theorem_shift(a, "interpretation_probe");
  const auto f = factorize(q);
  const auto split = split_mn(f);
  const double base = theorem_base(split, m);
  double all_primes = 1.0;
  double exact_primes = 1.0;
  for (const auto& pp : f.factors) {
    const double p = static_cast<double>(pp.prime);
    all_primes *= 1.0 - 1.0 / (p * p);
    if (pp.exponent == 1) exact_primes *= 1.0 - 1.0 / (p * p);
  }
  ProbeReport r;
  r.q = q;
  r.M = split.m_part;
  r.N = split.n_part;
  r.m = m;
  r.a = a;
  r.lhs = lhs_weighted(q, m, a, options);
  const double zeta_a = hurwitz_zeta2(a);
  r.candidates = {{
      {"canonical_moebius_hurwitz", base * coprime_inverse_square_kernel(q, a), 0.0},
      {"literal_prod_p_divides_q", base * zeta_a * all_primes, 0.0},
      {"literal_prod_p_exactly_divides_q", base * zeta_a * exact_primes, 0.0},
  }};
  for (auto& c : r.candidates) c.rel_err = relative(std::abs(r.lhs - c.main), c.main);
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    if (r.candidates[i].rel_err >= 0.05) continue;
    bool others_far = true;
    for (std::size_t j = 0; j < r.candidates.size(); ++j) {
      if (j != i && !(r.candidates[j].rel_err > 0.15)) others_far = false;
    }
    if (others_far) r.verdict = i;
  }
  return r;
}

const char* to_string(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::lemma5: return "5";
    case LemmaKind::lemma6: return "6";
    case LemmaKind::lemma7: return "7";
    case LemmaKind::ref7: return "ref7";
  }
  return "?";
}

}  // namespace charmean
