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

#ifndef CHARMEAN_MEANVALUE_HPP
#define CHARMEAN_MEANVALUE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace charmean {

/// Which |tau(chi)| is used as the weight: the structural product formula
/// or the directly summed Gauss sum.
enum class TauPath { structural, direct };

struct MeanValueOptions {
  int threads = 0;  // 0: CHARMEAN_THREADS, then hardware concurrency
  TauPath tau_path = TauPath::structural;
};

struct MeanValueReport {
  std::uint64_t q = 0;
  std::uint64_t M = 1;
  std::uint64_t N = 1;
  double m = 0.0;
  double a = 0.0;
  double lhs = 0.0;
  double main = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double norm_err = 0.0;  // abs_err / q^(m/2)
  double seconds = 0.0;
};

enum class LemmaKind { lemma5, lemma6, lemma7, ref7 };

struct LemmaReport {
  LemmaKind which = LemmaKind::lemma5;
  std::uint64_t q = 0;
  std::uint64_t d = 0;  // divisor of M for lemmas 6 and 7, 0 otherwise
  double m = 0.0;
  double a = 0.0;
  std::complex<double> lhs;
  double main = 0.0;
  /// Lemma 5 only: the main term with the product over p || q instead of
  /// p | q. NaN for the other checks.
  double main_literal = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  /// Size of the stated error term, used to normalize abs_err
  /// (phi(q) log q / sqrt q for ref7, q^(m/2) for lemma 5, 1 otherwise).
  double error_scale = 1.0;
};

struct Decomposition {
  std::complex<double> c1, c2, c3, c4;
  double a = 0.0;
  /// Re(C1 - a C2 - a C3 + a^2 C4).
  double recombined = 0.0;
};

struct ProbeCandidate {
  std::string name;
  double main = 0.0;
  double rel_err = 0.0;
};

struct ProbeReport {
  std::uint64_t q = 0;
  std::uint64_t M = 1;
  std::uint64_t N = 1;
  double m = 0.0;
  double a = 0.0;
  double lhs = 0.0;
  std::array<ProbeCandidate, 3> candidates;
  /// Index of the single candidate within 5% of lhs while every other one
  /// is off by more than 15%.
  std::optional<std::size_t> verdict;
};

/// base^exponent through exp/log, with 0^0 = 1 and 0^x = 0 for x > 0.
double real_power(double base, double exponent);

/// sum over non-principal chi mod q of |tau(chi)|^m |L(1, chi, a)|^2.
/// Requires q >= 3, m >= 0, a >= 0.
double lhs_weighted(std::uint64_t q, double m, double a, const MeanValueOptions& options = {});

/// sum_{k | q} mu(k) zeta(2, a/k) / k^2, which equals
/// sum_{n >= 0, (n, q) = 1} (n + a)^-2; for q >= 2 the n = 0 term drops out.
double coprime_inverse_square_kernel(std::uint64_t q, double a);

/// prod_{p | M} (p^(m/2+1) - 2 p^(m/2) + 1).
double squarefree_weight_product(std::uint64_t M, double m);

/// N^(m/2-1) phi(N)^2 [sum_{k|q} mu(k) zeta(2, a/k) / k^2] prod_{p|M}(...).
/// Requires q >= 3, m > 0, a >= 1.
double main_term_theorem(std::uint64_t q, double m, double a);

MeanValueReport mean_value_report(std::uint64_t q, double m, double a, const MeanValueOptions& options = {});

LemmaReport lemma5_check(std::uint64_t q, double m, const MeanValueOptions& options = {});
LemmaReport lemma6_check(std::uint64_t q, std::uint64_t d, double a, const MeanValueOptions& options = {});
LemmaReport lemma7_check(std::uint64_t q, std::uint64_t d, double a, const MeanValueOptions& options = {});
LemmaReport ref7_check(std::uint64_t q, double a, const MeanValueOptions& options = {});

/// Closed-form main terms of lemmas 6 and 7, zeta(2, a/k) inside the k-sum.
double lemma6_main(std::uint64_t q, std::uint64_t d, double a);
double lemma7_main(std::uint64_t q, std::uint64_t d, double a);
double ref7_main(std::uint64_t q, double a);

Decomposition c_decomposition(std::uint64_t q, double m, double a, const MeanValueOptions& options = {});

ProbeReport interpretation_probe(std::uint64_t q, double m, double a, const MeanValueOptions& options = {});

const char* to_string(LemmaKind kind);

}  // namespace charmean

#endif  // CHARMEAN_MEANVALUE_HPP
