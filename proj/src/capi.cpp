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


#include "charmean/charmean.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <system_error>

#include "charmean/arith.hpp"
#include "charmean/chargroup.hpp"
#include "charmean/gauss.hpp"
#include "charmean/lfunc.hpp"
#include "charmean/meanvalue.hpp"
#include "charmean/parallel.hpp"
#include "charmean/verify.hpp"

struct cm_group {
  std::shared_ptr<const charmean::CharacterGroup> group;
};

namespace {

thread_local std::string last_error;

cm_status fail(cm_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
cm_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return CM_OK;
  } catch (const std::domain_error& e) {
    return fail(CM_ERR_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(CM_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CM_ERR_ARGUMENT, e.what());
  } catch (const std::system_error& e) {
    return fail(CM_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CM_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be null");
}

charmean::MeanValueOptions to_options(const cm_options* options) {
  charmean::MeanValueOptions out;
  if (options != nullptr) {
    out.threads = options->threads;
    out.tau_path = options->tau_path == CM_TAU_DIRECT ? charmean::TauPath::direct : charmean::TauPath::structural;
  }
  return out;
}

charmean::Character character_at(const cm_group* group, std::uint64_t index) {
  require(group, "group");
  if (index >= group->group->size()) {
    throw std::domain_error("character index " + std::to_string(index) + " out of range for q=" +
                            std::to_string(group->group->modulus()));
  }
  return group->group->character(index);
}

cm_lemma_kind to_c(charmean::LemmaKind kind) {
  switch (kind) {
    case charmean::LemmaKind::lemma5: return CM_LEMMA5;
    case charmean::LemmaKind::lemma6: return CM_LEMMA6;
    case charmean::LemmaKind::lemma7: return CM_LEMMA7;
    case charmean::LemmaKind::ref7: return CM_REF7;
  }
  return CM_LEMMA5;
}

const char* intern_candidate_name(const std::string& name) {
  static const char* const kNames[] = {"canonical_moebius_hurwitz", "literal_prod_p_divides_q",
                                       "literal_prod_p_exactly_divides_q"};
  for (const char* known : kNames) {
    if (name == known) return known;
  }
  return "unknown";
}

}  // namespace

extern "C" {

const char* cm_version(void) { return "0.1.0"; }

const char* cm_last_error(void) { return last_error.c_str(); }

unsigned cm_resolve_threads(int requested) { return charmean::resolve_threads(requested); }

cm_status cm_is_prime(uint64_t n, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = charmean::is_prime(n) ? 1 : 0;
  });
}

cm_status cm_split_mn(uint64_t q, uint64_t* m_part, uint64_t* n_part) {
  return guarded([&] {
    require(m_part, "m_part");
    require(n_part, "n_part");
    if (q == 0) throw std::domain_error("q must be >= 1");
    const auto split = charmean::split_mn(q);
    *m_part = split.m_part;
    *n_part = split.n_part;
  });
}

cm_status cm_group_create(uint64_t q, cm_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (q == 0) throw std::domain_error("q must be >= 1");
    auto handle = std::make_unique<cm_group>();
    handle->group = charmean::CharacterGroup::build(q);
    *out = handle.release();
  });
}

void cm_group_destroy(cm_group* group) { delete group; }

uint64_t cm_group_modulus(const cm_group* group) { return group ? group->group->modulus() : 0; }

uint64_t cm_group_size(const cm_group* group) { return group ? group->group->size() : 0; }

size_t cm_group_rank(const cm_group* group) { return group ? group->group->components().size() : 0; }

cm_status cm_character_info_get(const cm_group* group, uint64_t index, cm_character_info* out) {
  return guarded([&] {
    require(out, "out");
    const auto chi = character_at(group, index);
    out->index = index;
    out->conductor = chi.conductor();
    out->order = chi.order();
    out->primitive = chi.is_primitive() ? 1 : 0;
    out->principal = chi.is_principal() ? 1 : 0;
  });
}

cm_status cm_character_exponents(const cm_group* group, uint64_t index, uint64_t* out, size_t capacity) {
  return guarded([&] {
    const auto chi = character_at(group, index);
    const auto exps = chi.exponents();
    if (exps.size() > capacity) throw std::invalid_argument("exponent buffer too small");
    if (!exps.empty()) {
      require(out, "out");
      std::memcpy(out, exps.data(), exps.size() * sizeof(uint64_t));
    }
  });
}

cm_status cm_character_value(const cm_group* group, uint64_t index, int64_t n, double* re, double* im) {
  return guarded([&] {
    require(re, "re");
    require(im, "im");
    const auto v = character_at(group, index)(n);
    *re = v.real();
    *im = v.imag();
  });
}

cm_status cm_gauss_sum(const cm_group* group, uint64_t index, int64_t m, double* re, double* im) {
  return guarded([&] {
    require(re, "re");
    require(im, "im");
    const auto g = charmean::gauss_sum(m, character_at(group, index)).value;
    *re = g.real();
    *im = g.imag();
  });
}

cm_status cm_tau_table(const cm_group* group, int threads, cm_tau_row* rows, size_t capacity) {
  return guarded([&] {
    require(group, "group");
    require(rows, "rows");
    if (capacity < group->group->size()) throw std::invalid_argument("row buffer too small");
    const auto table = charmean::tau_table(*group->group, threads);
    for (std::size_t i = 0; i < table.size(); ++i) {
      rows[i] = {table[i].index, table[i].tau.real(), table[i].tau.imag(), table[i].abs_direct, table[i].abs_fast};
    }
  });
}

cm_status cm_l_value(const cm_group* group, uint64_t index, double a, cm_l_result* out) {
  return guarded([&] {
    require(out, "out");
    const auto l = charmean::shifted_l1(character_at(group, index), a);
    *out = {l.value.real(), l.value.imag(), l.abs_error_estimate};
  });
}

cm_status cm_mean_value_compute(uint64_t q, double m, double a, const cm_options* options, cm_mean_value* out) {
  return guarded([&] {
    require(out, "out");
    const auto r = charmean::mean_value_report(q, m, a, to_options(options));
    *out = {r.q, r.M, r.N, r.m, r.a, r.lhs, r.main, r.abs_err, r.rel_err, r.norm_err, r.seconds};
  });
}

cm_status cm_lemma(cm_lemma_kind which, uint64_t q, uint64_t d, double m, double a, const cm_options* options,
                   cm_lemma_report* out) {
  return guarded([&] {
    require(out, "out");
    const auto opts = to_options(options);
    charmean::LemmaReport r;
    switch (which) {
      case CM_LEMMA5: r = charmean::lemma5_check(q, m, opts); break;
      case CM_LEMMA6: r = charmean::lemma6_check(q, d, a, opts); break;
      case CM_LEMMA7: r = charmean::lemma7_check(q, d, a, opts); break;
      case CM_REF7: r = charmean::ref7_check(q, a, opts); break;
      default: throw std::invalid_argument("unknown lemma kind");
    }
    *out = {to_c(r.which), r.q,         r.d,       r.m,       r.a,      r.lhs.real(),
            r.lhs.imag(),  r.main,      r.main_literal, r.abs_err, r.rel_err, r.error_scale};
  });
}

cm_status cm_probe(uint64_t q, double m, double a, const cm_options* options, cm_probe_report* out) {
  return guarded([&] {
    require(out, "out");
    const auto r = charmean::interpretation_probe(q, m, a, to_options(options));
    out->q = r.q;
    out->M = r.M;
    out->N = r.N;
    out->m = r.m;
    out->a = r.a;
    out->lhs = r.lhs;
    for (std::size_t i = 0; i < r.candidates.size(); ++i) {
      out->candidates[i] = {intern_candidate_name(r.candidates[i].name), r.candidates[i].main,
                            r.candidates[i].rel_err};
    }
    out->verdict = r.verdict ? static_cast<int>(*r.verdict) : -1;
  });
}

cm_status cm_decompose(uint64_t q, double m, double a, const cm_options* options, cm_decomposition* out) {
  return guarded([&] {
    require(out, "out");
    const auto r = charmean::c_decomposition(q, m, a, to_options(options));
    const std::complex<double> c[4] = {r.c1, r.c2, r.c3, r.c4};
    for (int i = 0; i < 4; ++i) {
      out->c_re[i] = c[i].real();
      out->c_im[i] = c[i].imag();
    }
    out->a = r.a;
    out->recombined = r.recombined;
  });
}

cm_status cm_verify(const char* suite, uint64_t qmax, int threads, char** json, int* passed) {
  return guarded([&] {
    require(suite, "suite");
    require(json, "json");
    require(passed, "passed");
    *json = nullptr;
    const auto report = charmean::verify::run_suite(suite, qmax, threads);
    const std::string text = report.to_json();
    auto* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (buffer == nullptr) throw std::bad_alloc();
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *json = buffer;
    *passed = report.pass() ? 1 : 0;
  });
}

void cm_string_free(char* s) { std::free(s); }

}  // extern "C"
