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


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace charmean::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(cm_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  cm_status status;
};

void check(cm_status status) {
  if (status != CM_OK) throw ApiError(status, cm_last_error());
}

struct GroupHandle {
  explicit GroupHandle(std::uint64_t q) { check(cm_group_create(q, &ptr)); }
  ~GroupHandle() { cm_group_destroy(ptr); }
  GroupHandle(const GroupHandle&) = delete;
  GroupHandle& operator=(const GroupHandle&) = delete;
  cm_group* ptr = nullptr;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(); }

// Opens the destination up front so an unwritable path fails before any
// computation starts.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    path_ = path;
  }

  void write(const std::string& text) {
    std::ostream& os = file_ ? *file_ : fallback_;
    os << text;
    os.flush();
    if (!os) throw IoError("write failed" + (path_.empty() ? std::string() : " for '" + path_ + "'"));
  }

 private:
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

cm_options make_options(int threads, const std::string& tau_path) {
  return {threads, tau_path == "direct" ? CM_TAU_DIRECT : CM_TAU_STRUCTURAL};
}

struct SweepArgs {
  std::vector<std::uint64_t> q;
  std::string primes;
  std::vector<std::uint64_t> composites_4p;
  std::vector<double> m;
  std::vector<double> a;
  std::string out;
  std::string format = "csv";
  std::string tau_path = "structural";
  int threads = 0;
  bool no_timing = false;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::uint64_t> qs = args.q;
  if (!args.primes.empty()) {
    try {
      const auto primes = parse_prime_selector(args.primes);
      qs.insert(qs.end(), primes.begin(), primes.end());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--primes: ") + e.what());
    }
  }
  for (std::uint64_t p : args.composites_4p) qs.push_back(4 * p);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  if (qs.empty()) throw UsageError("no moduli selected (use --q, --primes or --composites-4p)");
  for (std::uint64_t q : qs) {
    if (q < 3) throw UsageError("q must be >= 3, got " + std::to_string(q));
  }
  for (double m : args.m) {
    if (!(m > 0.0)) throw UsageError("m must be > 0, got " + format_double(m));
  }
  for (double a : args.a) {
    if (!(a >= 1.0)) throw UsageError("a must be >= 1, got " + format_double(a));
  }

  Sink sink(args.out, out);
  const cm_options options = make_options(args.threads, args.tau_path);
  std::vector<cm_mean_value> rows;
  rows.reserve(qs.size() * args.m.size() * args.a.size());
  for (std::uint64_t q : qs) {
    for (double m : args.m) {
      for (double a : args.a) {
        cm_mean_value row{};
        check(cm_mean_value_compute(q, m, a, &options, &row));
        err << "sweep q=" << q << " m=" << format_double(m) << " a=" << format_double(a)
            << " rel_err=" << format_double(row.rel_err) << " (" << row.seconds << " s)\n";
        if (args.no_timing) row.seconds = 0.0;
        rows.push_back(row);
      }
    }
  }

  if (args.format == "json") {
    json doc = {{"command", "sweep"}, {"rows", json::array()}};
    for (const auto& r : rows) {
      doc["rows"].push_back({{"q", r.q},
                             {"M", r.M},
                             {"N", r.N},
                             {"m", r.m},
                             {"a", r.a},
                             {"lhs", number(r.lhs)},
                             {"main", number(r.main)},
                             {"abs_err", number(r.abs_err)},
                             {"rel_err", number(r.rel_err)},
                             {"norm_err", number(r.norm_err)},
                             {"seconds", r.seconds}});
    }
    sink.write(doc.dump(2) + "\n");
  } else {
    std::string text(kCsvHeader);
    text += '\n';
    for (const auto& r : rows) {
      text += format_csv_row(r);
      text += '\n';
    }
    sink.write(text);
  }
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t qmax, int threads, const std::string& path,
               std::ostream& out, std::ostream& err) {
  if (qmax < 3) throw UsageError("qmax must be >= 3");
  Sink sink(path, out);
  char* report = nullptr;
  int passed = 0;
  check(cm_verify(suite.c_str(), qmax, threads, &report, &passed));
  const std::string text = std::string(report) + "\n";
  cm_string_free(report);
  sink.write(text);
  err << "verify " << suite << ": " << (passed ? "pass" : "FAIL") << "\n";
  return passed ? kOk : kViolation;
}

int cmd_probe(std::uint64_t q, double m, double a, int threads, const std::string& path, std::ostream& out) {
  Sink sink(path, out);
  const cm_options options = make_options(threads, "structural");
  cm_probe_report r{};
  check(cm_probe(q, m, a, &options, &r));
  json doc = {{"command", "probe"}, {"q", r.q}, {"M", r.M}, {"N", r.N}, {"m", r.m}, {"a", r.a},
              {"lhs", number(r.lhs)}};
  doc["verdict"] = r.verdict >= 0 ? json(r.candidates[r.verdict].name) : json();
  doc["rows"] = json::array();
  for (int i = 0; i < 3; ++i) {
    doc["rows"].push_back({{"candidate", r.candidates[i].name},
                           {"main", number(r.candidates[i].main)},
                           {"rel_err", number(r.candidates[i].rel_err)},
                           {"selected", r.verdict == i}});
  }
  sink.write(doc.dump(2) + "\n");
  return kOk;
}

int cmd_lemma(const std::string& which, std::uint64_t q, std::uint64_t d, double m, double a, int threads,
              const std::string& path, std::ostream& out) {
  cm_lemma_kind kind = CM_LEMMA5;
  if (which == "6") kind = CM_LEMMA6;
  if (which == "7") kind = CM_LEMMA7;
  if (which == "ref7") kind = CM_REF7;
  if ((kind == CM_LEMMA6 || kind == CM_LEMMA7) && d == 0) throw UsageError("--d is required for lemmas 6 and 7");
  Sink sink(path, out);
  const cm_options options = make_options(threads, "structural");
  cm_lemma_report r{};
  check(cm_lemma(kind, q, d, m, a, &options, &r));
  json row = {{"which", which},
              {"q", r.q},
              {"d", r.d},
              {"m", r.m},
              {"a", r.a},
              {"lhs_re", number(r.lhs_re)},
              {"lhs_im", number(r.lhs_im)},
              {"main", number(r.main)},
              {"main_literal", number(r.main_literal)},
              {"abs_err", number(r.abs_err)},
              {"rel_err", number(r.rel_err)},
              {"error_scale", number(r.error_scale)}};
  json doc = {{"command", "lemma"}, {"rows", json::array({row})}};
  sink.write(doc.dump(2) + "\n");
  return kOk;
}

int cmd_chars(std::uint64_t q, bool values, const std::string& path, std::ostream& out) {
  if (q == 0) throw UsageError("q must be >= 1");
  Sink sink(path, out);
  GroupHandle group(q);
  const std::uint64_t size = cm_group_size(group.ptr);
  std::vector<std::uint64_t> exps(cm_group_rank(group.ptr));
  json doc = {{"command", "chars"}, {"q", q}, {"size", size}, {"rows", json::array()}};
  for (std::uint64_t i = 0; i < size; ++i) {
    cm_character_info info{};
    check(cm_character_info_get(group.ptr, i, &info));
    check(cm_character_exponents(group.ptr, i, exps.data(), exps.size()));
    json row = {{"index", i},
                {"exponents", exps},
                {"conductor", info.conductor},
                {"order", info.order},
                {"primitive", info.primitive != 0},
                {"principal", info.principal != 0}};
    if (values) {
      json table = json::array();
      for (std::uint64_t n = 0; n < q; ++n) {
        double re = 0.0;
        double im = 0.0;
        check(cm_character_value(group.ptr, i, static_cast<std::int64_t>(n), &re, &im));
        table.push_back({re, im});
      }
      row["values"] = std::move(table);
    }
    doc["rows"].push_back(std::move(row));
  }
  sink.write(doc.dump(2) + "\n");
  return kOk;
}

int cmd_tau(std::uint64_t q, int threads, const std::string& path, std::ostream& out) {
  if (q == 0) throw UsageError("q must be >= 1");
  Sink sink(path, out);
  GroupHandle group(q);
  std::vector<cm_tau_row> rows(cm_group_size(group.ptr));
  check(cm_tau_table(group.ptr, threads, rows.data(), rows.size()));
  json doc = {{"command", "tau"}, {"q", q}, {"rows", json::array()}};
  for (const auto& r : rows) {
    doc["rows"].push_back({{"index", r.index},
                           {"tau_re", r.tau_re},
                           {"tau_im", r.tau_im},
                           {"abs_direct", r.abs_direct},
                           {"abs_fast", r.abs_fast}});
  }
  sink.write(doc.dump(2) + "\n");
  return kOk;
}

bool parse_u64(std::string_view text, std::uint64_t& value) {
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end && !text.empty();
}

bool parse_f64(std::string_view text, double& value) {
  if (text.empty()) return false;
  const std::string copy(text);
  char* end = nullptr;
  value = std::strtod(copy.c_str(), &end);
  return end == copy.c_str() + copy.size();
}

}  // namespace

std::string format_csv_row(const cm_mean_value& r) {
  std::string line = std::to_string(r.q) + "," + std::to_string(r.M) + "," + std::to_string(r.N);
  for (double v : {r.m, r.a, r.lhs, r.main, r.abs_err, r.rel_err, r.norm_err, r.seconds}) {
    line += ',';
    line += format_double(v);
  }
  return line;
}

std::optional<cm_mean_value> parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 11) return std::nullopt;
  cm_mean_value r{};
  if (!parse_u64(fields[0], r.q) || !parse_u64(fields[1], r.M) || !parse_u64(fields[2], r.N)) return std::nullopt;
  double* targets[] = {&r.m, &r.a, &r.lhs, &r.main, &r.abs_err, &r.rel_err, &r.norm_err, &r.seconds};
  for (std::size_t i = 0; i < 8; ++i) {
    if (!parse_f64(fields[3 + i], *targets[i])) return std::nullopt;
  }
  return r;
}

std::vector<std::uint64_t> parse_prime_selector(std::string_view text) {
  std::vector<std::uint64_t> primes;
  const auto is_prime = [](std::uint64_t n) {
    int flag = 0;
    check(cm_is_prime(n, &flag));
    return flag != 0;
  };
  if (const std::size_t dots = text.find(".."); dots != std::string_view::npos) {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    if (!parse_u64(text.substr(0, dots), lo) || !parse_u64(text.substr(dots + 2), hi) || lo > hi) {
      throw std::invalid_argument("expected lo..hi with lo <= hi, got '" + std::string(text) + "'");
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (is_prime(n)) primes.push_back(n);
    }
    return primes;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::uint64_t p = 0;
    const auto field = text.substr(start, comma - start);
    if (!parse_u64(field, p)) throw std::invalid_argument("malformed prime '" + std::string(field) + "'");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    primes.push_back(p);
    start = comma + 1;
  }
  return primes;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted mean values of Dirichlet L-functions at s = 1"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cm_version()));

  auto* verify = app.add_subcommand("verify", "Run an invariant suite and print a JSON report");
  std::string suite;
  std::uint64_t qmax = 200;
  std::string verify_out;
  int verify_threads = 0;
  verify->add_option("--suite", suite, "identities, lemmas or special")
      ->required()
      ->check(CLI::IsMember({"identities", "lemmas", "special"}));
  verify->add_option("--qmax", qmax, "Largest modulus checked")->capture_default_str();
  verify->add_option("--out", verify_out, "Write the report here instead of stdout");
  verify->add_option("--threads", verify_threads, "Worker threads (0: CHARMEAN_THREADS or all cores)");

  auto* sweep = app.add_subcommand("sweep", "Tabulate lhs against the main term over a grid of (q, m, a)");
  SweepArgs sweep_args;
  sweep->add_option("--q", sweep_args.q, "Explicit moduli")->delimiter(',');
  sweep->add_option("--primes", sweep_args.primes, "Primes as lo..hi or a comma list");
  sweep->add_option("--composites-4p", sweep_args.composites_4p, "Moduli 4p for each listed p")->delimiter(',');
  sweep->add_option("--m", sweep_args.m, "Weight exponents")->required()->delimiter(',');
  sweep->add_option("--a", sweep_args.a, "Shifts, each >= 1")->required()->delimiter(',');
  sweep->add_option("--out", sweep_args.out, "Output file (default stdout)");
  sweep->add_option("--format", sweep_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--tau-path", sweep_args.tau_path, "structural or direct")
      ->check(CLI::IsMember({"structural", "direct"}))
      ->capture_default_str();
  sweep->add_option("--threads", sweep_args.threads, "Worker threads (0: CHARMEAN_THREADS or all cores)");
  sweep->add_flag("--no-timing", sweep_args.no_timing, "Write seconds as 0 for reproducible files");

  auto* probe = app.add_subcommand("probe", "Compare candidate main terms against lhs");
  std::uint64_t probe_q = 0;
  double probe_m = 2.0;
  double probe_a = 1.0;
  std::string probe_out;
  int probe_threads = 0;
  probe->add_option("--q", probe_q, "Modulus")->required();
  probe->add_option("--m", probe_m, "Weight exponent")->capture_default_str();
  probe->add_option("--a", probe_a, "Shift")->capture_default_str();
  probe->add_option("--out", probe_out, "Output file (default stdout)");
  probe->add_option("--threads", probe_threads, "Worker threads");

  auto* lemma = app.add_subcommand("lemma", "Check one auxiliary asymptotic formula");
  std::string which;
  std::uint64_t lemma_q = 0;
  std::uint64_t lemma_d = 0;
  double lemma_m = 2.0;
  double lemma_a = 1.0;
  std::string lemma_out;
  int lemma_threads = 0;
  lemma->add_option("--which", which, "5, 6, 7 or ref7")->required()->check(CLI::IsMember({"5", "6", "7", "ref7"}));
  lemma->add_option("--q", lemma_q, "Modulus")->required();
  lemma->add_option("--d", lemma_d, "Divisor of the squarefree-free part M (lemmas 6 and 7)");
  lemma->add_option("--m", lemma_m, "Weight exponent (lemma 5)")->capture_default_str();
  lemma->add_option("--a", lemma_a, "Shift")->capture_default_str();
  lemma->add_option("--out", lemma_out, "Output file (default stdout)");
  lemma->add_option("--threads", lemma_threads, "Worker threads");

  auto* chars = app.add_subcommand("chars", "Dump the character table mod q");
  std::uint64_t chars_q = 0;
  bool chars_values = false;
  std::string chars_out;
  chars->add_option("--q", chars_q, "Modulus")->required();
  chars->add_flag("--values", chars_values, "Include chi(n) for n = 0..q-1");
  chars->add_option("--out", chars_out, "Output file (default stdout)");

  auto* tau = app.add_subcommand("tau", "Dump tau(chi) and both |tau| paths mod q");
  std::uint64_t tau_q = 0;
  std::string tau_out;
  int tau_threads = 0;
  tau->add_option("--q", tau_q, "Modulus")->required();
  tau->add_option("--out", tau_out, "Output file (default stdout)");
  tau->add_option("--threads", tau_threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, qmax, verify_threads, verify_out, out, err);
    if (*sweep) return cmd_sweep(sweep_args, out, err);
    if (*probe) return cmd_probe(probe_q, probe_m, probe_a, probe_threads, probe_out, out);
    if (*lemma) return cmd_lemma(which, lemma_q, lemma_d, lemma_m, lemma_a, lemma_threads, lemma_out, out);
    if (*chars) return cmd_chars(chars_q, chars_values, chars_out, out);
    if (*tau) return cmd_tau(tau_q, tau_threads, tau_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ApiError& e) {
    err << "error: " << e.what() << "\n";
    switch (e.status) {
      case CM_ERR_DOMAIN:
      case CM_ERR_ARGUMENT: return kUsage;
      case CM_ERR_IO: return kIo;
      default: return kViolation;
    }
  }
  return kUsage;
}

}  // namespace charmean::cli
