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


#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using charmean::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "charmean-cli");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("single cell sweep") {
    const auto r = invoke({"sweep", "--q", "3", "--m", "2", "--a", "1", "--threads", "1"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == charmean::cli::kCsvHeader);
    const auto parsed = charmean::cli::parse_csv_row(rows[1]);
    REQUIRE(parsed.has_value());
    CHECK(parsed->lhs == doctest::Approx(0.18304).epsilon(1e-4));
    CHECK(r.out.find('\r') == std::string::npos);
  }

  TEST_CASE("sweep grid order and prime selectors") {
    CHECK(charmean::cli::parse_prime_selector("101..1601").size() == 227);
    CHECK(charmean::cli::parse_prime_selector("10..20") == std::vector<std::uint64_t>{11, 13, 17, 19});
    CHECK(charmean::cli::parse_prime_selector("7,3") == std::vector<std::uint64_t>{7, 3});
    CHECK_THROWS(charmean::cli::parse_prime_selector("7,9"));
    CHECK_THROWS(charmean::cli::parse_prime_selector("20..10"));
    const auto r = invoke({"sweep", "--primes", "13,5", "--composites-4p", "3", "--m", "1,2", "--a", "2,1", "--no-timing"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 1 + 3 * 4);
    CHECK(rows[1].rfind("5,5,1,1,2,", 0) == 0);
    CHECK(rows[2].rfind("5,5,1,1,1,", 0) == 0);
    CHECK(rows[5].rfind("12,3,4,1,2,", 0) == 0);
    CHECK(rows[12].rfind("13,13,1,2,1,", 0) == 0);
    CHECK(rows[12].substr(rows[12].size() - 2) == ",0");
  }

  TEST_CASE("csv round trip") {
    const auto r = invoke({"sweep", "--q", "7,9,20", "--m", "0.5,3", "--a", "1.25"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto parsed = charmean::cli::parse_csv_row(rows[i]);
      REQUIRE(parsed.has_value());
      CHECK(charmean::cli::format_csv_row(*parsed) == rows[i]);
    }
    CHECK_FALSE(charmean::cli::parse_csv_row("1,2,3").has_value());
    CHECK_FALSE(charmean::cli::parse_csv_row("x,1,1,1,1,1,1,1,1,1,1").has_value());
  }

  TEST_CASE("json sweep") {
    const auto r = invoke({"sweep", "--q", "5", "--m", "1", "--a", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "sweep");
    CHECK(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["q"] == 5);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({"sweep", "--q", "4", "--m", "2", "--a", "0"}).code == 2);
    CHECK(invoke({"sweep", "--q", "2", "--m", "2", "--a", "1"}).code == 2);
    CHECK(invoke({"sweep", "--m", "2", "--a", "1"}).code == 2);
    CHECK(invoke({"verify", "--suite", "identities", "--qmax", "2"}).code == 2);
    CHECK(invoke({"verify", "--suite", "everything"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({}).code == 2);
    const auto bad_d = invoke({"lemma", "--which", "6", "--q", "12", "--d", "5"});
    CHECK(bad_d.code == 2);
    CHECK(bad_d.err.find("d must divide M=3") != std::string::npos);
    CHECK(invoke({"--help"}).code == 0);
  }

  TEST_CASE("io errors") {
    const auto r = invoke({"sweep", "--q", "3", "--m", "2", "--a", "1", "--out", "/nonexistent-dir/x.csv"});
    CHECK(r.code == 3);
  }

  TEST_CASE("verify, lemma, probe, chars, tau") {
    const auto v = invoke({"verify", "--suite", "special"});
    CHECK(v.code == 0);
    CHECK(nlohmann::json::parse(v.out)["pass"] == true);
    const auto l = invoke({"lemma", "--which", "7", "--q", "12", "--d", "3", "--a", "1"});
    REQUIRE(l.code == 0);
    CHECK(nlohmann::json::parse(l.out)["rows"].size() == 1);
    const auto p = invoke({"probe", "--q", "1604", "--m", "2", "--a", "1"});
    REQUIRE(p.code == 0);
    const auto pj = nlohmann::json::parse(p.out);
    CHECK(pj["rows"].size() == 3);
    CHECK(pj["verdict"] == "canonical_moebius_hurwitz");
    const auto c = invoke({"chars", "--q", "8", "--values"});
    REQUIRE(c.code == 0);
    const auto cj = nlohmann::json::parse(c.out);
    CHECK(cj["rows"].size() == 4);
    CHECK(cj["rows"][1]["values"].size() == 8);
    const auto t = invoke({"tau", "--q", "8"});
    REQUIRE(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["rows"].size() == 4);
  }

  TEST_CASE("file output is byte identical across runs") {
    const auto a = temp_path("charmean_cli_a.csv");
    const auto b = temp_path("charmean_cli_b.csv");
    REQUIRE(invoke({"sweep", "--q", "101", "--m", "1", "--a", "1", "--no-timing", "--threads", "1", "--out", a.c_str()}).code == 0);
    REQUIRE(invoke({"sweep", "--q", "101", "--m", "1", "--a", "1", "--no-timing", "--threads", "3", "--out", b.c_str()}).code == 0);
    std::ifstream fa(a, std::ios::binary);
    std::ifstream fb(b, std::ios::binary);
    const std::string sa((std::istreambuf_iterator<char>(fa)), {});
    const std::string sb((std::istreambuf_iterator<char>(fb)), {});
    CHECK_FALSE(sa.empty());
    CHECK(sa == sb);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }

  TEST_CASE("installed binary") {
    const std::string cmd = std::string(CHARMEAN_CLI_PATH) + " sweep --q 4 --m 2 --a 0 2>/dev/null";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    const std::string ok = std::string(CHARMEAN_CLI_PATH) + " lemma --which 5 --q 4 > /dev/null";
    CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
  }
}
