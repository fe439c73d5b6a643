// Copyright 2026 lplab contributors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lplab/errors.hpp"
#include "lplab/io.hpp"
#include "lplab/verify.hpp"
#include "test_instances.hpp"

using lplab::LpFile;
using lplab::Rational;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("lplab_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("lp file round-trips semantically") {
  LpFile file{lplab::testing::worked_example(), std::vector<int>{2, 3}, {}};
  file.metadata.kind = "random";

  TempFile tmp("roundtrip.json");
  lplab::save_lp_file(tmp.path, file);
  LpFile loaded = lplab::load_lp_file(tmp.path);

  CHECK(loaded.lp.a == file.lp.a);
  CHECK(loaded.lp.b == file.lp.b);
  CHECK(loaded.lp.c == file.lp.c);
  CHECK(loaded.lp.name == file.lp.name);
  REQUIRE(loaded.initial_basis.has_value());
  CHECK(*loaded.initial_basis == std::vector<int>{2, 3});
  CHECK(loaded.metadata.kind == "random");
}

TEST_CASE("rationals are serialized as exact strings") {
  LpFile file{lplab::testing::worked_example(), std::nullopt, {}};
  file.lp.c[0] = Rational(-1, 3);
  json doc = lplab::lp_file_to_json(file);
  CHECK(doc["c"][0] == "-1/3");
  for (const auto& row : doc["A"])
    for (const auto& cell : row) CHECK(cell.is_string());
  for (const auto& cell : doc["b"]) CHECK(cell.is_string());
}

TEST_CASE("malformed files raise ParseError") {
  TempFile tmp("garbage.json");
  {
    std::ofstream out(tmp.path);
    out << "this is not json";
  }
  CHECK_THROWS_AS(lplab::load_lp_file(tmp.path), lplab::ParseError);
  CHECK_THROWS_AS(lplab::load_lp_file("lplab_test_does_not_exist.json"), lplab::ParseError);

  json doc;
  doc["schema_version"] = lplab::kSchemaVersion;
  doc["A"] = json::array({json::array({"1", "2"}), json::array({"1"})});
  doc["b"] = json::array({"1", "1"});
  doc["c"] = json::array({"0", "0"});
  CHECK_THROWS_AS(lplab::lp_file_from_json(doc), lplab::ParseError);

  json wrong_version = doc;
  wrong_version["schema_version"] = 999;
  CHECK_THROWS_AS(lplab::lp_file_from_json(wrong_version), lplab::ParseError);
}

TEST_CASE("rank-deficient instance files are rejected on load") {
  json doc;
  doc["schema_version"] = lplab::kSchemaVersion;
  doc["name"] = "deficient";
  doc["A"] = json::array({json::array({"1", "1"}), json::array({"2", "2"})});
  doc["b"] = json::array({"1", "2"});
  doc["c"] = json::array({"0", "0"});
  TempFile tmp("deficient.json");
  lplab::write_json_file(tmp.path, doc);
  CHECK_THROWS_AS(lplab::load_lp_file(tmp.path), lplab::RankDeficientError);
}

TEST_CASE("pivot rule names parse both spellings") {
  CHECK(lplab::parse_rule("dantzig") == lplab::PivotRule::MostNegative);
  CHECK(lplab::parse_rule("most-negative") == lplab::PivotRule::MostNegative);
  CHECK(lplab::parse_rule("best-improvement") == lplab::PivotRule::BestImprovement);
  CHECK(lplab::parse_rule("best") == lplab::PivotRule::BestImprovement);
  CHECK(lplab::parse_rule("bland") == lplab::PivotRule::Bland);
  CHECK_THROWS_AS(lplab::parse_rule("steepest"), lplab::ParseError);
  CHECK(lplab::rule_name(lplab::PivotRule::BestImprovement) == "best_improvement");
}

TEST_CASE("trace serialization carries the full per-iterate record") {
  auto lp = lplab::testing::worked_example();
  auto result = lplab::solve(lp, lplab::Basis({2, 3}), lplab::PivotRule::MostNegative);
  json doc = lplab::trace_to_json(lp.name, lplab::PivotRule::MostNegative, result);

  CHECK(doc["status"] == "optimal");
  CHECK(doc["z"] == "-2");
  CHECK(doc["iterations"] == 1);
  CHECK(doc["distinct_bfs_count"] == 2);
  REQUIRE(doc["trace"].size() == 2);
  CHECK(doc["trace"][0]["entering"].is_null());
  CHECK(doc["trace"][0]["delta"] == "1");
  CHECK(doc["trace"][1]["entering"] == 0);
  CHECK(doc["trace"][1]["leaving"] == 2);
  CHECK(doc["trace"][1]["step"] == "2");
  CHECK(doc["trace"][1]["x"][0] == "2");
}

TEST_CASE("census serialization") {
  auto lp = lplab::testing::worked_example();
  auto census = lplab::enumerate_vertices(lp);
  json doc = lplab::census_to_json(lp.name, census);
  CHECK(doc["delta"] == "1");
  CHECK(doc["gamma"] == "2");
  CHECK(doc["z_star"] == "-2");
  CHECK(doc["second_value"] == "-1");
  CHECK(doc["all_nondegenerate"] == true);
  CHECK(doc["feasible_bases"].size() == 4);
  CHECK(doc["distinct_vertices"].size() == 4);
}

TEST_CASE("verify report on the worked example passes everything") {
  LpFile file{lplab::testing::worked_example(), std::vector<int>{2, 3}, {}};
  auto report = lplab::run_verify(file);
  CHECK(report.overall_pass());
  CHECK(report.z_star == -2);
  CHECK(report.bounds.theorem5 == 24);
  REQUIRE(report.bounds.corollary3.has_value());
  CHECK(*report.bounds.corollary3 == 3);

  json doc = lplab::report_to_json(report);
  CHECK(doc["overall_pass"] == true);
  CHECK(doc["theorem5_bound"] == 24);
  CHECK(doc["corollary3_bound"] == 3);
  CHECK(doc["z_star"] == "-2");
  bool saw_agreement = false;
  for (const auto& check : doc["checks"])
    saw_agreement = saw_agreement || check["name"] == "solver_census_agreement";
  CHECK(saw_agreement);
}

TEST_CASE("written files are byte-stable") {
  auto lp = lplab::testing::worked_example();
  auto result = lplab::solve(lp, lplab::Basis({2, 3}), lplab::PivotRule::MostNegative);
  json doc = lplab::trace_to_json(lp.name, lplab::PivotRule::MostNegative, result);
  TempFile a("stable_a.json"), b("stable_b.json");
  lplab::write_json_file(a.path, doc);
  lplab::write_json_file(b.path, doc);
  std::ifstream fa(a.path, std::ios::binary), fb(b.path, std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  CHECK(!sa.empty());
}
