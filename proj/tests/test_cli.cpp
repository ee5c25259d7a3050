// Copyright 2026 The posmap Authors
//
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


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "posmap/cli.hpp"

namespace posmap {
namespace {

using M = ComplexMatrix;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

json without_runtime(json j) {
  j.erase("runtime_seconds");
  return j;
}

TEST(Json, MatrixRoundTrip) {
  Rng rng(1);
  const M g = gen::ginibre(3, rng);
  EXPECT_EQ(matrix_from_json(to_json(g)), g);
  EXPECT_EQ(matrix_from_json(json::parse(to_json(g).dump())), g);
}

TEST(Json, MatrixRejectsMalformed) {
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 2, "entries": [[1, 0]]})")), DimensionError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 1, "entries": [[1]]})")), DomainError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 0, "entries": []})")), DomainError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"entries": []})")), DomainError);
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 1, "entries": [["a", 0]]})")), DomainError);
}

TEST(Json, BlockRoundTrip) {
  Rng rng(2);
  const BlockMatrix b = split(gen::ginibre(6, rng), 3, 2);
  const json j = to_json(b);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(block_from_json(j).blocks(), b.blocks());
  EXPECT_THROW(block_from_json(json::parse(R"({"n": 2, "k": 1, "blocks": []})")), DimensionError);
}

TEST(Json, VerdictShape) {
  SamplingPlan p;
  p.budget = 100;
  const auto v = check_positive(maps::modulus(), p);
  const json j = to_json(v);
  for (const char* key : {"property", "map_id", "n", "samples", "status", "worst_margin", "witness", "seed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["status"], "no-violation");
}

TEST(Json, WitnessShape) {
  SearchConfig c;
  c.budget = 1000;
  c.target = {"operator-norm", Property::strong_superadditive, 1, 2};
  const auto w = falsify(c);
  ASSERT_TRUE(w);
  const json j = to_json(*w);
  for (const char* key : {"target", "margin", "inputs", "seed", "evaluations_used", "provenance"})
    EXPECT_TRUE(j.contains(key)) << key;
  ASSERT_EQ(j["inputs"].size(), 3u);
  std::vector<M> back;
  for (const auto& m : j["inputs"]) back.push_back(matrix_from_json(m));
  EXPECT_NEAR(evaluate_sample(Property::strong_superadditive, make_map("operator-norm"), back).margin,
              w->margin, 1e-12);
}

TEST(Json, SuiteConfigParsing) {
  const auto c = suite_config_from_json(json::parse(
      R"({"maps": ["modulus"], "properties": ["3-positive"], "dims": [2, 3],
          "budgets": {"check": 50, "falsify": 60}, "seed": 9,
          "tolerances": {"psd_rel_tol": 1e-8}, "output": "x.json"})"));
  EXPECT_EQ(c.maps, std::vector<std::string>{"modulus"});
  EXPECT_EQ(c.check_budget, 50u);
  EXPECT_EQ(c.falsify_budget, 60u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_DOUBLE_EQ(c.tol.psd_rel_tol, 1e-8);
  EXPECT_EQ(suite_config_from_json(json::parse(R"({"budgets": 7})")).check_budget, 7u);
  EXPECT_EQ(suite_config_from_json(to_json(c)).dims, c.dims);

  for (const char* bad : {R"([])", R"({"nosuchkey": 1})", R"({"maps": ["nosuchmap"]})",
                          R"({"properties": ["nosuchproperty"]})", R"({"dims": [0]})",
                          R"({"dims": [9]})", R"({"budgets": 0})", R"({"budgets": {"x": 1}})",
                          R"({"seed": -1})", R"({"tolerances": {"psd_rel_tol": 1.0}})"})
    EXPECT_THROW(suite_config_from_json(json::parse(bad)), std::invalid_argument) << bad;
}

TEST(Cli, Catalog) {
  const CliRun r = cli({"catalog"});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), catalog_ids().size());
  EXPECT_EQ(j[0]["id"], "modulus");
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "3-positive", "--n", "3", "--budget", "10000",
                 "--seed", "7"})
                .code,
            kExitOk);
  const CliRun v = cli({"check", "--map", "modulus", "--property", "4-positive", "--n", "4", "--budget",
                     "10000", "--seed", "7"});
  EXPECT_EQ(v.code, kExitViolated);
  EXPECT_FALSE(json::parse(v.out)["witness"].is_null());
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "positive", "--budget", "1"}).code,
            kExitInconclusive);
  EXPECT_EQ(cli({"check", "--map", "nosuchmap", "--property", "positive"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "3-positive", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "positive", "--budget", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "positive", "--tol-psd", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", "--map", "state", "--property", "mult-domain"}).code, kExitUsage);
  EXPECT_EQ(cli({"check", "--map", "frobenius-norm", "--property", "choi-b"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"bogus"}).code, kExitUsage);
}

TEST(Cli, CheckAcrossDims) {
  const CliRun r = cli({"check", "--map", "determinant", "--property", "strong-superadditive", "--budget",
                     "200", "--dims", "2,3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["samples"], 400);
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "positive", "--dims", "9"}).code, kExitUsage);
}

TEST(Cli, CheckStylesFlag) {
  const CliRun r = cli({"check", "--map", "modulus", "--property", "4-positive", "--budget", "500",
                     "--styles", "toeplitz-cosine"});
  EXPECT_EQ(r.code, kExitViolated);
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "positive", "--styles", "nosuch"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"check", "--map", "modulus", "--property", "positive", "--styles", "wishart:-1"}).code,
            kExitUsage);
}

TEST(Cli, FalsifyExitCodes) {
  const CliRun w = cli({"falsify", "--map", "power-1.5", "--property", "4-positive", "--n", "4"});
  EXPECT_EQ(w.code, kExitOk);
  EXPECT_NEAR(json::parse(w.out)["margin"].get<double>(), 1.0 - 2.0 * std::pow(std::sqrt(2.0) / 2.0, 1.5),
              1e-6);
  const CliRun none = cli({"falsify", "--map", "power-1.5", "--property", "3-positive", "--budget", "2000"});
  EXPECT_EQ(none.code, kExitInconclusive);
  EXPECT_EQ(json::parse(none.out), json::parse(R"({"result": "none", "budget": 2000, "seed": 0})"));
  const CliRun s = cli({"falsify", "--map", "operator-norm", "--property", "strong-superadditive", "--budget",
                     "1000"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_LE(json::parse(s.out)["margin"].get<double>(), -1.0 + 1e-9);
  EXPECT_EQ(cli({"falsify", "--map", "operator-norm", "--property", "mult-domain", "--budget", "500"}).code,
            kExitOk);
}

TEST(Cli, SuiteRestrictedToTwoMaps) {
  const std::string cfg = write_temp("posmap_suite_two.json", R"({"maps": ["modulus", "power-1.5"]})");
  const CliRun a = cli({"suite", "--config", cfg});
  ASSERT_EQ(a.code, kExitOk) << a.out << a.err;
  const json ja = json::parse(a.out);
  std::size_t expected = make_map("modulus").claims.size() + make_map("power-1.5").claims.size();
  ASSERT_EQ(ja["agreement"].size(), expected);
  for (const auto& row : ja["agreement"]) {
    EXPECT_TRUE(row["map_id"] == "modulus" || row["map_id"] == "power-1.5");
    EXPECT_TRUE(row["agrees"].get<bool>());
  }
  EXPECT_EQ(ja["open_questions"].size(), 2u);
  for (const auto& q : ja["open_questions"]) EXPECT_EQ(q["status"], "unknown");

  const CliRun b = cli({"suite", "--config", cfg});
  EXPECT_EQ(without_runtime(ja).dump(), without_runtime(json::parse(b.out)).dump());
  std::filesystem::remove(cfg);
}

TEST(Cli, SuiteWithStarvedBudgetDisagrees) {
  const std::string cfg =
      write_temp("posmap_suite_starved.json", R"({"maps": ["modulus"], "budgets": 1})");
  const CliRun r = cli({"suite", "--config", cfg});
  EXPECT_EQ(r.code, kExitViolated);
  EXPECT_NE(r.out.find("disagreement:"), std::string::npos);
  std::filesystem::remove(cfg);
}

TEST(Cli, SuiteWritesOutputFile) {
  const std::string cfg = write_temp("posmap_suite_out.json", R"({"maps": ["state"], "budgets": 200})");
  const auto out = std::filesystem::temp_directory_path() / "posmap_suite_report.json";
  const CliRun r = cli({"suite", "--config", cfg, "--out", out.string()});
  EXPECT_EQ(r.code, kExitOk);
  std::ifstream in(out);
  const json rep = json::parse(in);
  EXPECT_EQ(rep["tool"], "posmap");
  EXPECT_EQ(rep["disagreements"], 0);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}

TEST(Cli, SuiteConfigErrors) {
  EXPECT_EQ(cli({"suite", "--config", "/nonexistent/posmap.json"}).code, kExitUsage);
  const std::string bad = write_temp("posmap_suite_bad.json", "{not json");
  EXPECT_EQ(cli({"suite", "--config", bad}).code, kExitUsage);
  const std::string unknown = write_temp("posmap_suite_unknown.json", R"({"maps": ["nosuchmap"]})");
  EXPECT_EQ(cli({"suite", "--config", unknown}).code, kExitUsage);
  std::filesystem::remove(bad);
  std::filesystem::remove(unknown);
}

}  // namespace
}  // namespace posmap
