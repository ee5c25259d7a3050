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

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "posmap/catalog.hpp"
#include "posmap/claims.hpp"
#include "posmap/errors.hpp"
#include "posmap/falsifier.hpp"
#include "posmap/io.hpp"
#include "posmap/properties.hpp"
#include "posmap/tolerance.hpp"

namespace posmap {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteConfig {
  std::vector<std::string> maps;        // empty: the whole catalog
  std::vector<std::string> properties;  // empty: every property
  std::vector<std::size_t> dims{2};
  std::size_t check_budget = 2000;
  std::size_t falsify_budget = 10000;
  std::uint64_t seed = 0;
  ToleranceConfig tol;
  std::string output;
};

namespace suite_detail {

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw DomainError("suite config: " + what);
}

inline std::vector<std::string> string_list(const json& j, const char* key) {
  expect(j.is_array(), std::string(key) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    expect(e.is_string(), std::string(key) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::size_t positive_int(const json& j, const std::string& key) {
  expect(j.is_number_unsigned() && j.get<std::size_t>() >= 1, key + " must be a positive integer");
  return j.get<std::size_t>();
}

}  // namespace suite_detail

/**
 * Flat JSON config: {maps, properties, dims, budgets, seed, tolerances,
 * output}; every key optional. `budgets` is {"check": n, "falsify": n} or a
 * single integer used for both. Unknown keys are rejected.
 */
inline SuiteConfig suite_config_from_json(const json& j) {
  using namespace suite_detail;
  expect(j.is_object(), "top level must be an object");
  SuiteConfig c;
  for (const auto& [key, val] : j.items()) {
    if (key == "maps") {
      c.maps = string_list(val, "maps");
      for (const auto& id : c.maps) (void)make_map(id, 2);
    } else if (key == "properties") {
      c.properties = string_list(val, "properties");
      for (const auto& p : c.properties) (void)parse_property(p);
    } else if (key == "dims") {
      expect(val.is_array() && !val.empty(), "dims must be a non-empty array");
      c.dims.clear();
      for (const auto& d : val) {
        const std::size_t k = positive_int(d, "dims entry");
        expect(k <= 8, "dims entries must be at most 8");
        c.dims.push_back(k);
      }
    } else if (key == "budgets") {
      if (val.is_number()) {
        c.check_budget = c.falsify_budget = positive_int(val, "budgets");
      } else {
        expect(val.is_object(), "budgets must be an integer or {check, falsify}");
        for (const auto& [bk, bv] : val.items()) {
          if (bk == "check")
            c.check_budget = positive_int(bv, "budgets.check");
          else if (bk == "falsify")
            c.falsify_budget = positive_int(bv, "budgets.falsify");
          else
            expect(false, "unknown budgets key " + bk);
        }
      }
    } else if (key == "seed") {
      expect(val.is_number_unsigned(), "seed must be a non-negative integer");
      c.seed = val.get<std::uint64_t>();
    } else if (key == "tolerances") {
      expect(val.is_object(), "tolerances must be an object");
      for (const auto& [tk, tv] : val.items()) {
        expect(tv.is_number(), "tolerance " + tk + " must be a number");
        const double x = tv.get<double>();
        if (tk == "psd_rel_tol") c.tol.psd_rel_tol = x;
        else if (tk == "eig_offdiag_tol") c.tol.eig_offdiag_tol = x;
        else if (tk == "pinv_cutoff_rel") c.tol.pinv_cutoff_rel = x;
        else if (tk == "equality_tol") c.tol.equality_tol = x;
        else if (tk == "eig_reconstruct_tol") c.tol.eig_reconstruct_tol = x;
        else expect(false, "unknown tolerance " + tk);
      }
      c.tol.validate();
    } else if (key == "output") {
      expect(val.is_string(), "output must be a string");
      c.output = val.get<std::string>();
    } else {
      expect(false, "unknown key " + key);
    }
  }
  return c;
}

inline json to_json(const SuiteConfig& c) {
  json maps = json::array(), props = json::array(), dims = json::array();
  for (const auto& m : c.maps) maps.push_back(m);
  for (const auto& p : c.properties) props.push_back(p);
  for (auto d : c.dims) dims.push_back(d);
  return json{{"maps", maps},
              {"properties", props},
              {"dims", dims},
              {"budgets", {{"check", c.check_budget}, {"falsify", c.falsify_budget}}},
              {"seed", c.seed},
              {"tolerances",
               {{"psd_rel_tol", c.tol.psd_rel_tol},
                {"eig_offdiag_tol", c.tol.eig_offdiag_tol},
                {"pinv_cutoff_rel", c.tol.pinv_cutoff_rel},
                {"equality_tol", c.tol.equality_tol},
                {"eig_reconstruct_tol", c.tol.eig_reconstruct_tol}}},
              {"output", c.output}};
}

/// One row of the claim-agreement table.
struct AgreementRow {
  std::string map_id;
  std::size_t k = 1;
  Property property = Property::positive;
  int n = 1;
  Expectation claimed = Expectation::unknown;
  std::string observed;  // checker status, or "witness" / "none" from the falsifier
  bool agrees = true;    // unknown claims never count as disagreements
  std::string anchor;
  json result;           // verdict or witness JSON
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<AgreementRow> rows;
  double runtime_seconds = 0.0;

  std::size_t disagreements() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const AgreementRow& r) { return !r.agrees; }));
  }
};

inline AgreementRow run_claim(const MapDescriptor& d, const Claim& c, const SuiteConfig& cfg) {
  AgreementRow row;
  row.map_id = d.id;
  row.k = d.k;
  row.property = c.property;
  row.n = c.n;
  row.claimed = c.expected;
  row.anchor = c.anchor;
  if (c.expected == Expectation::fails) {
    SearchConfig sc;
    sc.budget = cfg.falsify_budget;
    sc.seed = cfg.seed;
    sc.target = {d.id, c.property, c.n, d.k};
    sc.anchor = c.at;
    if (sc.effective_restarts() > sc.budget) sc.restarts = sc.budget;
    const auto w = falsify(sc, d, cfg.tol);
    row.observed = w ? "witness" : "none";
    row.agrees = w.has_value();
    row.result = w ? to_json(*w) : none_json(sc.budget, sc.seed);
    return row;
  }
  SamplingPlan plan;
  plan.budget = cfg.check_budget;
  plan.seed = cfg.seed;
  const PropertyVerdict v = check(c.property, d, c.n, plan, cfg.tol, c.at);
  row.observed = std::string(to_string(v.status));
  row.agrees = c.expected == Expectation::unknown || v.status == Status::no_violation;
  row.result = to_json(v);
  return row;
}

/// Runs every selected claim. Rows are sorted by (map_id, k, property, n).
inline SuiteReport run_suite(const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  cfg.tol.validate();
  SuiteReport rep;
  rep.config = cfg;
  std::set<Property> wanted;
  for (const auto& p : cfg.properties) wanted.insert(parse_property(p).property);
  const std::vector<std::string> ids = cfg.maps.empty() ? catalog_ids() : cfg.maps;
  for (const auto& id : ids) {
    std::set<std::size_t> ks;
    for (auto k : cfg.dims) ks.insert(is_scalar_family(id) ? 1 : k);
    for (auto k : ks) {
      if (id == "punctured-operator-norm" && k < 2) continue;
      const MapDescriptor d = make_map(id, k);
      for (const auto& c : d.claims)
        if (wanted.empty() || wanted.contains(c.property)) rep.rows.push_back(run_claim(d, c, cfg));
    }
  }
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const AgreementRow& a, const AgreementRow& b) {
    return std::tuple(a.map_id, a.k, to_string(a.property), a.n) <
           std::tuple(b.map_id, b.k, to_string(b.property), b.n);
  });
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Everything but runtime_seconds is a function of (version, config).
inline json to_json(const SuiteReport& r) {
  json verdicts = json::array(), table = json::array(), open = json::array();
  for (const auto& row : r.rows) {
    verdicts.push_back(row.result);
    json t{{"map_id", row.map_id}, {"k", row.k}, {"property", to_string(row.property)}};
    if (uses_level(row.property)) t["n"] = row.n;
    t["claimed"] = to_string(row.claimed);
    t["observed"] = row.observed;
    t["agrees"] = row.agrees;
    t["anchor"] = row.anchor;
    table.push_back(std::move(t));
  }
  for (const auto& q : open_questions())
    open.push_back(json{{"id", q.id}, {"question", q.question}, {"status", "unknown"}});
  return json{{"tool", "posmap"},
              {"version", kToolVersion},
              {"config", to_json(r.config)},
              {"seed", r.config.seed},
              {"verdicts", std::move(verdicts)},
              {"agreement", std::move(table)},
              {"open_questions", std::move(open)},
              {"disagreements", r.disagreements()},
              {"runtime_seconds", r.runtime_seconds}};
}

}  // namespace posmap
