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

#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "posmap/catalog.hpp"
#include "posmap/errors.hpp"
#include "posmap/falsifier.hpp"
#include "posmap/io.hpp"
#include "posmap/properties.hpp"
#include "posmap/suite.hpp"

namespace posmap {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInternal = 2,
  kExitViolated = 3,
  kExitInconclusive = 4,
};

namespace cli_detail {

struct Options {
  std::string map;
  std::string property;
  std::optional<int> n;
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims{2};
  std::optional<double> tol_psd;
  std::vector<std::string> styles;
  std::string config;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Resolved {
  Property property;
  int n;
  ToleranceConfig tol;
};

inline Resolved resolve(const Options& o) {
  if (o.map.empty()) throw UsageError("--map is required");
  if (o.property.empty()) throw UsageError("--property is required");
  PropertySpec parsed;
  try {
    parsed = parse_property(o.property);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (parsed.n && o.n && *parsed.n != *o.n)
    throw UsageError("--n disagrees with the level in --property");
  const int n = parsed.n ? *parsed.n : o.n.value_or(1);
  if (n < 1 || n > 16) throw UsageError("--n must lie in [1, 16]");
  ToleranceConfig tol;
  if (o.tol_psd) tol.psd_rel_tol = *o.tol_psd;
  try {
    tol.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return {parsed.property, n, tol};
}

inline MapDescriptor resolve_map(const std::string& id, std::size_t k) {
  try {
    return make_map(id, is_scalar_family(id) ? 1 : k);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const DimensionError& e) {
    throw UsageError(e.what());
  }
}

/// The catalog's fixed element for (map, property), if it carries one.
inline std::optional<ComplexMatrix> claim_anchor(const MapDescriptor& d, Property p) {
  for (const auto& c : d.claims)
    if (c.property == p && c.at) return c.at;
  return std::nullopt;
}

/// "name" or "name:weight".
inline std::vector<StyleWeight> parse_styles(const std::vector<std::string>& specs) {
  std::vector<StyleWeight> out;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    StyleWeight w{Style::wishart, 1.0, {}};
    try {
      w.style = style_from_string(s.substr(0, colon));
      if (colon != std::string::npos) w.weight = std::stod(s.substr(colon + 1));
    } catch (const std::exception& e) {
      throw UsageError("bad --styles entry '" + s + "': " + e.what());
    }
    if (!(w.weight > 0.0)) throw UsageError("style weights must be positive");
    if (w.style != Style::diag_positive && w.style != Style::toeplitz_cosine) w.params.rank = -1;
    if (w.style == Style::positive_with_unit) w.params.shift = 0.1;
    out.push_back(w);
  }
  return out;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const Resolved r = resolve(o);
  if (o.budget < 1) throw UsageError("--budget must be >= 1");
  SamplingPlan plan;
  plan.budget = o.budget;
  plan.seed = o.seed;
  plan.styles = parse_styles(o.styles);
  std::vector<PropertyVerdict> parts;
  std::set<std::size_t> ks;
  for (auto k : o.dims) ks.insert(is_scalar_family(o.map) ? 1 : k);
  MapDescriptor last;
  for (auto k : ks) {
    last = resolve_map(o.map, k);
    parts.push_back(check(r.property, last, r.n, plan, r.tol, claim_anchor(last, r.property)));
  }
  const PropertyVerdict v =
      parts.size() == 1 ? parts.front() : merge_verdicts(r.property, last, r.n, parts, o.seed);
  out << to_json(v).dump() << "\n";
  switch (v.status) {
    case Status::no_violation: return kExitOk;
    case Status::violated: return kExitViolated;
    case Status::inconclusive: return kExitInconclusive;
  }
  return kExitInternal;
}

inline int cmd_falsify(const Options& o, std::ostream& out) {
  const Resolved r = resolve(o);
  if (o.budget < 1) throw UsageError("--budget must be >= 1");
  const std::size_t k = is_scalar_family(o.map) ? 1 : o.dims.front();
  const MapDescriptor d = resolve_map(o.map, k);
  SearchConfig sc;
  sc.budget = o.budget;
  sc.seed = o.seed;
  sc.target = {d.id, r.property, r.n, d.k};
  sc.anchor = claim_anchor(d, r.property);
  if (sc.effective_restarts() > sc.budget) sc.restarts = sc.budget;
  if (r.property == Property::mult_domain && !sc.anchor)
    throw UsageError("mult-domain needs a catalog claim carrying the element A");
  const auto w = falsify(sc, d, r.tol);
  if (!w) {
    out << none_json(sc.budget, sc.seed).dump() << "\n";
    return kExitInconclusive;
  }
  out << to_json(*w).dump() << "\n";
  return kExitOk;
}

inline int cmd_catalog(const Options& o, std::ostream& out) {
  out << catalog_json(o.dims.front()).dump() << "\n";
  return kExitOk;
}

inline int cmd_suite(const Options& o, std::ostream& out) {
  SuiteConfig cfg;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw UsageError("cannot open config " + o.config);
    json j;
    try {
      j = json::parse(in);
      cfg = suite_config_from_json(j);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed config: ") + e.what());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    } catch (const DimensionError& e) {
      throw UsageError(e.what());
    }
  }
  if (!o.out.empty()) cfg.output = o.out;
  const SuiteReport rep = run_suite(cfg);
  const std::string text = to_json(rep).dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw UsageError("cannot write " + cfg.output);
    f << text;
    out << json{{"output", cfg.output},
                {"rows", rep.rows.size()},
                {"disagreements", rep.disagreements()}}
               .dump()
        << "\n";
  }
  for (const auto& row : rep.rows)
    if (!row.agrees)
      out << "disagreement: " << row.map_id << " k=" << row.k << " " << to_string(row.property)
          << " n=" << row.n << " claimed " << to_string(row.claimed) << ", observed "
          << row.observed << "\n";
  return rep.disagreements() == 0 ? kExitOk : kExitViolated;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"posmap: positivity checks for nonlinear maps on matrix algebras", "posmap"};
  app.require_subcommand(1);
  Options o;
  const auto add_target = [&o](CLI::App* sub) {
    sub->add_option("--map", o.map, "catalog map id");
    sub->add_option("--property", o.property, "property name, e.g. n-positive or 4-positive");
    sub->add_option("--n", o.n, "amplification level");
    sub->add_option("--budget", o.budget, "samples (check) or evaluations (falsify)");
    sub->add_option("--seed", o.seed, "64-bit seed");
    sub->add_option("--dims", o.dims, "domain dimensions k")->delimiter(',');
    sub->add_option("--tol-psd", o.tol_psd, "relative PSD tolerance");
  };
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "print the map catalog as JSON");
  catalog_cmd->add_option("--dims", o.dims, "domain dimension k")->delimiter(',');
  CLI::App* check_cmd = app.add_subcommand("check", "sample one property of one map");
  add_target(check_cmd);
  check_cmd->add_option("--styles", o.styles, "generator styles name[:weight]")->delimiter(',');
  CLI::App* falsify_cmd = app.add_subcommand("falsify", "search for a counterexample");
  add_target(falsify_cmd);
  CLI::App* suite_cmd = app.add_subcommand("suite", "verify every catalog claim");
  suite_cmd->add_option("--config", o.config, "JSON config file");
  suite_cmd->add_option("--out", o.out, "report path");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (o.dims.empty()) {
    err << "usage error: --dims must not be empty\n";
    return kExitUsage;
  }
  for (auto k : o.dims)
    if (k < 1 || k > 8) {
      err << "usage error: --dims entries must lie in [1, 8]\n";
      return kExitUsage;
    }
  try {
    if (*catalog_cmd) return cmd_catalog(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*falsify_cmd) return cmd_falsify(o, out);
    if (*suite_cmd) return cmd_suite(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // DomainError / DimensionError: the request does not meet a precondition
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace posmap
