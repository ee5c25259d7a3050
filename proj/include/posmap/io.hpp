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

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "posmap/block.hpp"
#include "posmap/catalog.hpp"
#include "posmap/claims.hpp"
#include "posmap/errors.hpp"
#include "posmap/falsifier.hpp"
#include "posmap/maps.hpp"
#include "posmap/matrix.hpp"
#include "posmap/properties.hpp"

namespace posmap {

using json = nlohmann::ordered_json;

/// {"dim": n, "entries": [[re, im], ...]}, row-major.
inline json to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const Complex& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
  return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw DomainError("matrix JSON: expected an object with dim and entries");
  const json& dj = j.at("dim");
  if (!dj.is_number_unsigned() || dj.get<std::size_t>() == 0)
    throw DomainError("matrix JSON: dim must be a positive integer");
  const auto dim = dj.get<std::size_t>();
  const json& e = j.at("entries");
  if (!e.is_array() || e.size() != dim * dim)
    throw DimensionError("matrix JSON: entries must hold dim^2 elements");
  std::vector<Complex> vals;
  vals.reserve(e.size());
  for (const json& z : e) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      throw DomainError("matrix JSON: each entry must be [re, im]");
    const double re = z[0].get<double>(), im = z[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw DomainError("matrix JSON: non-finite entry");
    vals.emplace_back(re, im);
  }
  return ComplexMatrix(dim, std::move(vals));
}

/// {"n": n, "k": k, "blocks": [matrix, ...]}, blocks row-major.
inline json to_json(const BlockMatrix& b) {
  json blocks = json::array();
  for (const auto& blk : b.blocks()) blocks.push_back(to_json(blk));
  return json{{"n", b.n()}, {"k", b.k()}, {"blocks", std::move(blocks)}};
}

inline BlockMatrix block_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("blocks"))
    throw DomainError("block JSON: expected an object with n, k and blocks");
  const auto n = j.at("n").get<std::size_t>();
  const auto k = j.at("k").get<std::size_t>();
  const json& bl = j.at("blocks");
  if (!bl.is_array() || bl.size() != n * n)
    throw DimensionError("block JSON: blocks must hold n^2 matrices");
  std::vector<ComplexMatrix> blocks;
  for (const json& m : bl) blocks.push_back(matrix_from_json(m));
  return BlockMatrix(n, k, std::move(blocks));
}

inline json to_json(const std::vector<ComplexMatrix>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(to_json(m));
  return arr;
}

inline json to_json(const PropertyVerdict& v) {
  json j{{"property", to_string(v.property)},
         {"map_id", v.map_id},
         {"n", v.n},
         {"samples", v.samples},
         {"status", to_string(v.status)},
         {"worst_margin", v.worst_margin},
         {"witness", v.witness ? to_json(*v.witness) : json(nullptr)},
         {"seed", v.seed}};
  if (v.witness && v.witness_property != v.property)
    j["witness_property"] = to_string(v.witness_property);
  if (!v.details.empty()) {
    json det = json::object();
    for (const auto& [key, val] : v.details) det[key] = val;
    j["details"] = std::move(det);
  }
  return j;
}

inline json to_json(const SearchTarget& t) {
  json j{{"map_id", t.map_id}, {"property", to_string(t.property)}};
  if (uses_level(t.property)) j["n"] = t.n;
  j["k"] = t.k;
  return j;
}

inline json to_json(const Witness& w) {
  json j{{"target", to_json(w.target)},
         {"margin", w.margin},
         {"inputs", to_json(w.inputs)},
         {"seed", w.seed},
         {"evaluations_used", w.evaluations_used},
         {"provenance", w.provenance}};
  if (w.evaluator != w.target.property) j["evaluator"] = to_string(w.evaluator);
  return j;
}

inline json none_json(std::size_t budget, std::uint64_t seed) {
  return json{{"result", "none"}, {"budget", budget}, {"seed", seed}};
}

inline json to_json(const Claim& c) {
  json j{{"property", to_string(c.property)}};
  if (uses_level(c.property)) j["n"] = c.n;
  j["expected"] = to_string(c.expected);
  j["anchor"] = c.anchor;
  if (c.at) j["at"] = to_json(*c.at);
  return j;
}

inline json params_json(const MapDescriptor& d) {
  json p = json::object();
  switch (d.kind) {
    case MapKind::power: p["exponent"] = d.exponent; break;
    case MapKind::trace_abs:
    case MapKind::trace_pairing: p["P"] = to_json(*d.param); break;
    case MapKind::linear_conj: p["U"] = to_json(*d.param); break;
    case MapKind::constant: p["C"] = to_json(*d.param); break;
    case MapKind::punctured:
      p["base"] = d.base->id;
      p["A0"] = to_json(*d.param);
      p["radius"] = d.puncture_radius;
      break;
    case MapKind::unitized: p["base"] = d.base->id; break;
    default: break;
  }
  return p;
}

inline json to_json(const MapDescriptor& d) {
  json claims = json::array();
  for (const auto& c : d.claims) claims.push_back(to_json(c));
  return json{{"id", d.id},
              {"k", d.k},
              {"m", d.m},
              {"params", params_json(d)},
              {"claims", std::move(claims)}};
}

inline json catalog_json(std::size_t k = 2) {
  json arr = json::array();
  for (const auto& d : catalog(k)) arr.push_back(to_json(d));
  return arr;
}

}  // namespace posmap
