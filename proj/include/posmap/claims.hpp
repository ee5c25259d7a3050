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

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "posmap/errors.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

enum class Property {
  positive,
  n_positive,
  completely_positive,
  monotone,  // n = 1: monotone on positives; n >= 2: Phi_n monotone (S_mon+^(n))
  lieb,
  lieb_cs,
  block_preservation,
  superadditive_offset2,  // 2 Phi(0) + Phi(A+B) >= Phi(A) + Phi(B)
  superadditive_offset1,  //   Phi(0) + Phi(A+B) >= Phi(A) + Phi(B)
  superadditive,
  strong_superadditive,
  starshaped,
  choi_a,
  choi_b,
  mult_domain,
  star_map,
  strict_positivity,
  additive_positive,  // Phi(beta A + B) = beta Phi(A) + Phi(B) on positives
  additive_general,   // the same identity on arbitrary inputs
  cstar_identity,
  norm_multiplicative,
  zero_preserving,
};

inline constexpr std::array<std::pair<Property, std::string_view>, 22> kPropertyNames{{
    {Property::positive, "positive"},
    {Property::n_positive, "n-positive"},
    {Property::completely_positive, "completely-positive"},
    {Property::monotone, "monotone"},
    {Property::lieb, "lieb"},
    {Property::lieb_cs, "lieb-cs"},
    {Property::block_preservation, "block-preservation"},
    {Property::superadditive_offset2, "superadditive-offset2"},
    {Property::superadditive_offset1, "superadditive-offset1"},
    {Property::superadditive, "superadditive"},
    {Property::strong_superadditive, "strong-superadditive"},
    {Property::starshaped, "starshaped"},
    {Property::choi_a, "choi-a"},
    {Property::choi_b, "choi-b"},
    {Property::mult_domain, "mult-domain"},
    {Property::star_map, "star-map"},
    {Property::strict_positivity, "strict-positivity"},
    {Property::additive_positive, "additive-positive"},
    {Property::additive_general, "additive"},
    {Property::cstar_identity, "cstar-identity"},
    {Property::norm_multiplicative, "norm-multiplicative"},
    {Property::zero_preserving, "zero-preserving"},
}};

inline std::string_view to_string(Property p) {
  for (const auto& [prop, name] : kPropertyNames)
    if (prop == p) return name;
  return "?";
}

/// Whether the n field of a (property, n) pair means anything.
inline bool uses_level(Property p) {
  return p == Property::n_positive || p == Property::monotone ||
         p == Property::completely_positive;
}

struct PropertySpec {
  Property property;
  std::optional<int> n;  // set when the name itself carried a level
};

/// Accepts canonical names plus "<n>-positive" and "smon".
inline PropertySpec parse_property(std::string_view s) {
  for (const auto& [prop, name] : kPropertyNames)
    if (name == s) return {prop, std::nullopt};
  if (s == "smon") return {Property::monotone, std::nullopt};
  constexpr std::string_view suffix = "-positive";
  if (s.size() > suffix.size() && s.ends_with(suffix)) {
    const std::string_view digits = s.substr(0, s.size() - suffix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 1)
      return {Property::n_positive, n};
  }
  throw DomainError("unknown property: " + std::string(s));
}

enum class Expectation { holds, fails, unknown };

inline std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::holds: return "holds";
    case Expectation::fails: return "fails";
    case Expectation::unknown: return "unknown";
  }
  return "?";
}

/// A claimed property of a catalog map. `at` carries the fixed element some
/// properties are stated at (the multiplicative-domain point).
struct Claim {
  Property property;
  int n = 1;
  Expectation expected = Expectation::unknown;
  std::string anchor;
  std::optional<ComplexMatrix> at;
};

}  // namespace posmap
