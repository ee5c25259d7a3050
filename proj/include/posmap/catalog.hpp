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
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "posmap/claims.hpp"
#include "posmap/maps.hpp"

namespace posmap {

/// Ids of the catalog families, in listing order.
inline const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{
      "modulus",        "power-1.5",      "mixed",      "determinant",
      "permanent",      "operator-norm",  "frobenius-norm", "trace-abs",
      "linear-conj",    "state",          "constant",   "punctured-operator-norm"};
  return ids;
}

/// Families whose members are scalar functions on C (domain dimension 1).
inline bool is_scalar_family(std::string_view id) {
  return id == "modulus" || id == "mixed" || id.starts_with("power-");
}

struct OpenQuestion {
  std::string id;
  std::string question;
};

/// Questions the catalog deliberately leaves unresolved; reports list them
/// with status "unknown".
inline const std::vector<OpenQuestion>& open_questions() {
  static const std::vector<OpenQuestion> qs{
      {"smon2-not-3-positive",
       "is there a map in S_mon+^(2) that is not 3-positive? (no candidate in catalog)"},
      {"3-positive-implies-smon2", "is every 3-positive map in S_mon+^(2)?"},
  };
  return qs;
}

namespace catalog_detail {

/// diag(k, k-1, ..., 1) / (k(k+1)/2): a full-rank density matrix.
inline ComplexMatrix default_density(std::size_t k) {
  std::vector<double> w(k);
  const double total = static_cast<double>(k * (k + 1)) / 2.0;
  for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<double>(k - i) / total;
  return ComplexMatrix::diagonal(w);
}

/// Normalized DFT matrix.
inline ComplexMatrix fourier_unitary(std::size_t k) {
  ComplexMatrix u(k);
  const double s = 1.0 / std::sqrt(static_cast<double>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      u(i, j) = std::polar(s, 2.0 * std::numbers::pi * static_cast<double>(i * j) /
                                  static_cast<double>(k));
  return u;
}

inline ComplexMatrix first_unit_projection(std::size_t k) {
  ComplexMatrix e(k);
  e(0, 0) = 1.0;
  return e;
}

/// 1, 2, ..., k on the diagonal and ones just above it.
inline ComplexMatrix bidiagonal(std::size_t k) {
  ComplexMatrix a(k);
  for (std::size_t i = 0; i < k; ++i) {
    a(i, i) = static_cast<double>(i + 1);
    if (i + 1 < k) a(i, i + 1) = 1.0;
  }
  return a;
}

/// [[0, 1], [0, 0]] embedded in the top-left corner.
inline ComplexMatrix nilpotent(std::size_t k) {
  ComplexMatrix a(k);
  a(0, 1) = 1.0;
  return a;
}

inline Claim claim(Property p, int n, Expectation e, std::string anchor) {
  return Claim{p, n, e, std::move(anchor), std::nullopt};
}

}  // namespace catalog_detail

/**
 * Catalog member `id` instantiated at domain dimension k (ignored for the
 * scalar families). Claims are attached here, as data.
 */
inline MapDescriptor make_map(std::string_view id, std::size_t k = 2) {
  using namespace catalog_detail;
  using P = Property;
  using E = Expectation;
  if (k == 0) throw DimensionError("make_map: k must be positive");

  if (id == "modulus") {
    MapDescriptor d = maps::modulus();
    d.claims = {
        claim(P::n_positive, 3, E::holds, "entrywise modulus of a 3x3 PSD matrix is PSD"),
        claim(P::monotone, 2, E::holds, "2x2 monotonicity via the (|b|-|f|)^2 bound"),
        claim(P::n_positive, 6, E::fails, "not 6-positive; cosine-Toeplitz witness"),
        claim(P::monotone, 4, E::fails, "not in S_mon+^(4); (cosine-Toeplitz, 0) pair"),
        claim(P::additive_general, 1, E::fails, "|1 + i| != |1| + |i|"),
        claim(P::cstar_identity, 1, E::holds, "|z|^2 = |z|^2"),
        claim(P::norm_multiplicative, 1, E::holds, "|zw| = |z||w|"),
        claim(P::star_map, 1, E::holds, "|conj z| = |z|"),
    };
    return d;
  }
  if (id.starts_with("power-")) {
    const std::string num(id.substr(6));
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(num, &used);
      if (used != num.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("unknown map id: " + std::string(id));
    }
    MapDescriptor d = maps::power(p);
    if (p > 1.0 && p < 2.0) {
      d.claims = {
          claim(P::n_positive, 3, E::holds, "Hadamard powers p >= 1 of 3x3 nonnegative PSD matrices"),
          claim(P::n_positive, 4, E::fails, "4x4 cosine-Toeplitz witness"),
          claim(P::monotone, 2, E::holds, "2x2 monotonicity of |z|^p, 1 < p < 2"),
          claim(P::starshaped, 1, E::holds, "continuous, S_mon+^(2) and Phi(0) = 0"),
      };
    }
    return d;
  }
  if (id == "mixed") {
    MapDescriptor d = maps::mixed();
    d.claims = {
        claim(P::n_positive, 3, E::holds, "sum of 3-positive powers and a constant"),
        claim(P::monotone, 2, E::holds, "sum of S_mon+^(2) maps"),
        claim(P::zero_preserving, 1, E::fails, "Phi(0) = 1/3"),
        claim(P::starshaped, 1, E::fails, "Phi(0) != 0 breaks starshapedness"),
        claim(P::additive_positive, 1, E::fails, "not additive on positive numbers"),
    };
    return d;
  }
  if (id == "determinant" || id == "permanent") {
    MapDescriptor d = id == "determinant" ? maps::determinant(k) : maps::permanent(k);
    d.claims = {
        claim(P::completely_positive, 4, E::holds, "Schur-product closure of the PSD cone"),
        claim(P::strong_superadditive, 1, E::holds, "strongly superadditive on the PSD cone"),
        claim(P::superadditive_offset2, 1, E::holds, "implied by 3-positivity"),
        claim(P::lieb_cs, 1, E::holds, "implied by 2-positivity"),
        claim(P::star_map, 1, E::holds, "value at A* is the conjugate"),
    };
    return d;
  }
  if (id == "operator-norm") {
    MapDescriptor d = maps::operator_norm(k);
    Claim mult = claim(P::mult_domain, 1, E::fails,
                       "multiplicative-domain transfer needs 3-positivity");
    mult.at = first_unit_projection(k);
    d.claims = {
        claim(P::lieb, 1, E::holds, "the C*-norm satisfies block Cauchy-Schwarz"),
        claim(P::n_positive, 2, E::holds, "Lieb *-maps are 2-positive"),
        claim(P::n_positive, 3, E::fails, "3-positive norms are multiplicative; this one is not"),
        claim(P::strong_superadditive, 1, E::fails, "diagonal triple, 0 + 1 < 1 + 1"),
        claim(P::cstar_identity, 1, E::holds, "||A*A|| = ||A||^2"),
        claim(P::norm_multiplicative, 1, E::fails, "||XY|| != ||X|| ||Y|| for orthogonal projections"),
        mult,
        claim(P::choi_a, 1, E::holds, "Lieb maps with Phi(I) > 0"),
        claim(P::choi_b, 1, E::holds, "unital Lieb maps"),
        claim(P::star_map, 1, E::holds, "||A*|| = ||A||"),
        claim(P::strict_positivity, 1, E::holds, "unital Lieb maps are strictly positive"),
    };
    return d;
  }
  if (id == "frobenius-norm") {
    MapDescriptor d = maps::frobenius_norm(k);
    d.claims = {
        claim(P::lieb, 1, E::unknown, "not the C*-norm; exploratory"),
        claim(P::cstar_identity, 1, E::fails, "||I||_F = sqrt(k) but ||I*I||_F != k"),
    };
    return d;
  }
  if (id == "trace-abs") {
    MapDescriptor d = maps::trace_abs(default_density(k));
    d.claims = {
        claim(P::n_positive, 3, E::holds, "modulus of a completely positive functional"),
        claim(P::monotone, 2, E::holds, "modulus of a completely positive functional"),
        claim(P::n_positive, 4, E::fails, "4x4 cosine-Toeplitz witness, lifted"),
    };
    return d;
  }
  if (id == "linear-conj") {
    MapDescriptor d = maps::linear_conj(fourier_unitary(k));
    Claim mult = claim(P::mult_domain, 1, E::holds, "conjugation by a unitary is multiplicative");
    mult.at = bidiagonal(k);
    d.claims = {
        claim(P::completely_positive, 4, E::holds, "Kraus form with one operator"),
        mult,
        claim(P::choi_a, 1, E::holds, "2-positive linear maps"),
        claim(P::choi_b, 1, E::holds, "unital 2-positive linear maps"),
        claim(P::additive_general, 1, E::holds, "linear"),
        claim(P::star_map, 1, E::holds, "linear and positive"),
        claim(P::strict_positivity, 1, E::holds, "unital"),
    };
    return d;
  }
  if (id == "state") {
    MapDescriptor d = maps::state(default_density(k));
    d.claims = {
        claim(P::completely_positive, 4, E::holds, "positive linear functional"),
        claim(P::choi_a, 1, E::holds, "unital 2-positive"),
        claim(P::choi_b, 1, E::holds, "unital 2-positive"),
        claim(P::strict_positivity, 1, E::holds, "unital"),
    };
    return d;
  }
  if (id == "constant") {
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<double>(i + 1) / static_cast<double>(k);
    MapDescriptor d = maps::constant(ComplexMatrix::diagonal(w), k);
    d.claims = {
        claim(P::completely_positive, 4, E::holds, "constant PSD value"),
        claim(P::superadditive_offset1, 1, E::holds, "equality case: C + C = C + C"),
        claim(P::starshaped, 1, E::fails, "C is not <= alpha C at A = 0"),
    };
    return d;
  }
  if (id == "punctured-operator-norm") {
    if (k < 2) throw DimensionError("punctured-operator-norm needs k >= 2");
    MapDescriptor d = maps::puncture(maps::operator_norm(k), nilpotent(k));
    d.id = "punctured-operator-norm";
    d.claims = {
        claim(P::star_map, 1, E::fails, "value 0 at A0 but ||A0*|| = 1"),
        claim(P::block_preservation, 1, E::holds, "puncturing only shrinks an off-diagonal entry"),
        claim(P::lieb, 1, E::holds, "Lieb by block preservation"),
    };
    return d;
  }
  throw DomainError("unknown map id: " + std::string(id));
}

inline std::vector<MapDescriptor> catalog(std::size_t k = 2) {
  std::vector<MapDescriptor> out;
  for (const auto& id : catalog_ids()) out.push_back(make_map(id, k));
  return out;
}

}  // namespace posmap
