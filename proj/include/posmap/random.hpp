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
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "posmap/errors.hpp"
#include "posmap/matrix.hpp"
#include "posmap/spectral.hpp"

namespace posmap {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seeded random stream. (seed, stream) pairs give independent streams, so
/// worker w of a parallel run uses Rng(seed, w).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5851F42D4C957F2Dull))) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  /// Uniform in the half-open interval (lo, hi].
  double uniform_left_open(double lo, double hi) { return hi - uniform(0.0, hi - lo); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  std::uint64_t next_u64() { return engine_(); }

  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal() {
    const double re = normal(), im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

 private:
  std::mt19937_64 engine_;
};

enum class Style {
  ginibre,
  wishart,
  diag_positive,
  toeplitz_cosine,
  gram_columns,
  ordered_pair,
  positive_with_unit,
};

inline std::string_view to_string(Style s) {
  switch (s) {
    case Style::ginibre: return "ginibre";
    case Style::wishart: return "wishart";
    case Style::diag_positive: return "diag-positive";
    case Style::toeplitz_cosine: return "toeplitz-cosine";
    case Style::gram_columns: return "gram-columns";
    case Style::ordered_pair: return "ordered-pair";
    case Style::positive_with_unit: return "positive-with-unit";
  }
  return "?";
}

inline Style style_from_string(std::string_view s) {
  for (Style st : {Style::ginibre, Style::wishart, Style::diag_positive,
                   Style::toeplitz_cosine, Style::gram_columns,
                   Style::ordered_pair, Style::positive_with_unit})
    if (to_string(st) == s) return st;
  throw DomainError("unknown generator style: " + std::string(s));
}

struct StyleParams {
  int rank = 0;                 // wishart / gram-columns / ordered-pair; 0 = full
  std::optional<double> theta;  // toeplitz-cosine; drawn from (0, pi) if unset
  double shift = 1.0;           // positive-with-unit: W + shift * I
};

namespace gen {

inline ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (auto& z : g.entries()) z = rng.complex_normal();
  return g;
}

/// G*G / r for an r x dim Gaussian G; rank min(r, dim), PSD by construction.
inline ComplexMatrix wishart(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank == 0 || rank > dim) rank = dim;
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return (g.adjoint() * g) * (1.0 / static_cast<double>(rank));
}

inline ComplexMatrix diag_positive(std::size_t dim, Rng& rng) {
  ComplexMatrix d(dim);
  for (std::size_t i = 0; i < dim; ++i) d(i, i) = rng.uniform_left_open(0.0, 2.0);
  return d;
}

/// Entries cos((i - j) theta): the Gram matrix of the planar unit vectors
/// (cos j theta, sin j theta), so PSD with rank <= 2.
inline ComplexMatrix toeplitz_cosine(std::size_t dim, double theta) {
  ComplexMatrix t(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      t(i, j) = std::cos((static_cast<double>(i) - static_cast<double>(j)) * theta);
  return t;
}

/// Gram matrix of dim random unit vectors in C^rank (unit diagonal).
inline ComplexMatrix gram_columns(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank == 0) rank = dim;
  std::vector<std::vector<Complex>> vecs(dim, std::vector<Complex>(rank));
  for (auto& v : vecs) {
    double nrm = 0.0;
    for (auto& z : v) {
      z = rng.complex_normal();
      nrm += std::norm(z);
    }
    nrm = std::sqrt(nrm);
    for (auto& z : v) z /= nrm;
  }
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t l = 0; l < rank; ++l) s += std::conj(vecs[i][l]) * vecs[j][l];
      g(i, j) = s;
    }
  return g;
}

/// Haar-ish unitary: Gram-Schmidt on a Ginibre matrix.
inline ComplexMatrix unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g = ginibre(dim, rng);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot{0.0, 0.0};
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(g(r, p)) * g(r, c);
      for (std::size_t r = 0; r < dim; ++r) g(r, c) -= dot * g(r, p);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) nrm += std::norm(g(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < dim; ++r) g(r, c) /= nrm;
  }
  return g;
}

/// Random matrix with operator norm exactly `norm`.
inline ComplexMatrix contraction(std::size_t dim, double norm, Rng& rng) {
  ComplexMatrix g = ginibre(dim, rng);
  return g * (norm / op_norm(g));
}

/// Hermitian Gaussian step (G + G*)/2.
inline ComplexMatrix hermitian_gaussian(std::size_t dim, Rng& rng) {
  return ginibre(dim, rng).hermitian_part();
}

}  // namespace gen

/**
 * One draw of the given style. Returns one matrix, or (P, Q) with
 * P >= Q >= 0 for ordered-pair. Deterministic in (style, dim, seed, params).
 */
inline std::vector<ComplexMatrix> sample(Style style, std::size_t dim, Rng& rng,
                                         const StyleParams& params = {}) {
  if (dim == 0) throw DimensionError("sample: dim must be positive");
  if (params.rank < 0) throw DomainError("sample: rank must be >= 0");
  const auto rank = static_cast<std::size_t>(params.rank);
  switch (style) {
    case Style::ginibre: return {gen::ginibre(dim, rng)};
    case Style::wishart: return {gen::wishart(dim, rank, rng)};
    case Style::diag_positive: return {gen::diag_positive(dim, rng)};
    case Style::toeplitz_cosine: {
      const double theta =
          params.theta ? *params.theta : rng.uniform(0.0, std::numbers::pi);
      if (!std::isfinite(theta)) throw DomainError("sample: theta must be finite");
      return {gen::toeplitz_cosine(dim, theta)};
    }
    case Style::gram_columns: return {gen::gram_columns(dim, rank, rng)};
    case Style::ordered_pair: {
      ComplexMatrix q = gen::wishart(dim, rank, rng);
      ComplexMatrix p = q + gen::wishart(dim, rank, rng);
      return {std::move(p), std::move(q)};
    }
    case Style::positive_with_unit: {
      if (!(params.shift >= 0.0)) throw DomainError("sample: shift must be >= 0");
      return {gen::wishart(dim, rank, rng) + ComplexMatrix::identity(dim) * params.shift};
    }
  }
  throw DomainError("sample: unknown style");
}

inline std::vector<ComplexMatrix> sample(Style style, std::size_t dim,
                                         std::uint64_t seed,
                                         const StyleParams& params = {}) {
  Rng rng(seed);
  return sample(style, dim, rng, params);
}

}  // namespace posmap
