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

#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "posmap/errors.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

inline constexpr std::size_t kPermanentMaxDim = 14;

/// Determinant by Gaussian elimination with partial pivoting.
inline Complex det(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1.0;
  ComplexMatrix a = m;
  Complex result{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == Complex{0.0, 0.0}) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      result = -result;
    }
    const Complex p = a(col, col);
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / p;
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return result;
}

/**
 * Permanent by Ryser's inclusion-exclusion formula, walking subsets in Gray
 * code order so each step updates the row sums with one column.
 *
 *   per(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij
 */
inline Complex permanent(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kPermanentMaxDim)
    throw DomainError("permanent: dimension above cap of 14");
  if (n == 0) return 1.0;
  std::vector<Complex> row_sums(n, Complex{0.0, 0.0});
  Complex total{0.0, 0.0};
  std::uint32_t gray = 0;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t k = 1; k < count; ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t flipped = next ^ gray;
    const int col = std::countr_zero(flipped);
    const double sign_add = (next & flipped) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sums[i] += sign_add * m(i, col);
    gray = next;
    Complex prod{1.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) prod *= row_sums[i];
    const int bits = std::popcount(gray);
    total += ((bits & 1) ? -1.0 : 1.0) * prod;
  }
  return (n & 1) ? -total : total;
}

}  // namespace posmap
