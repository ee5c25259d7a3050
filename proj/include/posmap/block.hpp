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
#include <utility>
#include <vector>

#include "posmap/errors.hpp"
#include "posmap/matrix.hpp"
#include "posmap/spectral.hpp"
#include "posmap/tolerance.hpp"

namespace posmap {

/// n x n grid of k x k blocks: an element of M_n(M_k(C)).
class BlockMatrix {
 public:
  BlockMatrix() = default;

  BlockMatrix(std::size_t n, std::size_t k)
      : n_(n), k_(k), blocks_(n * n, ComplexMatrix(k)) {}

  BlockMatrix(std::size_t n, std::size_t k, std::vector<ComplexMatrix> blocks)
      : n_(n), k_(k), blocks_(std::move(blocks)) {
    if (blocks_.size() != n_ * n_)
      throw DimensionError("BlockMatrix: expected n^2 blocks");
    for (const auto& b : blocks_)
      if (b.dim() != k_) throw DimensionError("BlockMatrix: every block must be k x k");
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

  ComplexMatrix& operator()(std::size_t i, std::size_t j) { return blocks_[i * n_ + j]; }
  const ComplexMatrix& operator()(std::size_t i, std::size_t j) const {
    return blocks_[i * n_ + j];
  }

  const std::vector<ComplexMatrix>& blocks() const { return blocks_; }

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<ComplexMatrix> blocks_;
};

/// Block (i, j) lands at row offset i*k, column offset j*k.
inline ComplexMatrix assemble(const BlockMatrix& b) {
  const std::size_t n = b.n();
  if (n == 0) throw DimensionError("assemble: empty block matrix");
  // Blocks may differ in size from k() after amplification to another
  // codomain; use the actual block size.
  const std::size_t k = b(0, 0).dim();
  ComplexMatrix m(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix& blk = b(i, j);
      if (blk.dim() != k) throw DimensionError("assemble: ragged blocks");
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) m(i * k + p, j * k + q) = blk(p, q);
    }
  return m;
}

inline BlockMatrix split(const ComplexMatrix& m, std::size_t n, std::size_t k) {
  if (n == 0 || k == 0 || m.dim() != n * k)
    throw DimensionError("split: dim(M) must equal n*k");
  BlockMatrix b(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) b(i, j)(p, q) = m(i * k + p, j * k + q);
  return b;
}

/// [[a, x], [y, b]] assembled.
inline ComplexMatrix assemble2(const ComplexMatrix& a, const ComplexMatrix& x,
                               const ComplexMatrix& y, const ComplexMatrix& b) {
  return assemble(BlockMatrix(2, a.dim(), {a, x, y, b}));
}

/// Entrywise application of a map to the blocks: Phi_n([a_ij]) = [Phi(a_ij)].
template <class Map>
BlockMatrix amplify_with(Map&& phi, const BlockMatrix& b, std::size_t domain_dim) {
  if (b.k() != domain_dim)
    throw DimensionError("amplify: block size " + std::to_string(b.k()) +
                         " does not match map domain " + std::to_string(domain_dim));
  std::vector<ComplexMatrix> out;
  out.reserve(b.n() * b.n());
  for (const auto& blk : b.blocks()) out.push_back(phi(blk));
  const std::size_t m = out.front().dim();
  return BlockMatrix(b.n(), m, std::move(out));
}

struct SchurRoutes {
  bool range_route;       // A >= 0, (I - A A+) X = 0, B - X* A+ X >= 0
  double range_residual;  // ||(I - A A+) X||_F
  bool direct;            // lambda_min of the assembled block
  double margin;
};

/// Both positivity routes for [[A, X], [X*, B]], without reconciling them.
inline SchurRoutes schur_routes(const ComplexMatrix& a, const ComplexMatrix& x,
                                const ComplexMatrix& b, const ToleranceConfig& tol = {}) {
  if (a.dim() != x.dim() || b.dim() != x.dim())
    throw DimensionError("schur: A, X, B must share one dimension");
  const PsdResult whole = is_psd(assemble2(a, x, x.adjoint(), b), tol);
  SchurRoutes r{false, 0.0, whole.flag, whole.margin};
  if (!is_psd(a, tol).flag) {
    r.range_residual = std::nan("");
    return r;
  }
  const ComplexMatrix ap = pinv_psd(a, tol);
  const ComplexMatrix proj = ComplexMatrix::identity(a.dim()) - a * ap;
  r.range_residual = (proj * x).fro_norm();
  if (r.range_residual > tol.equality_band(x.fro_norm())) return r;
  r.range_route = is_psd(b - x.adjoint() * ap * x, tol).flag;
  return r;
}

/**
 * Is [[A, X], [X*, B]] >= 0? Decided by the range-condition form of the Schur
 * complement and cross-checked against the assembled eigenvalue. A
 * disagreement away from the boundary throws InternalInconsistency.
 */
inline PsdResult schur_block_psd(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const ComplexMatrix& b, const ToleranceConfig& tol = {}) {
  const SchurRoutes r = schur_routes(a, x, b, tol);
  if (r.range_route != r.direct) {
    const double scale =
        std::max({1.0, a.fro_norm(), b.fro_norm(), x.fro_norm()});
    if (std::abs(r.margin) > std::sqrt(tol.psd_rel_tol) * scale)
      throw InternalInconsistency("schur_block_psd: range-condition and eigenvalue routes disagree");
  }
  return {r.direct, r.margin};
}

/// B - X* (A + eps I)^{-1} X >= 0, the regularized form valid for singular A.
/// False when A or B is not PSD.
inline bool schur_eps_psd(const ComplexMatrix& a, const ComplexMatrix& x,
                          const ComplexMatrix& b, double eps,
                          const ToleranceConfig& tol = {}) {
  if (a.dim() != x.dim() || b.dim() != x.dim())
    throw DimensionError("schur: A, X, B must share one dimension");
  if (!(eps > 0.0)) throw DomainError("schur_eps_psd: eps must be positive");
  if (!is_psd(a, tol).flag || !is_psd(b, tol).flag) return false;
  const HermitianSpectrum sp = hermitian_eig(a, tol);
  const ComplexMatrix inv = sp.apply([eps](double l) { return 1.0 / (std::max(l, 0.0) + eps); });
  return is_psd(b - x.adjoint() * inv * x, tol).flag;
}

struct Contraction {
  ComplexMatrix k;
  double norm;
};

/// K with X = A^{1/2} K B^{1/2} and ||K|| <= 1. K is never projected onto
/// the unit ball: a norm above 1 + equality_tol is an error.
inline Contraction contraction_factor(const ComplexMatrix& a, const ComplexMatrix& x,
                                      const ComplexMatrix& b,
                                      const ToleranceConfig& tol = {}) {
  if (!schur_block_psd(a, x, b, tol).flag)
    throw DomainError("contraction_factor: block is not positive semidefinite");
  const ComplexMatrix ra = sqrt_psd(a, tol), rb = sqrt_psd(b, tol);
  ComplexMatrix k = pinv_sqrt_psd(a, tol) * x * pinv_sqrt_psd(b, tol);
  const double err = (ra * k * rb - x).fro_norm();
  if (err > tol.equality_band(x.fro_norm()))
    throw NumericalError("contraction_factor: reconstruction failed (rank below cutoff)");
  const double nrm = op_norm(k);
  if (nrm > 1.0 + tol.equality_tol)
    throw NumericalError("contraction_factor: ||K|| exceeds 1");
  return {std::move(k), nrm};
}

struct OrderBlockResult {
  bool direct;    // X >= Y
  bool via_block; // [[X, Y], [Y, Y]] >= 0
  double direct_margin;
  double block_margin;
};

inline OrderBlockResult order_block(const ComplexMatrix& x, const ComplexMatrix& y,
                                    const ToleranceConfig& tol = {}) {
  if (x.dim() != y.dim()) throw DimensionError("order_block: dimension mismatch");
  const PsdResult d = loewner_geq(x, y, tol);
  const PsdResult v = is_psd(assemble2(x, y, y, y), tol);
  return {d.flag, v.flag, d.margin, v.margin};
}

/// [[0, X], [X*, A]] >= 0 holds exactly when X = 0; the returned verdict is
/// asserted against ||X||_F <= equality_tol.
inline bool corner_zero_test(const ComplexMatrix& x, const ComplexMatrix& a,
                             const ToleranceConfig& tol = {}) {
  if (x.dim() != a.dim()) throw DimensionError("corner_zero_test: dimension mismatch");
  const bool psd =
      is_psd(assemble2(ComplexMatrix::zeros(x.dim()), x, x.adjoint(), a), tol).flag;
  const bool zero = x.fro_norm() <= tol.equality_tol;
  if (psd != zero)
    throw InternalInconsistency("corner_zero_test: verdict contradicts X = 0 criterion");
  return psd;
}

}  // namespace posmap
