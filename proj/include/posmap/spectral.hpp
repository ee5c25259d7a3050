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
#include <cmath>
#include <numeric>
#include <vector>

#include "posmap/errors.hpp"
#include "posmap/matrix.hpp"
#include "posmap/tolerance.hpp"

namespace posmap {

struct HermitianSpectrum {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }

  /// V diag(f(lambda)) V*
  template <class F>
  ComplexMatrix apply(F&& f) const {
    const std::size_t n = eigenvalues.size();
    std::vector<double> fl(n);
    for (std::size_t i = 0; i < n; ++i) fl[i] = f(eigenvalues[i]);
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex s{0.0, 0.0};
        for (std::size_t l = 0; l < n; ++l)
          if (fl[l] != 0.0)
            s += eigenvectors(i, l) * fl[l] * std::conj(eigenvectors(j, l));
        r(i, j) = s;
      }
    return r;
  }

  ComplexMatrix reconstruct() const {
    return apply([](double x) { return x; });
  }
};

inline constexpr int kJacobiMaxSweeps = 100;

/**
 * Full spectrum of the Hermitian part (M + M*)/2 by cyclic Jacobi rotations.
 *
 * Converged when the off-diagonal Frobenius mass drops below
 * eig_offdiag_tol * ||M||_F. Eigenvalues come back ascending; ties keep the
 * order of the diagonal, so the result is a deterministic function of M.
 */
inline HermitianSpectrum hermitian_eig(const ComplexMatrix& m,
                                       const ToleranceConfig& tol = {}) {
  if (!m.all_finite()) throw NumericalError("hermitian_eig: non-finite entry");
  const std::size_t n = m.dim();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = tol.eig_offdiag_tol * a.fro_norm();

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_mass() > target) {
    if (++sweep > kJacobiMaxSweeps)
      throw NumericalError("hermitian_eig: Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = [[c, s e^{i phi}], [-s e^{-i phi}, c]] on (p, q); A <- U* A U.
        const Complex se = s * phase;
        const Complex sec = s * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sec * akq;
          a(k, q) = se * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - se * aqk;
          a(q, k) = sec * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sec * vkq;
          v(k, q) = se * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r)
      out.eigenvectors(r, c) = v(r, order[c]);
  }
  return out;
}

inline double lambda_min(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
  if (m.dim() == 1) {
    if (!m.all_finite()) throw NumericalError("lambda_min: non-finite entry");
    return m(0, 0).real();
  }
  return hermitian_eig(m, tol).min();
}

struct PsdResult {
  bool flag;
  double margin;  // lambda_min of the Hermitian part; reported even on failure
};

inline PsdResult is_psd(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
  if (m.empty()) throw DimensionError("is_psd: empty matrix");
  const double margin = lambda_min(m, tol);
  return {margin >= -tol.psd_band(m.fro_norm()), margin};
}

/// X >= Y in the Loewner order, i.e. is_psd(X - Y).
inline PsdResult loewner_geq(const ComplexMatrix& x, const ComplexMatrix& y,
                             const ToleranceConfig& tol = {}) {
  if (x.dim() != y.dim()) throw DimensionError("loewner_geq: dimension mismatch");
  return is_psd(x - y, tol);
}

namespace detail {
inline HermitianSpectrum psd_spectrum(const ComplexMatrix& m,
                                      const ToleranceConfig& tol,
                                      const char* what) {
  HermitianSpectrum sp = hermitian_eig(m, tol);
  if (sp.min() < -tol.psd_band(m.fro_norm()))
    throw DomainError(std::string(what) + ": input is not positive semidefinite");
  return sp;
}
}  // namespace detail

/// PSD square root, eigenvalues below zero clamped to zero.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
  return detail::psd_spectrum(m, tol, "sqrt_psd").apply([](double x) {
    return x > 0.0 ? std::sqrt(x) : 0.0;
  });
}

/// Spectral pseudoinverse; eigenvalues <= pinv_cutoff_rel * lambda_max map to 0.
inline ComplexMatrix pinv_psd(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
  const HermitianSpectrum sp = detail::psd_spectrum(m, tol, "pinv_psd");
  const double cutoff = tol.pinv_cutoff_rel * std::max(sp.max(), 0.0);
  return sp.apply([cutoff](double x) { return x > cutoff && x > 0.0 ? 1.0 / x : 0.0; });
}

/// (M^{1/2})+ with the cutoff taken on the spectrum of M itself: the square
/// root of a rounding-level eigenvalue is far above a cutoff on sqrt(M).
inline ComplexMatrix pinv_sqrt_psd(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
  const HermitianSpectrum sp = detail::psd_spectrum(m, tol, "pinv_sqrt_psd");
  const double cutoff = tol.pinv_cutoff_rel * std::max(sp.max(), 0.0);
  return sp.apply([cutoff](double x) { return x > cutoff && x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; });
}

/// Inverse of a strictly positive matrix. Throws when lambda_min is inside
/// the PSD band (numerically singular).
inline ComplexMatrix inverse_pd(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
  const HermitianSpectrum sp = hermitian_eig(m, tol);
  if (sp.min() <= tol.psd_band(m.fro_norm()))
    throw DomainError("inverse_pd: matrix is not strictly positive");
  return sp.apply([](double x) { return 1.0 / x; });
}

/// |A| = (A* A)^{1/2}
inline ComplexMatrix polar_abs(const ComplexMatrix& a, const ToleranceConfig& tol = {}) {
  return sqrt_psd(a.adjoint() * a, tol);
}

inline double op_norm(const ComplexMatrix& a) {
  if (!a.all_finite()) throw NumericalError("op_norm: non-finite entry");
  if (a.dim() == 1) return std::abs(a(0, 0));
  const double top = hermitian_eig(a.adjoint() * a).max();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace posmap
