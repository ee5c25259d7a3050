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
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posmap/block.hpp"
#include "posmap/claims.hpp"
#include "posmap/det.hpp"
#include "posmap/errors.hpp"
#include "posmap/matrix.hpp"
#include "posmap/spectral.hpp"
#include "posmap/tolerance.hpp"

namespace posmap {

enum class MapKind {
  modulus,
  power,
  mixed,
  determinant,
  permanent,
  operator_norm,
  frobenius_norm,
  trace_abs,
  linear_conj,
  trace_pairing,
  constant,
  unitized,
  punctured,
  custom,
};

/**
 * A (generally nonlinear) map Phi: M_k(C) -> M_m(C).
 *
 * Scalar-valued maps have m = 1 and return 1x1 matrices. Descriptors are
 * immutable values; combinators hold their base by shared pointer.
 */
struct MapDescriptor {
  std::string id;
  MapKind kind = MapKind::custom;
  std::size_t k = 1;
  std::size_t m = 1;

  double exponent = 1.0;              // power
  std::optional<ComplexMatrix> param; // P, U, C or the puncture point
  std::optional<ComplexMatrix> conj;  // unitized: Phi(I)^{-1/2}
  double puncture_radius = 0.0;
  std::shared_ptr<const MapDescriptor> base;
  std::function<ComplexMatrix(const ComplexMatrix&)> fn;  // custom

  std::vector<Claim> claims;

  ComplexMatrix operator()(const ComplexMatrix& x) const;

  /// Inputs worth seeding searches with (puncture points and their adjoints).
  std::vector<ComplexMatrix> special_points() const {
    std::vector<ComplexMatrix> pts;
    if (kind == MapKind::punctured) {
      pts.push_back(*param);
      pts.push_back(param->adjoint());
    }
    if (base) {
      auto more = base->special_points();
      pts.insert(pts.end(), more.begin(), more.end());
    }
    return pts;
  }

  bool scalar_valued() const { return m == 1; }
};

inline ComplexMatrix evaluate(const MapDescriptor& d, const ComplexMatrix& x) {
  if (x.dim() != d.k)
    throw DimensionError("evaluate(" + d.id + "): expected a " + std::to_string(d.k) +
                         "x" + std::to_string(d.k) + " input, got " +
                         std::to_string(x.dim()));
  switch (d.kind) {
    case MapKind::modulus:
      return ComplexMatrix::scalar(std::abs(x(0, 0)));
    case MapKind::power:
      return ComplexMatrix::scalar(std::pow(std::abs(x(0, 0)), d.exponent));
    case MapKind::mixed: {
      const double r = std::abs(x(0, 0));
      return ComplexMatrix::scalar((std::pow(r, 1.5) + std::pow(r, 4.0 / 3.0) + 1.0) / 3.0);
    }
    case MapKind::determinant:
      return ComplexMatrix::scalar(det(x));
    case MapKind::permanent:
      return ComplexMatrix::scalar(permanent(x));
    case MapKind::operator_norm:
      return ComplexMatrix::scalar(op_norm(x));
    case MapKind::frobenius_norm:
      return ComplexMatrix::scalar(x.fro_norm());
    case MapKind::trace_abs:
      return ComplexMatrix::scalar(std::abs((x * *d.param).trace()));
    case MapKind::trace_pairing:
      return ComplexMatrix::scalar((x * *d.param).trace());
    case MapKind::linear_conj: {
      const ComplexMatrix& u = *d.param;
      const ComplexMatrix full = u.adjoint() * x * u;
      if (d.m == d.k) return full;
      ComplexMatrix out(d.m);
      for (std::size_t i = 0; i < d.m; ++i)
        for (std::size_t j = 0; j < d.m; ++j) out(i, j) = full(i, j);
      return out;
    }
    case MapKind::constant:
      return *d.param;
    case MapKind::unitized:
      return *d.conj * evaluate(*d.base, x) * *d.conj;
    case MapKind::punctured:
      if (fro_distance(x, *d.param) <= d.puncture_radius) return ComplexMatrix::zeros(d.m);
      return evaluate(*d.base, x);
    case MapKind::custom:
      return d.fn(x);
  }
  throw DomainError("evaluate: unknown map kind for " + d.id);
}

inline ComplexMatrix MapDescriptor::operator()(const ComplexMatrix& x) const {
  return evaluate(*this, x);
}

inline BlockMatrix amplify(const MapDescriptor& d, const BlockMatrix& b) {
  return amplify_with([&d](const ComplexMatrix& x) { return evaluate(d, x); }, b, d.k);
}

namespace maps {

inline std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline void require_psd(const ComplexMatrix& p, const ToleranceConfig& tol, const char* what) {
  if (p.empty() || !p.all_finite() || !is_psd(p, tol).flag)
    throw DomainError(std::string(what) + ": parameter matrix must be PSD");
}

inline MapDescriptor modulus() {
  MapDescriptor d;
  d.id = "modulus";
  d.kind = MapKind::modulus;
  return d;
}

inline MapDescriptor power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("power: exponent must be positive");
  MapDescriptor d;
  d.id = "power-" + format_number(p);
  d.kind = MapKind::power;
  d.exponent = p;
  return d;
}

/// z -> (|z|^{3/2} + |z|^{4/3} + 1) / 3
inline MapDescriptor mixed() {
  MapDescriptor d;
  d.id = "mixed";
  d.kind = MapKind::mixed;
  return d;
}

inline MapDescriptor determinant(std::size_t k) {
  MapDescriptor d;
  d.id = "determinant";
  d.kind = MapKind::determinant;
  d.k = k;
  return d;
}

inline MapDescriptor permanent(std::size_t k) {
  if (k > kPermanentMaxDim) throw DomainError("permanent: dimension above cap of 14");
  MapDescriptor d;
  d.id = "permanent";
  d.kind = MapKind::permanent;
  d.k = k;
  return d;
}

inline MapDescriptor operator_norm(std::size_t k) {
  MapDescriptor d;
  d.id = "operator-norm";
  d.kind = MapKind::operator_norm;
  d.k = k;
  return d;
}

inline MapDescriptor frobenius_norm(std::size_t k) {
  MapDescriptor d;
  d.id = "frobenius-norm";
  d.kind = MapKind::frobenius_norm;
  d.k = k;
  return d;
}

/// A -> |tr(A P)| for PSD P.
inline MapDescriptor trace_abs(const ComplexMatrix& p, const ToleranceConfig& tol = {}) {
  require_psd(p, tol, "trace_abs");
  MapDescriptor d;
  d.id = "trace-abs";
  d.kind = MapKind::trace_abs;
  d.k = p.dim();
  d.param = p;
  return d;
}

/// A -> tr(A P) for PSD P; a state when tr(P) = 1.
inline MapDescriptor trace_pairing(const ComplexMatrix& p, const ToleranceConfig& tol = {}) {
  require_psd(p, tol, "trace_pairing");
  MapDescriptor d;
  d.id = "trace-pairing";
  d.kind = MapKind::trace_pairing;
  d.k = p.dim();
  d.param = p;
  return d;
}

inline MapDescriptor state(const ComplexMatrix& p, const ToleranceConfig& tol = {}) {
  MapDescriptor d = trace_pairing(p, tol);
  if (std::abs(p.trace() - 1.0) > tol.equality_tol)
    throw DomainError("state: density matrix must have unit trace");
  d.id = "state";
  return d;
}

/**
 * X -> V* X V where V is the first m columns of the unitary U, so m < k
 * gives a compression by an isometry.
 */
inline MapDescriptor linear_conj(const ComplexMatrix& u, std::size_t m = 0,
                                 const ToleranceConfig& tol = {}) {
  const std::size_t k = u.dim();
  if (m == 0) m = k;
  if (k == 0 || m > k) throw DimensionError("linear_conj: need 0 < m <= k");
  if (!u.all_finite() ||
      fro_distance(u.adjoint() * u, ComplexMatrix::identity(k)) >
          tol.equality_band(static_cast<double>(k)))
    throw DomainError("linear_conj: U must be unitary");
  MapDescriptor d;
  d.id = "linear-conj";
  d.kind = MapKind::linear_conj;
  d.k = k;
  d.m = m;
  d.param = u;
  return d;
}

inline MapDescriptor constant(const ComplexMatrix& c, std::size_t k,
                              const ToleranceConfig& tol = {}) {
  require_psd(c, tol, "constant");
  if (k == 0) throw DimensionError("constant: domain dimension must be positive");
  MapDescriptor d;
  d.id = "constant";
  d.kind = MapKind::constant;
  d.k = k;
  d.m = c.dim();
  d.param = c;
  return d;
}

/// Psi(X) = Phi(I)^{-1/2} Phi(X) Phi(I)^{-1/2}. Needs Phi(I) strictly positive.
inline MapDescriptor unitize(const MapDescriptor& base, const ToleranceConfig& tol = {}) {
  const ComplexMatrix at_unit = evaluate(base, ComplexMatrix::identity(base.k));
  const HermitianSpectrum sp = hermitian_eig(at_unit, tol);
  if (sp.min() <= tol.psd_rel_tol)
    throw DomainError("unitize(" + base.id + "): Phi(I) is singular or not positive");
  MapDescriptor d;
  d.id = "unitize(" + base.id + ")";
  d.kind = MapKind::unitized;
  d.k = base.k;
  d.m = base.m;
  d.conj = sp.apply([](double l) { return 1.0 / std::sqrt(l); });
  d.base = std::make_shared<const MapDescriptor>(base);
  return d;
}

/// Phi everywhere except a Frobenius ball of radius equality_tol around a
/// non-self-adjoint point A0, where it returns 0.
inline MapDescriptor puncture(const MapDescriptor& base, const ComplexMatrix& a0,
                              const ToleranceConfig& tol = {}) {
  if (a0.dim() != base.k) throw DimensionError("puncture: point has wrong dimension");
  if (fro_distance(a0, a0.adjoint()) <= tol.equality_tol)
    throw DomainError("puncture: the puncture point must not be self-adjoint");
  MapDescriptor d;
  d.id = "puncture(" + base.id + ")";
  d.kind = MapKind::punctured;
  d.k = base.k;
  d.m = base.m;
  d.param = a0;
  d.puncture_radius = tol.equality_tol;
  d.base = std::make_shared<const MapDescriptor>(base);
  return d;
}

/// Not part of the catalog; for negative controls and experiments in code.
inline MapDescriptor custom(std::string id, std::size_t k, std::size_t m,
                            std::function<ComplexMatrix(const ComplexMatrix&)> fn) {
  MapDescriptor d;
  d.id = std::move(id);
  d.kind = MapKind::custom;
  d.k = k;
  d.m = m;
  d.fn = std::move(fn);
  return d;
}

}  // namespace maps

/// Phi(I) = I within equality_tol.
inline bool is_unital(const MapDescriptor& d, const ToleranceConfig& tol = {}) {
  const ComplexMatrix v = evaluate(d, ComplexMatrix::identity(d.k));
  return fro_distance(v, ComplexMatrix::identity(d.m)) <= tol.equality_band(v.fro_norm());
}

}  // namespace posmap
