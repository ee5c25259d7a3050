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
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posmap/block.hpp"
#include "posmap/catalog.hpp"
#include "posmap/claims.hpp"
#include "posmap/errors.hpp"
#include "posmap/maps.hpp"
#include "posmap/matrix.hpp"
#include "posmap/properties.hpp"
#include "posmap/random.hpp"
#include "posmap/spectral.hpp"
#include "posmap/tolerance.hpp"

namespace posmap {

struct SearchTarget {
  std::string map_id;
  Property property = Property::n_positive;
  int n = 1;
  std::size_t k = 2;  // domain dimension for the matrix families
};

inline constexpr std::size_t kEvaluationsPerRestart = 500;

struct SearchConfig {
  std::size_t budget = 10000;  // total evaluations
  std::size_t restarts = 0;    // 0: clamp(budget / 500, 1, 50)
  double perturb_scale = 0.1;
  double decay = 0.9;
  std::uint64_t seed = 0;
  SearchTarget target;
  std::optional<ComplexMatrix> anchor;  // the fixed A of mult-domain

  std::size_t effective_restarts() const {
    if (restarts != 0) return restarts;
    return std::clamp<std::size_t>(budget / kEvaluationsPerRestart, 1, 50);
  }

  void validate() const {
    if (budget < 1) throw DomainError("search: budget must be >= 1");
    if (effective_restarts() > budget) throw DomainError("search: need budget >= restarts");
    if (!(perturb_scale > 0.0)) throw DomainError("search: perturb_scale must be positive");
    if (!(decay > 0.0 && decay < 1.0)) throw DomainError("search: decay must lie in (0, 1)");
    if (target.n < 1) throw DomainError("search: n must be >= 1");
  }
};

struct Witness {
  SearchTarget target;
  Property evaluator = Property::n_positive;  // layout of `inputs`
  std::vector<ComplexMatrix> inputs;
  double margin = 0.0;
  double scale = 0.0;
  std::size_t evaluations_used = 0;
  std::string provenance;
  std::uint64_t seed = 0;
};

namespace falsifier_detail {

enum class Role { psd, strictly_positive, general, alpha, beta, eps, fixed };

/// Search state in the optimizer's own coordinates. For monotone the pair
/// (P, Q) is held as (D, Q) with P = Q + D so both parts stay PSD.
struct Candidate {
  std::vector<ComplexMatrix> x;
  std::vector<Role> roles;
  std::string family;
  // cosine-Toeplitz candidates: x[0] = T(theta) (x) lift, with the pair
  // member Q (monotone) left untouched when theta moves
  std::optional<double> theta;
  std::optional<ComplexMatrix> lift;
};

inline std::vector<Role> roles_for(Property p) {
  using R = Role;
  switch (p) {
    case Property::positive:
    case Property::n_positive:
    case Property::completely_positive:
    case Property::block_preservation:
      return {R::psd};
    case Property::monotone: return {R::psd, R::psd};
    case Property::superadditive:
    case Property::superadditive_offset1:
    case Property::superadditive_offset2:
      return {R::psd, R::psd};
    case Property::strong_superadditive: return {R::psd, R::psd, R::psd};
    case Property::starshaped: return {R::psd, R::alpha};
    case Property::choi_a:
    case Property::star_map:
    case Property::cstar_identity:
      return {R::general};
    case Property::choi_b: return {R::strictly_positive};
    case Property::mult_domain: return {R::fixed, R::general};
    case Property::strict_positivity: return {R::eps};
    case Property::additive_positive: return {R::psd, R::psd, R::beta};
    case Property::additive_general: return {R::general, R::general, R::beta};
    case Property::lieb_cs:
    case Property::norm_multiplicative:
      return {R::general, R::general};
    case Property::zero_preserving: return {};
    case Property::lieb: break;
  }
  throw DomainError("falsify: no search layout for " + std::string(to_string(p)));
}

inline std::vector<ComplexMatrix> to_inputs(Property p, const Candidate& c) {
  if (p == Property::monotone) return {c.x[1] + c.x[0], c.x[1]};
  return c.x;
}

/// Largest diagonal entry, as a scale for PSD block inputs.
inline double max_diag(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) best = std::max(best, m(i, i).real());
  return best;
}

/// D^{-1/2} M D^{-1/2} with D the diagonal of M: unit diagonal wherever M
/// has a nonzero one. Zero diagonal entries are left alone (their rows
/// vanish for PSD M).
inline ComplexMatrix unit_diagonal(const ComplexMatrix& m) {
  std::vector<double> s(m.dim(), 1.0);
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m(i, i).real() > 1e-300) s[i] = 1.0 / std::sqrt(m(i, i).real());
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j) * (s[i] * s[j]);
  return out;
}

/**
 * Scale control for the PSD block searches. n-positivity runs over unit
 * diagonal inputs: for homogeneous entrywise maps positivity of the image
 * is unchanged by diagonal congruence, so nothing is lost there, and the
 * margin can no longer be pushed down by inflating the input. Monotone
 * pairs are rescaled so that P has diagonal entries at most 1.
 */
inline void normalize(Property p, Candidate& c) {
  if (p == Property::n_positive || p == Property::completely_positive) {
    c.x[0] = unit_diagonal(c.x[0]);
  } else if (p == Property::monotone) {
    const double s = max_diag(c.x[0] + c.x[1]);
    if (s > 1.0)
      for (auto& m : c.x) m = m * (1.0 / s);
  }
}

inline ComplexMatrix project_psd(const ComplexMatrix& m, double floor, const ToleranceConfig& tol) {
  const HermitianSpectrum sp = hermitian_eig(m, tol);
  return sp.apply([floor](double l) { return std::max(l, floor); });
}

/// Margin of the amplified image, computed straight from the flat input
/// without the block types; the soundness replay goes through the
/// property-suite evaluator instead.
inline ComplexMatrix amplified_image(const MapDescriptor& d, const ComplexMatrix& flat) {
  const std::size_t k = d.k;
  const std::size_t n = flat.dim() / k;
  const std::size_t m = d.m;
  ComplexMatrix image(n * m);
  ComplexMatrix blk(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) blk(p, q) = flat(i * k + p, j * k + q);
      const ComplexMatrix v = evaluate(d, blk);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) image(i * m + p, j * m + q) = v(p, q);
    }
  return image;
}

inline SampleEval objective(Property p, const MapDescriptor& d, const Candidate& c,
                            const ToleranceConfig& tol) {
  switch (p) {
    case Property::n_positive:
    case Property::completely_positive: {
      const ComplexMatrix img = amplified_image(d, c.x[0]);
      return {lambda_min(img, tol), img.fro_norm()};
    }
    case Property::monotone: {
      const ComplexMatrix diff =
          amplified_image(d, c.x[1] + c.x[0]) - amplified_image(d, c.x[1]);
      return {lambda_min(diff, tol), diff.fro_norm()};
    }
    default:
      return evaluate_sample(p, d, to_inputs(p, c), tol);
  }
}

/// A binary diagonal matrix: each diagonal entry 0 or 1.
inline ComplexMatrix binary_diagonal(std::size_t k, Rng& rng) {
  ComplexMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = rng.uniform() < 0.5 ? 0.0 : 1.0;
  return m;
}

inline ComplexMatrix random_rank_one(std::size_t k, Rng& rng) {
  return gen::wishart(k, 1, rng);
}

inline ComplexMatrix toeplitz_lift(std::size_t n, double theta,
                                   const std::optional<ComplexMatrix>& lift) {
  const ComplexMatrix t = gen::toeplitz_cosine(n, theta);
  return lift ? kron(t, *lift) : t;
}

/// cos((i-j) theta) in the outer index, lifted by a rank-one or Wishart
/// block when k > 1.
inline void set_toeplitz(Candidate& c, std::size_t n, std::size_t k, Rng& rng) {
  c.theta = rng.uniform(0.0, std::numbers::pi);
  if (k > 1) c.lift = rng.uniform() < 0.5 ? random_rank_one(k, rng) : gen::wishart(k, k, rng);
  c.x.insert(c.x.begin(), toeplitz_lift(n, *c.theta, c.lift));
}

/// [[A, A, 0], [A, A+B, B], [0, B, B]] in the top-left corner of M_n(M_k).
inline ComplexMatrix chain_block(std::size_t n, std::size_t k, Rng& rng) {
  const ComplexMatrix a = random_rank_one(k, rng);
  const ComplexMatrix b = random_rank_one(k, rng);
  BlockMatrix bm(n, k);
  bm(0, 0) = a;
  bm(0, 1) = a;
  bm(1, 0) = a;
  bm(1, 1) = a + b;
  bm(1, 2) = b;
  bm(2, 1) = b;
  bm(2, 2) = b;
  return assemble(bm);
}

inline Candidate draw_candidate(Property p, const MapDescriptor& d, int level, std::size_t restart,
                                Rng& rng) {
  const std::size_t k = d.k;
  const auto n = static_cast<std::size_t>(level);
  SamplingPlan plan;
  plan.styles = props_detail::default_mix_for(p);
  props_detail::Drawer dr{plan, k, Rng(rng.next_u64())};
  Candidate c;
  c.roles = roles_for(p);
  const double u = rng.uniform();
  switch (p) {
    case Property::n_positive:
    case Property::completely_positive:
      if (restart % 2 == 0) {
        set_toeplitz(c, n, k, rng);
        c.family = "toeplitz-cosine";
      } else if (n >= 3 && u < 0.5) {
        c.x = {chain_block(n, k, rng)};
        c.family = "chain";
      } else {
        c.x = {dr.psd(n)};
        c.family = "psd-mix";
      }
      break;
    case Property::monotone:
      if (restart % 2 == 0) {
        ComplexMatrix q = ComplexMatrix::zeros(n * k);
        if (rng.uniform() < 0.5) q = gen::wishart(n * k, 1 + rng.index(n * k), rng) * (0.1 * rng.uniform());
        c.x = {q};
        set_toeplitz(c, n, k, rng);
        c.family = "toeplitz-cosine-pair";
      } else {
        auto [big, small] = dr.ordered(n);
        c.x = {(big - small).hermitian_part(), small};
        c.family = "ordered-pair";
      }
      break;
    case Property::superadditive:
    case Property::superadditive_offset1:
    case Property::superadditive_offset2:
    case Property::strong_superadditive:
      if (u < 0.5) {
        for (std::size_t i = 0; i < c.roles.size(); ++i)
          c.x.push_back(rng.uniform() < 0.25 ? ComplexMatrix::zeros(k) : binary_diagonal(k, rng));
        c.family = "binary-diagonal";
      } else {
        c.x = props_detail::draw_inputs(p, d, level, dr);
        c.family = "psd-mix";
      }
      break;
    case Property::cstar_identity:
    case Property::norm_multiplicative:
    case Property::mult_domain: {
      const bool diag = u < 0.3;
      for (Role r : c.roles) {
        if (r == Role::fixed)
          c.x.push_back(ComplexMatrix::zeros(k));  // replaced by the anchor
        else
          c.x.push_back(diag ? binary_diagonal(k, rng) : dr.general());
      }
      c.family = diag ? "binary-diagonal" : "general";
      break;
    }
    case Property::star_map: {
      const auto pts = d.special_points();
      if (restart < pts.size()) {
        c.x = {pts[restart]};
        c.family = "special-point";
      } else {
        c.x = props_detail::draw_inputs(p, d, level, dr);
        c.family = "general";
      }
      break;
    }
    case Property::block_preservation: {
      const auto pts = d.special_points();
      if (!pts.empty() && u < 0.3) {
        const ComplexMatrix& x = pts[rng.index(pts.size())];
        c.x = {assemble2(polar_abs(x.adjoint()), x, x.adjoint(), polar_abs(x))};
        c.family = "special-point-block";
      } else {
        c.x = {dr.psd(2)};
        c.family = "psd-mix";
      }
      break;
    }
    case Property::strict_positivity:
      c.x = {ComplexMatrix::scalar(rng.uniform_left_open(0.0, 1.0))};
      c.family = "uniform";
      break;
    case Property::zero_preserving:
      c.family = "fixed";
      break;
    default:
      c.x = props_detail::draw_inputs(p, d, level, dr);
      c.family = "default-mix";
      break;
  }
  return c;
}

}  // namespace falsifier_detail

struct RefineResult {
  std::vector<ComplexMatrix> inputs;  // evaluator layout
  double margin = 0.0;
  double scale = 0.0;
  std::size_t evaluations = 0;
  std::size_t accepted = 0;
  bool theta_searched = false;
};

namespace falsifier_detail {

/// Matrix inputs may grow to this multiple of their starting Frobenius norm
/// (at least 1); beyond that a homogeneous margin only measures the scale.
inline constexpr double kMaxGrowth = 2.0;

inline void cap_growth(Candidate& c, const std::vector<double>& caps) {
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    if (c.x[i].dim() == 1 && c.roles[i] != Role::psd && c.roles[i] != Role::general) continue;
    const double nrm = c.x[i].fro_norm();
    if (nrm > caps[i]) c.x[i] = c.x[i] * (caps[i] / nrm);
  }
}

inline constexpr std::size_t kThetaSearchEvals = 64;

/**
 * Golden-section search on theta over [theta - 0.25, theta + 0.25] for a
 * cosine-Toeplitz candidate. The candidate is replaced only by a strictly
 * better one. Returns the number of evaluations spent.
 */
inline std::size_t theta_search(Property p, const MapDescriptor& d, Candidate& c, SampleEval& best,
                                std::size_t evals, const ToleranceConfig& tol) {
  const std::size_t n = c.x[0].dim() / d.k;
  const auto at = [&](double theta) {
    Candidate t = c;
    t.theta = theta;
    t.x[0] = toeplitz_lift(n, theta, c.lift);
    normalize(p, t);
    return std::pair{objective(p, d, t, tol), t};
  };
  constexpr double g = 0.6180339887498949;
  double lo = *c.theta - 0.25, hi = *c.theta + 0.25;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  auto f1 = at(x1), f2 = at(x2);
  std::size_t used = 2;
  while (used < evals) {
    if (f1.first.margin < f2.first.margin) {
      hi = x2;
      x2 = x1;
      f2 = std::move(f1);
      x1 = hi - g * (hi - lo);
      f1 = at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = std::move(f2);
      x2 = lo + g * (hi - lo);
      f2 = at(x2);
    }
    ++used;
  }
  auto& win = f1.first.margin < f2.first.margin ? f1 : f2;
  if (win.first.margin < best.margin) {
    best = win.first;
    c = std::move(win.second);
  }
  return used;
}

inline RefineResult refine_candidate(Property p, const MapDescriptor& d, Candidate c,
                                     std::size_t steps, Rng& rng, double perturb_scale,
                                     double decay, const ToleranceConfig& tol,
                                     const std::optional<ComplexMatrix>& anchor) {
  if (p == Property::mult_domain) c.x.at(0) = anchor.value();
  normalize(p, c);
  std::vector<double> caps;
  for (const auto& m : c.x) caps.push_back(kMaxGrowth * std::max(1.0, m.fro_norm()));
  SampleEval best = objective(p, d, c, tol);
  RefineResult out;
  if (c.theta && steps > 0) {
    const std::size_t used = theta_search(p, d, c, best, std::min(steps, kThetaSearchEvals), tol);
    out.evaluations += used;
    out.theta_searched = true;
    steps -= used;
  }
  double step = perturb_scale;
  std::size_t streak = 0;
  // inputs with nothing to vary make the walk pointless
  bool movable = false;
  for (Role r : c.roles) movable = movable || r != Role::fixed;
  for (std::size_t s = 0; s < steps && movable; ++s) {
    Candidate trial = c;
    for (std::size_t i = 0; i < trial.x.size(); ++i) {
      ComplexMatrix& m = trial.x[i];
      // step relative to the typical entry size
      const double ref =
          std::max(0.1, m.fro_norm() / std::sqrt(static_cast<double>(m.dim())));
      const auto scaled = [&](ComplexMatrix g) {
        const double gn = g.fro_norm();
        return gn > 0.0 ? g * (step * ref / gn) : g;
      };
      switch (c.roles[i]) {
        case Role::psd:
          m = project_psd(m + scaled(gen::hermitian_gaussian(m.dim(), rng)), 0.0, tol);
          break;
        case Role::strictly_positive:
          m = project_psd(m + scaled(gen::hermitian_gaussian(m.dim(), rng)), 0.1, tol);
          break;
        case Role::general:
          m = m + scaled(gen::ginibre(m.dim(), rng));
          break;
        case Role::alpha:
          m = ComplexMatrix::scalar(std::clamp(m.value().real() + step * rng.normal(), 1e-6, 1.0));
          break;
        case Role::beta:
          m = ComplexMatrix::scalar(std::clamp(m.value().real() + 4.0 * step * rng.normal(), 1e-6, 4.0));
          break;
        case Role::eps:
          m = ComplexMatrix::scalar(std::clamp(m.value().real() + step * rng.normal(), 1e-3, 1.0));
          break;
        case Role::fixed:
          break;
      }
    }
    normalize(p, trial);
    cap_growth(trial, caps);
    SampleEval e;
    try {
      e = objective(p, d, trial, tol);
    } catch (const DomainError&) {
      e.margin = std::numeric_limits<double>::infinity();
    }
    ++out.evaluations;
    if (e.margin < best.margin) {
      best = e;
      c = std::move(trial);
      streak = 0;
      ++out.accepted;
    } else if (++streak == 10) {
      step *= decay;
      streak = 0;
    }
  }
  out.inputs = to_inputs(p, c);
  out.margin = best.margin;
  out.scale = best.scale;
  return out;
}

}  // namespace falsifier_detail

/**
 * Local search from `inputs` (evaluator layout). Each step perturbs every
 * free input, re-projects PSD inputs by clamping eigenvalues, and keeps the
 * move only if the margin drops. The step scale decays after every ten
 * rejections in a row. Output margin never exceeds the input margin.
 */
inline RefineResult refine(const MapDescriptor& d, Property p, std::vector<ComplexMatrix> inputs,
                           std::size_t steps, Rng& rng, double perturb_scale = 0.1,
                           double decay = 0.9, const ToleranceConfig& tol = {}) {
  using namespace falsifier_detail;
  Candidate c;
  c.roles = roles_for(p);
  if (inputs.size() != c.roles.size()) throw DimensionError("refine: wrong number of inputs");
  const SampleEval start = evaluate_sample(p, d, inputs, tol);
  RefineResult kept;
  kept.margin = start.margin;
  kept.scale = start.scale;
  if (steps == 0) {
    kept.inputs = std::move(inputs);
    return kept;
  }
  if (p == Property::monotone)
    c.x = {(inputs[0] - inputs[1]).hermitian_part(), inputs[1]};
  else
    c.x = inputs;
  std::optional<ComplexMatrix> anchor;
  if (p == Property::mult_domain) anchor = c.x[0];
  // the search normalizes its start, so it can end above the caller's margin
  RefineResult r = refine_candidate(p, d, std::move(c), steps, rng, perturb_scale, decay, tol, anchor);
  if (r.margin < start.margin) return r;
  kept.inputs = std::move(inputs);
  kept.evaluations = r.evaluations;
  return kept;
}

namespace falsifier_detail {

inline Property component_for(Property p, std::size_t restart) {
  if (p != Property::lieb) return p == Property::completely_positive ? Property::n_positive : p;
  static constexpr Property parts[] = {Property::monotone, Property::lieb_cs,
                                       Property::block_preservation};
  return parts[restart % 3];
}

inline std::string format_target(const SearchTarget& t) {
  std::ostringstream os;
  os << t.map_id << "/" << to_string(t.property);
  if (uses_level(t.property)) os << "/n=" << t.n;
  return os.str();
}

}  // namespace falsifier_detail

/// Relative agreement demanded between the search objective and the
/// property-suite replay of a witness.
inline constexpr double kReplayTol = 1e-12;

/**
 * Seeded counterexample search against `d`. Restart w runs on stream
 * (seed, w); the smallest margin wins, ties to the lowest restart. Returns
 * nothing when no margin falls below the PSD band within the budget.
 */
inline std::optional<Witness> falsify(const SearchConfig& cfg, const MapDescriptor& d,
                                      const ToleranceConfig& tol = {}) {
  using namespace falsifier_detail;
  cfg.validate();
  tol.validate();
  const Property target = cfg.target.property;
  if (target == Property::mult_domain && !cfg.anchor)
    throw DomainError("falsify: mult-domain needs the element A");
  const std::size_t restarts = cfg.effective_restarts();
  const std::size_t per = cfg.budget / restarts;
  const std::size_t extra = cfg.budget % restarts;

  std::optional<RefineResult> best;
  Property best_eval = target;
  std::string best_family;
  std::size_t used = 0;
  for (std::size_t w = 0; w < restarts; ++w) {
    const std::size_t share = per + (w < extra ? 1 : 0);
    const Property p = component_for(target, w);
    Rng rng(cfg.seed, w);
    Candidate c = draw_candidate(p, d, cfg.target.n, w, rng);
    const std::string family = c.family;
    RefineResult r;
    try {
      r = refine_candidate(p, d, std::move(c), share - 1, rng, cfg.perturb_scale, cfg.decay, tol,
                           cfg.anchor);
    } catch (const DomainError&) {
      used += share;
      continue;
    }
    used += 1 + r.evaluations;
    if (!best || r.margin < best->margin) {
      best = std::move(r);
      best_eval = p;
      best_family = family;
    }
  }
  if (!best || !(best->margin < -tol.psd_band(best->scale))) return std::nullopt;

  const SampleEval check = evaluate_sample(best_eval, d, best->inputs, tol);
  if (std::abs(check.margin - best->margin) > kReplayTol * std::max(1.0, std::abs(best->margin)))
    throw InternalInconsistency("falsify: witness does not replay through the property suite");

  Witness wit;
  wit.target = cfg.target;
  wit.evaluator = best_eval;
  wit.inputs = std::move(best->inputs);
  wit.margin = best->margin;
  wit.scale = best->scale;
  wit.evaluations_used = used;
  wit.seed = cfg.seed;
  std::ostringstream prov;
  prov << best_family;
  if (best->theta_searched) prov << " + theta-search";
  prov << " + refine(" << best->accepted << " accepted)";
  wit.provenance = prov.str();
  return wit;
}

/// The same search with the descriptor taken from the catalog.
inline std::optional<Witness> falsify(const SearchConfig& cfg, const ToleranceConfig& tol = {}) {
  return falsify(cfg, make_map(cfg.target.map_id, cfg.target.k), tol);
}

}  // namespace posmap
