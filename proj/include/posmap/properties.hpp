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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posmap/block.hpp"
#include "posmap/claims.hpp"
#include "posmap/errors.hpp"
#include "posmap/maps.hpp"
#include "posmap/matrix.hpp"
#include "posmap/random.hpp"
#include "posmap/spectral.hpp"
#include "posmap/tolerance.hpp"

namespace posmap {

enum class Status { no_violation, violated, inconclusive };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::no_violation: return "no-violation";
    case Status::violated: return "violated";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

struct StyleWeight {
  Style style;
  double weight = 1.0;
  StyleParams params;  // params.rank < 0: rank drawn uniformly per sample
};

struct SamplingPlan {
  std::size_t budget = 1000;
  std::vector<std::size_t> dims{2};
  std::vector<StyleWeight> styles;  // empty: the property's default mix
  std::uint64_t seed = 0;
  /// Inputs evaluated before the random draws, in the property's layout.
  std::vector<std::vector<ComplexMatrix>> forced;
  std::size_t min_conclusive = 10;

  void validate() const {
    if (budget < 1) throw DomainError("sampling plan: budget must be >= 1");
    for (const auto& s : styles)
      if (!(s.weight > 0.0)) throw DomainError("sampling plan: weights must be positive");
  }
};

/**
 * Outcome of one checker run. A sampling checker never proves a property;
 * it reports no violation over `samples` draws, or a violation with a
 * witness that reproduces `worst_margin`.
 */
struct PropertyVerdict {
  Property property = Property::positive;
  std::string map_id;
  int n = 1;
  std::size_t samples = 0;
  Status status = Status::inconclusive;
  double worst_margin = 0.0;
  double scale = 0.0;  // ||.||_F of the matrix behind worst_margin
  std::optional<std::vector<ComplexMatrix>> witness;
  /// Evaluator that reproduces the witness (differs from `property` for the
  /// composite checks lieb and completely-positive).
  Property witness_property = Property::positive;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> details;
};

struct SampleEval {
  double margin = 0.0;
  double scale = 0.0;
};

namespace props_detail {

inline SampleEval psd_eval(const ComplexMatrix& m, const ToleranceConfig& tol) {
  return {lambda_min(m, tol), m.fro_norm()};
}

inline SampleEval deviation_eval(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return {-fro_distance(lhs, rhs), std::max(lhs.fro_norm(), rhs.fro_norm())};
}

inline void need(std::span<const ComplexMatrix> in, std::size_t count, Property p) {
  if (in.size() != count)
    throw DimensionError("replay " + std::string(to_string(p)) + ": expected " +
                         std::to_string(count) + " inputs");
}

inline std::size_t level_of(const ComplexMatrix& m, const MapDescriptor& d) {
  if (m.dim() % d.k != 0) throw DimensionError("input is not a block matrix over M_k");
  return m.dim() / d.k;
}

inline ComplexMatrix amplified(const MapDescriptor& d, const ComplexMatrix& m) {
  return assemble(amplify(d, split(m, level_of(m, d), d.k)));
}

}  // namespace props_detail

/**
 * Margin of a single input tuple. This is the evaluator every checker loops
 * over, and the replay path for witnesses. `anchor` is the fixed element of
 * mult-domain.
 *
 * Layouts: n-positive [M]; monotone [P, Q]; lieb-cs [A, B];
 * block-preservation [M (2k)]; superadditive* [A, B]; strong [A, B, C];
 * starshaped [A, alpha]; choi-a/choi-b/positive/star-map/cstar [A];
 * mult-domain [A, X]; strict-positivity [eps]; additive* [A, B, beta];
 * norm-multiplicative [X, Y]; zero-preserving [].
 */
inline SampleEval evaluate_sample(Property p, const MapDescriptor& d,
                                  std::span<const ComplexMatrix> in,
                                  const ToleranceConfig& tol = {}) {
  using namespace props_detail;
  const auto phi = [&d](const ComplexMatrix& x) { return evaluate(d, x); };
  switch (p) {
    case Property::positive:
      need(in, 1, p);
      return psd_eval(phi(in[0]), tol);
    case Property::n_positive:
    case Property::completely_positive:
      need(in, 1, p);
      return psd_eval(amplified(d, in[0]), tol);
    case Property::monotone:
      need(in, 2, p);
      return psd_eval(amplified(d, in[0]) - amplified(d, in[1]), tol);
    case Property::lieb_cs: {
      need(in, 2, p);
      const ComplexMatrix& a = in[0];
      const ComplexMatrix& b = in[1];
      const ComplexMatrix off = phi(a.adjoint() * b);
      return psd_eval(assemble2(phi(a.adjoint() * a), off, off.adjoint(), phi(b.adjoint() * b)), tol);
    }
    case Property::block_preservation: {
      need(in, 1, p);
      const BlockMatrix blk = split(in[0], 2, d.k);
      const ComplexMatrix off = phi(blk(0, 1));
      return psd_eval(assemble2(phi(blk(0, 0)), off, off.adjoint(), phi(blk(1, 1))), tol);
    }
    case Property::superadditive:
    case Property::superadditive_offset1:
    case Property::superadditive_offset2: {
      need(in, 2, p);
      ComplexMatrix lhs = phi(in[0] + in[1]);
      const double offset = p == Property::superadditive ? 0.0
                            : p == Property::superadditive_offset1 ? 1.0
                                                                   : 2.0;
      if (offset != 0.0) lhs += phi(ComplexMatrix::zeros(d.k)) * offset;
      return psd_eval(lhs - phi(in[0]) - phi(in[1]), tol);
    }
    case Property::strong_superadditive: {
      need(in, 3, p);
      const ComplexMatrix &a = in[0], &b = in[1], &c = in[2];
      return psd_eval(phi(a + b + c) + phi(a) - phi(a + b) - phi(a + c), tol);
    }
    case Property::starshaped: {
      need(in, 2, p);
      const double alpha = in[1].value().real();
      return psd_eval(phi(in[0]) * alpha - phi(in[0] * alpha), tol);
    }
    case Property::choi_a: {
      need(in, 1, p);
      const ComplexMatrix& a = in[0];
      const ComplexMatrix unit_inv = inverse_pd(phi(ComplexMatrix::identity(d.k)), tol);
      const ComplexMatrix fa = phi(a);
      return psd_eval(phi(a.adjoint() * a) - fa.adjoint() * unit_inv * fa, tol);
    }
    case Property::choi_b: {
      need(in, 1, p);
      const ComplexMatrix& a = in[0];
      return psd_eval(phi(inverse_pd(a, tol)) - inverse_pd(phi(a), tol), tol);
    }
    case Property::mult_domain: {
      need(in, 2, p);
      const ComplexMatrix &a = in[0], &x = in[1];
      const SampleEval left = deviation_eval(phi(a.adjoint() * x), phi(a.adjoint()) * phi(x));
      const SampleEval right = deviation_eval(phi(x * a), phi(x) * phi(a));
      return {std::min(left.margin, right.margin), std::max(left.scale, right.scale)};
    }
    case Property::star_map:
      need(in, 1, p);
      return deviation_eval(phi(in[0].adjoint()), phi(in[0]).adjoint());
    case Property::strict_positivity: {
      need(in, 1, p);
      const double eps = in[0].value().real();
      const ComplexMatrix id = ComplexMatrix::identity(d.k);
      const double bound = 1.0 / op_norm(phi(id * (1.0 / eps)));
      return psd_eval(phi(id * eps) - ComplexMatrix::identity(d.m) * bound, tol);
    }
    case Property::additive_positive:
    case Property::additive_general: {
      need(in, 3, p);
      const double beta = in[2].value().real();
      return deviation_eval(phi(in[0] * beta + in[1]), phi(in[0]) * beta + phi(in[1]));
    }
    case Property::cstar_identity: {
      need(in, 1, p);
      const ComplexMatrix fa = phi(in[0]);
      return deviation_eval(phi(in[0].adjoint() * in[0]), fa * fa);
    }
    case Property::norm_multiplicative:
      need(in, 2, p);
      return deviation_eval(phi(in[0] * in[1]), phi(in[0]) * phi(in[1]));
    case Property::zero_preserving:
      need(in, 0, p);
      return deviation_eval(phi(ComplexMatrix::zeros(d.k)), ComplexMatrix::zeros(d.m));
    case Property::lieb:
      throw DomainError("lieb is a composite check; replay one of its components");
  }
  throw DomainError("evaluate_sample: unknown property");
}

inline SampleEval replay(const PropertyVerdict& v, const MapDescriptor& d,
                         const ToleranceConfig& tol = {}) {
  if (!v.witness) throw DomainError("replay: verdict carries no witness");
  return evaluate_sample(v.witness_property, d, *v.witness, tol);
}

namespace props_detail {

inline std::size_t resolve_rank(int rank, std::size_t dim, Rng& rng) {
  if (rank < 0) return 1 + rng.index(dim);
  return static_cast<std::size_t>(rank);
}

inline const StyleWeight& pick(const std::vector<StyleWeight>& mix, Rng& rng) {
  double total = 0.0;
  for (const auto& s : mix) total += s.weight;
  double u = rng.uniform(0.0, total);
  for (const auto& s : mix) {
    if (u < s.weight) return s;
    u -= s.weight;
  }
  return mix.back();
}

/// A PSD element of M_n(M_k) drawn from `style`. Cosine-Toeplitz draws at
/// k > 1 are lifted as T (x) W with W a Wishart k x k block.
inline ComplexMatrix draw_psd(const StyleWeight& s, std::size_t n, std::size_t k, Rng& rng) {
  const std::size_t dim = n * k;
  StyleParams params = s.params;
  switch (s.style) {
    case Style::toeplitz_cosine: {
      params.rank = 0;
      ComplexMatrix t = sample(Style::toeplitz_cosine, n, rng, params).front();
      if (k == 1) return t;
      return kron(t, gen::wishart(k, 1 + rng.index(k), rng));
    }
    case Style::ordered_pair:
    case Style::ginibre:
      // not PSD styles in their own right; fall back to Wishart
      return gen::wishart(dim, resolve_rank(s.params.rank, dim, rng), rng);
    default:
      params.rank = static_cast<int>(resolve_rank(s.params.rank, dim, rng));
      return sample(s.style, dim, rng, params).front();
  }
}

inline StyleParams random_rank(double shift = 1.0) {
  StyleParams p;
  p.rank = -1;
  p.shift = shift;
  return p;
}

inline std::vector<StyleWeight> default_psd_mix() {
  return {{Style::wishart, 3.0, random_rank()},
          {Style::gram_columns, 1.0, random_rank()},
          {Style::diag_positive, 1.0, {}},
          {Style::positive_with_unit, 1.0, random_rank(0.1)}};
}

/// Drawing context for one sample.
struct Drawer {
  const SamplingPlan& plan;
  std::size_t k;
  Rng rng;

  const std::vector<StyleWeight> mix() const {
    return plan.styles.empty() ? default_psd_mix() : plan.styles;
  }

  ComplexMatrix psd(std::size_t n = 1) {
    const auto m = mix();
    return draw_psd(pick(m, rng), n, k, rng);
  }

  /// PSD, with an occasional exact zero so boundary cases get exercised.
  ComplexMatrix psd_or_zero() {
    if (rng.uniform() < 0.15) return ComplexMatrix::zeros(k);
    return psd();
  }

  ComplexMatrix strictly_positive() {
    return gen::wishart(k, 1 + rng.index(k), rng) + ComplexMatrix::identity(k) * 0.1;
  }

  ComplexMatrix general() {
    const double u = rng.uniform();
    if (u < 0.8) return gen::ginibre(k, rng);
    if (u < 0.9) return psd();
    ComplexMatrix d(k);  // sparse: a single nonzero entry
    d(rng.index(k), rng.index(k)) = rng.complex_normal();
    return d;
  }

  /// (P, Q) with P >= Q >= 0 in M_n(M_k).
  std::pair<ComplexMatrix, ComplexMatrix> ordered(std::size_t n) {
    const std::size_t dim = n * k;
    const auto m = mix();
    const StyleWeight& s = pick(m, rng);
    if (s.style == Style::ordered_pair) {
      StyleParams params = s.params;
      params.rank = static_cast<int>(resolve_rank(s.params.rank, dim, rng));
      auto pq = sample(Style::ordered_pair, dim, rng, params);
      return {std::move(pq[0]), std::move(pq[1])};
    }
    const ComplexMatrix gap = draw_psd(s, n, k, rng);
    ComplexMatrix q = gen::wishart(dim, 1 + rng.index(dim), rng) * rng.uniform();
    if (rng.uniform() < 0.2) q = ComplexMatrix::zeros(dim);
    return {q + gap, q};
  }
};

inline std::vector<StyleWeight> default_mix_for(Property p) {
  auto mix = default_psd_mix();
  if (p == Property::n_positive || p == Property::completely_positive ||
      p == Property::monotone)
    mix.push_back({Style::toeplitz_cosine, 1.0, {}});
  if (p == Property::monotone) mix.push_back({Style::ordered_pair, 3.0, random_rank()});
  return mix;
}

/// One random input tuple in the layout of `p`.
inline std::vector<ComplexMatrix> draw_inputs(Property p, const MapDescriptor& d, int n,
                                              Drawer& dr) {
  const auto scalar = [](double v) { return ComplexMatrix::scalar(v); };
  switch (p) {
    case Property::positive:
      return {dr.psd()};
    case Property::n_positive:
    case Property::completely_positive:
      return {dr.psd(static_cast<std::size_t>(n))};
    case Property::monotone: {
      auto [big, small] = dr.ordered(static_cast<std::size_t>(n));
      return {std::move(big), std::move(small)};
    }
    case Property::lieb_cs:
    case Property::norm_multiplicative:
      return {dr.general(), dr.general()};
    case Property::block_preservation:
      return {dr.psd(2)};
    case Property::superadditive:
    case Property::superadditive_offset1:
    case Property::superadditive_offset2:
      return {dr.psd_or_zero(), dr.psd_or_zero()};
    case Property::strong_superadditive:
      return {dr.psd_or_zero(), dr.psd_or_zero(), dr.psd_or_zero()};
    case Property::starshaped:
      return {dr.psd_or_zero(), scalar(dr.rng.uniform_left_open(0.0, 1.0))};
    case Property::choi_a:
    case Property::star_map:
    case Property::cstar_identity:
      return {dr.general()};
    case Property::choi_b:
      return {dr.strictly_positive()};
    case Property::additive_positive:
      return {dr.psd_or_zero(), dr.psd_or_zero(), scalar(dr.rng.uniform_left_open(0.0, 4.0))};
    case Property::additive_general:
      return {dr.general(), dr.general(), scalar(dr.rng.uniform_left_open(0.0, 4.0))};
    default:
      break;
  }
  throw DomainError("draw_inputs: property " + std::string(to_string(p)) +
                    " has no random draw for map " + d.id);
}

/// Running aggregate: violations outrank non-violations, then lower margin.
struct Tracker {
  explicit Tracker(const ToleranceConfig& t) : tol(t) {}

  const ToleranceConfig& tol;
  std::size_t count = 0;
  bool have = false;
  bool worst_violates = false;
  SampleEval worst{};
  std::vector<ComplexMatrix> worst_inputs{};

  void add(const SampleEval& e, const std::vector<ComplexMatrix>& inputs) {
    ++count;
    const bool violates = e.margin < -tol.psd_band(e.scale);
    const bool better = !have || (violates && !worst_violates) ||
                        (violates == worst_violates && e.margin < worst.margin);
    if (better) {
      have = true;
      worst_violates = violates;
      worst = e;
      worst_inputs = inputs;
    }
  }

  PropertyVerdict verdict(Property p, const MapDescriptor& d, int n, std::uint64_t seed,
                          std::size_t min_conclusive) const {
    PropertyVerdict v;
    v.property = p;
    v.witness_property = p;
    v.map_id = d.id;
    v.n = n;
    v.samples = count;
    v.seed = seed;
    v.worst_margin = have ? worst.margin : 0.0;
    v.scale = have ? worst.scale : 0.0;
    if (worst_violates) {
      v.status = Status::violated;
      v.witness = worst_inputs;
    } else {
      v.status = count >= min_conclusive ? Status::no_violation : Status::inconclusive;
    }
    return v;
  }
};

/// Stream id mixing the property into the seed so different checkers run on
/// the same plan draw different samples.
inline std::uint64_t stream_base(Property p, int n) {
  return (static_cast<std::uint64_t>(p) << 40) ^ (static_cast<std::uint64_t>(n) << 32);
}

}  // namespace props_detail

/// Generic sampling loop for the single-evaluator properties.
inline PropertyVerdict run_sampling_check(Property p, const MapDescriptor& d, int n,
                                          const SamplingPlan& plan,
                                          const ToleranceConfig& tol = {}) {
  using namespace props_detail;
  plan.validate();
  if (n < 1) throw DomainError("amplification level n must be >= 1");
  Tracker tr(tol);
  for (const auto& f : plan.forced) tr.add(evaluate_sample(p, d, f, tol), f);
  SamplingPlan local = plan;
  if (local.styles.empty()) local.styles = default_mix_for(p);
  const std::uint64_t base = stream_base(p, n);
  for (std::size_t i = 0; i < plan.budget; ++i) {
    Drawer dr{local, d.k, Rng(plan.seed, base + i)};
    const std::vector<ComplexMatrix> inputs = draw_inputs(p, d, n, dr);
    SampleEval e;
    try {
      e = evaluate_sample(p, d, inputs, tol);
    } catch (const DomainError&) {
      continue;  // e.g. Phi(A) singular for choi-b; the sample says nothing
    }
    tr.add(e, inputs);
  }
  return tr.verdict(p, d, n, plan.seed, plan.min_conclusive);
}

/// Worst of several verdicts, relabelled as `p`. The witness keeps the
/// property of the component that produced it.
inline PropertyVerdict merge_verdicts(Property p, const MapDescriptor& d, int n,
                                      const std::vector<PropertyVerdict>& parts,
                                      std::uint64_t seed) {
  PropertyVerdict out;
  out.property = p;
  out.map_id = d.id;
  out.n = n;
  out.seed = seed;
  out.status = Status::no_violation;
  const PropertyVerdict* worst = nullptr;
  for (const auto& v : parts) {
    out.samples += v.samples;
    if (v.status == Status::inconclusive && out.status == Status::no_violation)
      out.status = Status::inconclusive;
    const bool better = !worst ||
                        (v.status == Status::violated && worst->status != Status::violated) ||
                        ((v.status == Status::violated) == (worst->status == Status::violated) &&
                         v.worst_margin < worst->worst_margin);
    if (better) worst = &v;
    for (const auto& dt : v.details) out.details.push_back(dt);
  }
  if (worst) {
    out.worst_margin = worst->worst_margin;
    out.scale = worst->scale;
    out.witness_property = worst->witness_property;
    if (worst->status == Status::violated) {
      out.status = Status::violated;
      out.witness = worst->witness;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named checkers

inline PropertyVerdict check_positive(const MapDescriptor& d, const SamplingPlan& plan,
                                      const ToleranceConfig& tol = {}) {
  return run_sampling_check(Property::positive, d, 1, plan, tol);
}

inline PropertyVerdict check_n_positive(const MapDescriptor& d, int n, const SamplingPlan& plan,
                                        const ToleranceConfig& tol = {}) {
  return run_sampling_check(Property::n_positive, d, n, plan, tol);
}

/// n-positivity at every level 1..max_n, merged.
inline PropertyVerdict check_completely_positive(const MapDescriptor& d, int max_n,
                                                 const SamplingPlan& plan,
                                                 const ToleranceConfig& tol = {}) {
  std::vector<PropertyVerdict> parts;
  for (int n = 1; n <= max_n; ++n) parts.push_back(check_n_positive(d, n, plan, tol));
  return merge_verdicts(Property::completely_positive, d, max_n, parts, plan.seed);
}

inline PropertyVerdict check_monotone(const MapDescriptor& d, int n, const SamplingPlan& plan,
                                      const ToleranceConfig& tol = {}) {
  return run_sampling_check(Property::monotone, d, n, plan, tol);
}

inline PropertyVerdict check_lieb_cs(const MapDescriptor& d, const SamplingPlan& plan,
                                     const ToleranceConfig& tol = {}) {
  return run_sampling_check(Property::lieb_cs, d, 1, plan, tol);
}

/// Special points C of the map (puncture points) are always tried as the
/// corner of [[|C*|, C], [C*, |C|]], which is PSD.
inline PropertyVerdict check_block_preservation(const MapDescriptor& d, const SamplingPlan& plan,
                                                const ToleranceConfig& tol = {}) {
  SamplingPlan local = plan;
  for (const auto& c : d.special_points())
    local.forced.push_back({assemble2(polar_abs(c.adjoint(), tol), c, c.adjoint(), polar_abs(c, tol))});
  return run_sampling_check(Property::block_preservation, d, 1, local, tol);
}

/// Monotone on positives and block Cauchy-Schwarz; block preservation is
/// run alongside since the two are equivalent on M_k.
inline PropertyVerdict check_lieb(const MapDescriptor& d, const SamplingPlan& plan,
                                  const ToleranceConfig& tol = {}) {
  std::vector<PropertyVerdict> parts{check_monotone(d, 1, plan, tol), check_lieb_cs(d, plan, tol),
                                     check_block_preservation(d, plan, tol)};
  return merge_verdicts(Property::lieb, d, 1, parts, plan.seed);
}

enum class SuperadditiveVariant { offset2, offset1, plain, strong };

inline Property to_property(SuperadditiveVariant v) {
  switch (v) {
    case SuperadditiveVariant::offset2: return Property::superadditive_offset2;
    case SuperadditiveVariant::offset1: return Property::superadditive_offset1;
    case SuperadditiveVariant::plain: return Property::superadditive;
    case SuperadditiveVariant::strong: return Property::strong_superadditive;
  }
  return Property::superadditive;
}

inline PropertyVerdict check_superadditive(const MapDescriptor& d, SuperadditiveVariant variant,
                                           const SamplingPlan& plan,
                                           const ToleranceConfig& tol = {}) {
  return run_sampling_check(to_property(variant), d, 1, plan, tol);
}

inline PropertyVerdict check_starshaped(const MapDescriptor& d, const SamplingPlan& plan,
                                        const ToleranceConfig& tol = {}) {
  return run_sampling_check(Property::starshaped, d, 1, plan, tol);
}

enum class ChoiPart { a, b };

inline PropertyVerdict check_choi(const MapDescriptor& d, ChoiPart part, const SamplingPlan& plan,
                                  const ToleranceConfig& tol = {}) {
  if (part == ChoiPart::a) {
    // fails loudly when Phi(I) is singular
    (void)inverse_pd(evaluate(d, ComplexMatrix::identity(d.k)), tol);
    return run_sampling_check(Property::choi_a, d, 1, plan, tol);
  }
  if (!is_unital(d, tol)) throw DomainError("choi-b requires a unital map: " + d.id);
  return run_sampling_check(Property::choi_b, d, 1, plan, tol);
}

/// Both product identities at the fixed element A over sampled X. Requires a
/// unital map with Phi(A*A) = Phi(A)* Phi(A) at A.
inline PropertyVerdict check_mult_domain(const MapDescriptor& d, const ComplexMatrix& a,
                                         const SamplingPlan& plan,
                                         const ToleranceConfig& tol = {}) {
  using namespace props_detail;
  plan.validate();
  if (a.dim() != d.k) throw DimensionError("check_mult_domain: A has the wrong dimension");
  if (!is_unital(d, tol)) throw DomainError("mult-domain requires a unital map: " + d.id);
  const ComplexMatrix lhs = evaluate(d, a.adjoint() * a);
  const ComplexMatrix fa = evaluate(d, a);
  if (fro_distance(lhs, fa.adjoint() * fa) > tol.equality_band(lhs.fro_norm()))
    throw DomainError("mult-domain: Phi(A*A) = Phi(A)* Phi(A) does not hold at A");
  Tracker tr(tol);
  for (const auto& f : plan.forced) {
    std::vector<ComplexMatrix> in{a, f.at(0)};
    tr.add(evaluate_sample(Property::mult_domain, d, in, tol), in);
  }
  const std::uint64_t base = stream_base(Property::mult_domain, 1);
  for (std::size_t i = 0; i < plan.budget; ++i) {
    Drawer dr{plan, d.k, Rng(plan.seed, base + i)};
    std::vector<ComplexMatrix> in{a, dr.general()};
    tr.add(evaluate_sample(Property::mult_domain, d, in, tol), in);
  }
  return tr.verdict(Property::mult_domain, d, 1, plan.seed, plan.min_conclusive);
}

inline PropertyVerdict check_star_map(const MapDescriptor& d, const SamplingPlan& plan,
                                      const ToleranceConfig& tol = {}) {
  SamplingPlan local = plan;
  for (const auto& pt : d.special_points()) local.forced.push_back({pt});
  return run_sampling_check(Property::star_map, d, 1, local, tol);
}

inline constexpr std::array<double, 3> kStrictPositivityEps{0.5, 0.1, 0.01};

/// Phi(eps I) >= ||Phi(eps^{-1} I)||^{-1} I at eps in {0.5, 0.1, 0.01}.
inline PropertyVerdict check_strict_positivity(const MapDescriptor& d,
                                               const ToleranceConfig& tol = {}) {
  using namespace props_detail;
  if (!is_unital(d, tol)) throw DomainError("strict-positivity requires a unital map: " + d.id);
  Tracker tr(tol);
  for (double eps : kStrictPositivityEps) {
    std::vector<ComplexMatrix> in{ComplexMatrix::scalar(eps)};
    tr.add(evaluate_sample(Property::strict_positivity, d, in, tol), in);
  }
  return tr.verdict(Property::strict_positivity, d, 1, 0, kStrictPositivityEps.size());
}

inline constexpr std::array<double, 2> kHomogeneityAlphas{0.5, 2.0};

/**
 * Phi(beta A + B) = beta Phi(A) + Phi(B) for beta in (0, 4]. Positive inputs
 * by default; `general` samples arbitrary A, B. Details record
 * ||Phi(alpha I) - alpha Phi(I)||_F at alpha in {0.5, 2}.
 */
inline PropertyVerdict check_additive_homogeneous(const MapDescriptor& d,
                                                  const SamplingPlan& plan,
                                                  const ToleranceConfig& tol = {},
                                                  bool general = false) {
  PropertyVerdict v = run_sampling_check(
      general ? Property::additive_general : Property::additive_positive, d, 1, plan, tol);
  const ComplexMatrix id = ComplexMatrix::identity(d.k);
  const ComplexMatrix at_unit = evaluate(d, id);
  for (double alpha : kHomogeneityAlphas) {
    const double dev = fro_distance(evaluate(d, id * alpha), at_unit * alpha);
    v.details.emplace_back(alpha == 0.5 ? "homogeneity_gap_alpha_0.5" : "homogeneity_gap_alpha_2",
                           dev);
  }
  return v;
}

/// (i) |Phi(A*A) - Phi(A)^2| and (ii) |Phi(XY) - Phi(X) Phi(Y)|.
inline std::pair<PropertyVerdict, PropertyVerdict> check_norm_cstar(const MapDescriptor& d,
                                                                    const SamplingPlan& plan,
                                                                    const ToleranceConfig& tol = {}) {
  if (!d.scalar_valued()) throw DimensionError("check_norm_cstar: map must be scalar-valued");
  SamplingPlan first = plan, second = plan;
  first.forced.clear();
  second.forced.clear();
  for (const auto& f : plan.forced) (f.size() == 1 ? first : second).forced.push_back(f);
  return {run_sampling_check(Property::cstar_identity, d, 1, first, tol),
          run_sampling_check(Property::norm_multiplicative, d, 1, second, tol)};
}

inline PropertyVerdict check_zero_preserving(const MapDescriptor& d,
                                             const ToleranceConfig& tol = {}) {
  props_detail::Tracker tr(tol);
  tr.add(evaluate_sample(Property::zero_preserving, d, {}, tol), {});
  return tr.verdict(Property::zero_preserving, d, 1, 0, 1);
}

/// Dispatch by property tag. `anchor` is required for mult-domain.
inline PropertyVerdict check(Property p, const MapDescriptor& d, int n, const SamplingPlan& plan,
                             const ToleranceConfig& tol = {},
                             const std::optional<ComplexMatrix>& anchor = std::nullopt) {
  switch (p) {
    case Property::positive: return check_positive(d, plan, tol);
    case Property::n_positive: return check_n_positive(d, n, plan, tol);
    case Property::completely_positive: return check_completely_positive(d, n, plan, tol);
    case Property::monotone: return check_monotone(d, n, plan, tol);
    case Property::lieb: return check_lieb(d, plan, tol);
    case Property::lieb_cs: return check_lieb_cs(d, plan, tol);
    case Property::block_preservation: return check_block_preservation(d, plan, tol);
    case Property::superadditive_offset2:
      return check_superadditive(d, SuperadditiveVariant::offset2, plan, tol);
    case Property::superadditive_offset1:
      return check_superadditive(d, SuperadditiveVariant::offset1, plan, tol);
    case Property::superadditive:
      return check_superadditive(d, SuperadditiveVariant::plain, plan, tol);
    case Property::strong_superadditive:
      return check_superadditive(d, SuperadditiveVariant::strong, plan, tol);
    case Property::starshaped: return check_starshaped(d, plan, tol);
    case Property::choi_a: return check_choi(d, ChoiPart::a, plan, tol);
    case Property::choi_b: return check_choi(d, ChoiPart::b, plan, tol);
    case Property::mult_domain:
      if (!anchor) throw DomainError("mult-domain needs the element A");
      return check_mult_domain(d, *anchor, plan, tol);
    case Property::star_map: return check_star_map(d, plan, tol);
    case Property::strict_positivity: return check_strict_positivity(d, tol);
    case Property::additive_positive: return check_additive_homogeneous(d, plan, tol, false);
    case Property::additive_general: return check_additive_homogeneous(d, plan, tol, true);
    case Property::cstar_identity: return check_norm_cstar(d, plan, tol).first;
    case Property::norm_multiplicative: return check_norm_cstar(d, plan, tol).second;
    case Property::zero_preserving: return check_zero_preserving(d, tol);
  }
  throw DomainError("check: unknown property");
}

}  // namespace posmap
