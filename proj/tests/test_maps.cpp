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


#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "posmap/catalog.hpp"
#include "posmap/maps.hpp"
#include "posmap/random.hpp"

namespace posmap {
namespace {

using C = Complex;

double scalar_of(const ComplexMatrix& m) {
  EXPECT_EQ(m.dim(), 1u);
  return m(0, 0).real();
}

TEST(Evaluate, Examples) {
  EXPECT_DOUBLE_EQ(scalar_of(maps::modulus()(ComplexMatrix::scalar(C(3.0, 4.0)))), 5.0);
  EXPECT_NEAR(scalar_of(maps::mixed()(ComplexMatrix::scalar(1.0))), 1.0, 1e-15);
  EXPECT_NEAR(scalar_of(maps::mixed()(ComplexMatrix::scalar(0.0))), 1.0 / 3.0, 1e-15);
  const auto ta = maps::trace_abs(ComplexMatrix::identity(2) * 0.5);
  EXPECT_NEAR(scalar_of(ta(ComplexMatrix::diagonal({1.0, 3.0}))), 2.0, 1e-15);
  EXPECT_NEAR(scalar_of(maps::power(1.5)(ComplexMatrix::scalar(-4.0))), 8.0, 1e-14);
}

TEST(Evaluate, DimensionMismatch) {
  EXPECT_THROW(maps::modulus()(ComplexMatrix::identity(2)), DimensionError);
  EXPECT_THROW(maps::determinant(3)(ComplexMatrix::identity(2)), DimensionError);
}

TEST(Evaluate, DeterminantAndPermanentMatchLinalg) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng.index(4);
    const ComplexMatrix g = gen::ginibre(k, rng);
    EXPECT_EQ(maps::determinant(k)(g)(0, 0), det(g));
    EXPECT_EQ(maps::permanent(k)(g)(0, 0), permanent(g));
  }
}

TEST(Evaluate, NormsArePositivelyHomogeneous) {
  Rng rng(2);
  const std::vector<MapDescriptor> ds{maps::modulus(), maps::operator_norm(3),
                                      maps::frobenius_norm(3), maps::trace_abs(ComplexMatrix::identity(3) * (1.0 / 3.0))};
  for (const auto& d : ds)
    for (int t = 0; t < 100; ++t) {
      const ComplexMatrix x = gen::ginibre(d.k, rng);
      const C c{rng.normal(), rng.normal()};
      const double lhs = scalar_of(d(x * c));
      const double rhs = std::abs(c) * scalar_of(d(x));
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, rhs)) << d.id;
    }
}

TEST(Evaluate, LinearConjIsMultiplicative) {
  Rng rng(3);
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto d = maps::linear_conj(gen::unitary(k, rng));
    for (int t = 0; t < 100; ++t) {
      const ComplexMatrix a = gen::ginibre(k, rng);
      const ComplexMatrix fa = d(a);
      EXPECT_LE(fro_distance(d(a.adjoint() * a), fa.adjoint() * fa), 1e-12 * std::max(1.0, fa.fro_norm()));
    }
  }
}

TEST(Evaluate, LinearConjCompression) {
  Rng rng(4);
  const auto d = maps::linear_conj(gen::unitary(3, rng), 2);
  EXPECT_EQ(d.m, 2u);
  EXPECT_TRUE(is_unital(d));
  EXPECT_THROW(maps::linear_conj(ComplexMatrix::identity(2) * 2.0), DomainError);
  EXPECT_THROW(maps::linear_conj(ComplexMatrix::identity(2), 3), DimensionError);
}

TEST(Factories, ParameterValidation) {
  EXPECT_THROW(maps::trace_abs(ComplexMatrix::diagonal({1.0, -1.0})), DomainError);
  EXPECT_THROW(maps::state(ComplexMatrix::identity(2)), DomainError);
  EXPECT_THROW(maps::constant(ComplexMatrix::diagonal({1.0, -1.0}), 2), DomainError);
  EXPECT_THROW(maps::power(-1.0), DomainError);
}

TEST(Unitize, AlreadyUnital) {
  Rng rng(5);
  const auto d = maps::state(ComplexMatrix::identity(3) * (1.0 / 3.0));
  const auto u = maps::unitize(d);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix x = gen::ginibre(3, rng);
    EXPECT_LE(fro_distance(u(x), d(x)), 1e-14);
  }
}

TEST(Unitize, TwiceTraceBecomesHalfTrace) {
  const auto twice = maps::trace_pairing(ComplexMatrix::identity(2) * 2.0);
  EXPECT_NEAR(scalar_of(twice(ComplexMatrix::identity(2))), 4.0, 1e-15);
  const auto u = maps::unitize(twice);
  EXPECT_NEAR(scalar_of(u(ComplexMatrix::identity(2))), 1.0, 1e-14);
  EXPECT_NEAR(scalar_of(u(ComplexMatrix::diagonal({3.0, 5.0}))), 4.0, 1e-14);
}

TEST(Unitize, ConstantBecomesIdentity) {
  const auto u = maps::unitize(maps::constant(ComplexMatrix::diagonal({2.0, 0.5}), 3));
  EXPECT_LE(fro_distance(u(ComplexMatrix::zeros(3)), ComplexMatrix::identity(2)), 1e-14);
}

TEST(Unitize, Idempotent) {
  Rng rng(6);
  const auto d = maps::unitize(maps::trace_abs(ComplexMatrix::diagonal({0.7, 0.2})));
  const auto dd = maps::unitize(d);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix x = gen::ginibre(2, rng);
    EXPECT_LE(fro_distance(dd(x), d(x)), 1e-12);
  }
}

TEST(Unitize, SingularUnitImage) {
  EXPECT_THROW(maps::unitize(maps::constant(ComplexMatrix::diagonal({1.0, 0.0}), 2)), DomainError);
}

TEST(Puncture, Examples) {
  const ComplexMatrix a0{{0.0, 1.0}, {0.0, 0.0}};
  const auto d = maps::puncture(maps::operator_norm(2), a0);
  EXPECT_DOUBLE_EQ(scalar_of(d(a0)), 0.0);
  EXPECT_NEAR(scalar_of(d(a0.adjoint())), 1.0, 1e-14);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix x = gen::ginibre(2, rng);
    EXPECT_EQ(d(x), maps::operator_norm(2)(x));
  }
  EXPECT_THROW(maps::puncture(maps::operator_norm(2), ComplexMatrix::identity(2)), DomainError);
  EXPECT_THROW(maps::puncture(maps::operator_norm(2), ComplexMatrix::identity(3)), DimensionError);
}

TEST(Catalog, IdsAndClaims) {
  const auto cat = catalog(2);
  EXPECT_EQ(cat.size(), catalog_ids().size());
  std::set<std::string> ids;
  for (const auto& d : cat) {
    ids.insert(d.id);
    EXPECT_FALSE(d.claims.empty()) << d.id;
    for (const auto& c : d.claims) EXPECT_FALSE(c.anchor.empty()) << d.id;
  }
  EXPECT_EQ(ids.size(), cat.size());
  EXPECT_THROW(make_map("nosuchmap"), DomainError);
  EXPECT_THROW(make_map("power-x"), DomainError);
  EXPECT_THROW(make_map("punctured-operator-norm", 1), DimensionError);
}

TEST(Catalog, ModulusLadderClaims) {
  const auto d = make_map("modulus");
  bool holds3 = false, fails6 = false;
  for (const auto& c : d.claims) {
    holds3 |= c.property == Property::n_positive && c.n == 3 && c.expected == Expectation::holds;
    fails6 |= c.property == Property::n_positive && c.n == 6 && c.expected == Expectation::fails;
  }
  EXPECT_TRUE(holds3);
  EXPECT_TRUE(fails6);
}

TEST(Catalog, FrobeniusLiebIsUnknown) {
  for (const auto& c : make_map("frobenius-norm", 3).claims) {
    if (c.property == Property::lieb) {
      EXPECT_EQ(c.expected, Expectation::unknown);
    }
  }
}

TEST(Catalog, OpenQuestionsCarryNoCandidate) {
  ASSERT_EQ(open_questions().size(), 2u);
  EXPECT_EQ(open_questions()[0].id, "smon2-not-3-positive");
  EXPECT_EQ(open_questions()[1].id, "3-positive-implies-smon2");
}

TEST(Catalog, ParameterConstraints) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (const auto& d : catalog(k)) {
      if (d.kind == MapKind::trace_abs || d.kind == MapKind::trace_pairing ||
          d.kind == MapKind::constant) {
        EXPECT_TRUE(is_psd(*d.param).flag) << d.id;
      }
      if (d.kind == MapKind::linear_conj) {
        EXPECT_LE(fro_distance(d.param->adjoint() * *d.param, ComplexMatrix::identity(d.k)), 1e-12);
      }
    }
  }
  EXPECT_TRUE(is_unital(make_map("state", 3)));
  EXPECT_TRUE(is_unital(make_map("linear-conj", 3)));
  EXPECT_TRUE(is_unital(make_map("operator-norm", 3)));
  EXPECT_FALSE(is_unital(make_map("frobenius-norm", 3)));
}

}  // namespace
}  // namespace posmap
