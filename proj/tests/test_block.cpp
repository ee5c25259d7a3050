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
#include <complex>
#include <numbers>

#include "posmap/block.hpp"
#include "posmap/catalog.hpp"
#include "posmap/maps.hpp"
#include "posmap/random.hpp"

namespace posmap {
namespace {

// Eigenvalues of a real symmetric circulant with first row c:
// lambda_j = sum_l c_l cos(2 pi j l / n). Returns the smallest.
double circulant_min(const std::vector<double>& c) {
  const std::size_t n = c.size();
  double lo = 1e300;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t l = 0; l < n; ++l)
      s += c[l] * std::cos(2.0 * std::numbers::pi * static_cast<double>(j * l) / static_cast<double>(n));
    lo = std::min(lo, s);
  }
  return lo;
}

BlockMatrix scalar_grid(const ComplexMatrix& m) { return split(m, m.dim(), 1); }

TEST(Assemble, ScalarBlocks) {
  const BlockMatrix b(2, 1, {ComplexMatrix::scalar(1.0), ComplexMatrix::scalar(2.0),
                             ComplexMatrix::scalar(3.0), ComplexMatrix::scalar(4.0)});
  EXPECT_EQ(assemble(b), (ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}));
}

TEST(Assemble, IdentityBlocks) {
  const BlockMatrix b(2, 2, {ComplexMatrix::identity(2), ComplexMatrix::zeros(2),
                             ComplexMatrix::zeros(2), ComplexMatrix::identity(2)});
  EXPECT_EQ(assemble(b), ComplexMatrix::identity(4));
}

TEST(Assemble, SplitRoundTrip) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= 3; ++k) {
      const ComplexMatrix m = gen::ginibre(n * k, rng);
      const BlockMatrix b = split(m, n, k);
      EXPECT_EQ(assemble(b), m);
      EXPECT_EQ(split(assemble(b), n, k).blocks(), b.blocks());
    }
}

TEST(Assemble, Errors) {
  EXPECT_THROW(split(ComplexMatrix::identity(5), 2, 2), DimensionError);
  EXPECT_THROW(BlockMatrix(2, 2, {ComplexMatrix::identity(2)}), DimensionError);
  EXPECT_THROW(BlockMatrix(1, 2, {ComplexMatrix::identity(3)}), DimensionError);
}

TEST(Amplify, ModulusOnCosineToeplitz) {
  const ComplexMatrix t = gen::toeplitz_cosine(4, std::numbers::pi / 4.0);
  const ComplexMatrix img = assemble(amplify(maps::modulus(), scalar_grid(t)));
  const double s = std::sqrt(2.0) / 2.0;
  EXPECT_NEAR(img(0, 1).real(), s, 1e-15);
  EXPECT_NEAR(img(0, 2).real(), 0.0, 1e-15);
  EXPECT_NEAR(img(0, 3).real(), s, 1e-15);
  const double oracle = circulant_min({1.0, s, 0.0, s});
  EXPECT_NEAR(oracle, 1.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(lambda_min(img), oracle, 1e-12);
  EXPECT_FALSE(is_psd(img).flag);
}

TEST(Amplify, PowerOnCosineToeplitz) {
  const ComplexMatrix t = gen::toeplitz_cosine(4, std::numbers::pi / 4.0);
  const ComplexMatrix img = assemble(amplify(maps::power(1.5), scalar_grid(t)));
  const double sp = std::pow(std::sqrt(2.0) / 2.0, 1.5);
  const double oracle = circulant_min({1.0, sp, 0.0, sp});
  EXPECT_NEAR(oracle, 1.0 - 2.0 * sp, 1e-14);
  EXPECT_NEAR(lambda_min(img), oracle, 1e-12);
  EXPECT_LT(lambda_min(img), -0.18);
}

TEST(Amplify, IdentityMapIsIdentity) {
  Rng rng(2);
  const MapDescriptor id = maps::linear_conj(ComplexMatrix::identity(2));
  const BlockMatrix b = split(gen::ginibre(6, rng), 3, 2);
  EXPECT_EQ(amplify(id, b).blocks(), b.blocks());
}

TEST(Amplify, DomainMismatch) {
  const BlockMatrix b = split(ComplexMatrix::identity(6), 2, 3);
  EXPECT_THROW(amplify(maps::determinant(2), b), DimensionError);
}

TEST(SchurBlock, Examples) {
  const auto one = ComplexMatrix::identity(2);
  EXPECT_TRUE(schur_block_psd(one, one, one).flag);
  EXPECT_FALSE(schur_block_psd(ComplexMatrix::scalar(0.0), ComplexMatrix::scalar(1.0),
                               ComplexMatrix::scalar(1.0))
                   .flag);
  const auto r = schur_routes(ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::diagonal({0.0, 1.0}),
                              one);
  EXPECT_FALSE(r.range_route);
  EXPECT_FALSE(r.direct);
  EXPECT_NEAR(r.range_residual, 1.0, 1e-14);
  EXPECT_THROW(schur_block_psd(one, ComplexMatrix::identity(3), one), DimensionError);
}

TEST(SchurBlock, RouteAgreementOnPsdBlocks) {
  Rng rng(3);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t k = 1 + rng.index(4);
    const std::size_t rank = 1 + rng.index(2 * k);
    const BlockMatrix b = split(gen::wishart(2 * k, rank, rng), 2, k);
    const auto r = schur_routes(b(0, 0), b(0, 1), b(1, 1));
    ASSERT_EQ(r.range_route, r.direct) << "trial " << t << " rank " << rank;
    ASSERT_TRUE(r.direct);
  }
}

TEST(SchurBlock, RouteAgreementWithSingularCorner) {
  Rng rng(4);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t k = 2 + rng.index(3);
    const ComplexMatrix a = gen::wishart(k, 1 + rng.index(k - 1), rng);
    const ComplexMatrix b = gen::wishart(k, k, rng);
    // X in the range of A gives a PSD block for B large enough; a generic X
    // leaves the range and the block is not PSD.
    const ComplexMatrix x = (t % 2 == 0) ? a * gen::contraction(k, 0.5, rng) : gen::ginibre(k, rng);
    const auto r = schur_routes(a, x, b);
    ASSERT_EQ(r.range_route, r.direct) << "trial " << t;
    if (t % 2 == 1) {
      ASSERT_FALSE(r.direct);
    }
  }
}

TEST(SchurBlock, EpsilonFormOnPsdBlocks) {
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t k = 1 + rng.index(4);
    const BlockMatrix b = split(gen::wishart(2 * k, 1 + rng.index(2 * k), rng), 2, k);
    for (double eps : {1e-2, 1e-4, 1e-6})
      ASSERT_TRUE(schur_eps_psd(b(0, 0), b(0, 1), b(1, 1), eps)) << "trial " << t << " eps " << eps;
  }
  EXPECT_THROW(schur_eps_psd(ComplexMatrix::identity(2), ComplexMatrix::identity(2),
                             ComplexMatrix::identity(2), 0.0),
               DomainError);
}

TEST(Contraction, Examples) {
  const auto c = contraction_factor(ComplexMatrix::identity(2), ComplexMatrix::identity(2) * 0.5,
                                    ComplexMatrix::identity(2));
  EXPECT_LE(fro_distance(c.k, ComplexMatrix::identity(2) * 0.5), 1e-14);
  EXPECT_NEAR(c.norm, 0.5, 1e-14);

  const Complex z{0.6, -0.3};
  const auto p = ComplexMatrix::diagonal({1.0, 0.0});
  ComplexMatrix x = ComplexMatrix::zeros(2);
  x(0, 0) = z;
  const auto d = contraction_factor(p, x, p);
  EXPECT_LE(fro_distance(d.k, x), 1e-14);
  EXPECT_NEAR(d.norm, std::abs(z), 1e-14);

  EXPECT_THROW(contraction_factor(ComplexMatrix::identity(2), ComplexMatrix::identity(2) * 2.0,
                                  ComplexMatrix::identity(2)),
               DomainError);
}

TEST(Contraction, RoundTripFromKnownContractions) {
  Rng rng(6);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 1 + rng.index(4);
    const ComplexMatrix r = gen::wishart(k, 1 + rng.index(k), rng);
    const ComplexMatrix s = gen::wishart(k, 1 + rng.index(k), rng);
    const ComplexMatrix a = r * r, b = s * s;
    const ComplexMatrix g = gen::contraction(k, rng.uniform(0.0, 1.0), rng);
    const ComplexMatrix x = r * g * s;
    const auto c = contraction_factor(a, x, b);
    const ComplexMatrix back = sqrt_psd(a) * c.k * sqrt_psd(b);
    ASSERT_LE(fro_distance(back, x), 1e-8 * std::max(1.0, x.fro_norm())) << "trial " << t;
    ASSERT_LE(c.norm, 1.0 + 1e-8);
  }
}

TEST(OrderBlock, Examples) {
  const auto i2 = ComplexMatrix::identity(2);
  auto r = order_block(i2 * 2.0, i2);
  EXPECT_TRUE(r.direct);
  EXPECT_TRUE(r.via_block);
  r = order_block(i2, i2);
  EXPECT_TRUE(r.direct && r.via_block);
  EXPECT_DOUBLE_EQ(r.direct_margin, 0.0);
  r = order_block(ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::diagonal({0.0, 1.0}));
  EXPECT_FALSE(r.direct);
  EXPECT_FALSE(r.via_block);
}

TEST(OrderBlock, VerdictsAgree) {
  Rng rng(7);
  int ordered = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t k = 2 + rng.index(3);
    ComplexMatrix x, y;
    if (t % 2 == 0) {
      const auto pq = sample(Style::ordered_pair, k, rng);
      x = pq[0];
      y = pq[1];
    } else {
      x = gen::wishart(k, 1 + rng.index(k), rng);
      y = gen::wishart(k, 1 + rng.index(k), rng);
    }
    const auto r = order_block(x, y);
    ASSERT_EQ(r.direct, r.via_block) << "trial " << t;
    ordered += r.direct;
  }
  EXPECT_GT(ordered, 4000);
  EXPECT_LT(ordered, 10000);
}

TEST(CornerZero, Examples) {
  EXPECT_TRUE(corner_zero_test(ComplexMatrix::zeros(2), ComplexMatrix::identity(2)));
  EXPECT_FALSE(corner_zero_test(ComplexMatrix::identity(2) * 0.1, ComplexMatrix::identity(2)));
}

TEST(CornerZero, SeededNonzeroAndScaledToZero) {
  Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 1 + rng.index(4);
    const ComplexMatrix x = gen::ginibre(k, rng), a = gen::wishart(k, 1 + rng.index(k), rng);
    ASSERT_FALSE(corner_zero_test(x, a));
    ASSERT_TRUE(corner_zero_test(x * 0.0, a));
  }
}

}  // namespace
}  // namespace posmap
