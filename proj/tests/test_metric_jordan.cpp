#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sepweb/errors.hpp"
#include "sepweb/linalg.hpp"
#include "sepweb/metric_jordan.hpp"

using namespace sepweb;

namespace {

Operator3 gram(const std::vector<Vec3M>& basis) {
  Operator3 g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g.m[i][j] = dot(basis[i], basis[j]);
  return g;
}

// Operator A in block coordinates: columns are A applied to the basis vectors.
Operator3 in_basis(const Operator3& a, const std::vector<Vec3M>& basis) {
  const Operator3 t = Operator3::from_columns(basis[0], basis[1], basis[2]);
  return inverse(t) * a * t;
}

void expect_consistent(const Operator3& a, const MetricJordanForm& f) {
  ASSERT_EQ(f.basis.size(), 3u);
  EXPECT_LT(max_abs(gram(f.basis) - target_gram(f)), 1e-8);
  EXPECT_LT(max_abs(in_basis(a, f.basis) - jordan_matrix(f)), 1e-7 * std::max(1.0, max_abs(a)));
  for (const auto& b : f.blocks) EXPECT_FALSE(b.size == 3 && b.sign < 0);
}

}  // namespace

TEST(MetricJordan, IdentityIsThreeOneBlocks) {
  const MetricJordanForm f = metric_jordan_form(Operator3::identity());
  ASSERT_EQ(f.blocks.size(), 3u);
  EXPECT_EQ(f.blocks[0].sign, -1);
  for (const auto& b : f.blocks) {
    EXPECT_EQ(b.size, 1);
    EXPECT_DOUBLE_EQ(b.eigenvalue.real(), 1.0);
  }
  expect_consistent(Operator3::identity(), f);
}

TEST(MetricJordan, NullRankOneGivesTwoBlock) {
  const Operator3 kk{{{{-1, 1, 0}, {-1, 1, 0}, {0, 0, 0}}}};
  const MetricJordanForm f = metric_jordan_form(kk);
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.blocks[0].size, 2);
  EXPECT_EQ(f.blocks[0].sign, 1);
  EXPECT_NEAR(f.blocks[0].eigenvalue.real(), 0.0, 1e-12);
  EXPECT_EQ(f.blocks[1].size, 1);
  EXPECT_NEAR(f.blocks[1].eigenvalue.real(), 0.0, 1e-12);
  expect_consistent(kk, f);
}

TEST(MetricJordan, ComplexPair) {
  const Operator3 a{{{{0, 1, 0}, {-1, 0, 0}, {0, 0, 2}}}};
  const MetricJordanForm f = metric_jordan_form(a);
  ASSERT_EQ(f.blocks.size(), 3u);
  EXPECT_TRUE(f.blocks[0].is_complex());
  EXPECT_NEAR(std::abs(f.blocks[0].eigenvalue - std::complex<double>(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(f.blocks[1].eigenvalue - std::complex<double>(0, -1)), 0.0, 1e-12);
  EXPECT_NEAR(f.blocks[2].eigenvalue.real(), 2.0, 1e-12);
  expect_consistent(a, f);
}

TEST(MetricJordan, RejectsNonSelfAdjoint) {
  Operator3 boost_gen;
  boost_gen.m[0][1] = boost_gen.m[1][0] = 1.0;
  try {
    metric_jordan_form(boost_gen);
    FAIL() << "expected NotSelfAdjoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSelfAdjoint);
  }
}

TEST(MetricJordan, SynthesizeWithIdentityIsCanonical) {
  MetricJordanForm f;
  f.blocks = {{1, -1, {1, 0}}, {1, 1, {2, 0}}, {1, 1, {3, 0}}};
  EXPECT_LT(max_abs(synthesize_operator(f, Operator3::identity()) - Operator3::diag(1, 2, 3)), 1e-15);
}

TEST(MetricJordan, ConjugationKeepsSpectrum) {
  MetricJordanForm f;
  f.blocks = {{1, -1, {1, 0}}, {1, 1, {2, 0}}, {1, 1, {3, 0}}};
  const Operator3 a = synthesize_operator(f, pseudo_orthogonal(0.5, 0.0, false, false));
  const CubicRoots r = cubic_roots(char_poly(a));
  ASSERT_EQ(r.n_real, 3);
  EXPECT_NEAR(r.real[0], 1, 1e-12);
  EXPECT_NEAR(r.real[1], 2, 1e-12);
  EXPECT_NEAR(r.real[2], 3, 1e-12);
}

TEST(MetricJordan, ZeroParametersGiveIdentity) {
  EXPECT_LT(max_abs(pseudo_orthogonal(0, 0, false, false) - Operator3::identity()), 1e-16);
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_TRUE(is_pseudo_orthogonal(random_pseudo_orthogonal(s)));
}

TEST(MetricJordan, ThreeBlockAndDefectiveTwoBlock) {
  MetricJordanForm f3;
  f3.blocks = {{3, 1, {0.5, 0}}};
  const Operator3 a3 = synthesize_operator(f3, random_pseudo_orthogonal(7));
  const MetricJordanForm g3 = metric_jordan_form(a3);
  ASSERT_EQ(g3.blocks.size(), 1u);
  EXPECT_EQ(g3.blocks[0].size, 3);
  EXPECT_EQ(g3.blocks[0].sign, 1);
  EXPECT_NEAR(g3.blocks[0].eigenvalue.real(), 0.5, 1e-6);
  expect_consistent(a3, g3);

  for (int eps : {1, -1}) {
    MetricJordanForm f2;
    f2.blocks = {{2, eps, {-1, 0}}, {1, 1, {1.5, 0}}};
    const Operator3 a2 = synthesize_operator(f2, random_pseudo_orthogonal(8));
    const MetricJordanForm g2 = metric_jordan_form(a2);
    ASSERT_EQ(g2.blocks.size(), 2u);
    EXPECT_EQ(g2.blocks[0].size, 2);
    EXPECT_EQ(g2.blocks[0].sign, eps);
    expect_consistent(a2, g2);
  }
}

// Reassembled Jordan matrices keep the characteristic polynomial.
TEST(MetricJordan, CharPolyInvariantOnRandomSelfAdjoint) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> d(-2, 2);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    SymBilinear b;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = r; c < 3; ++c) b(r, c) = d(rng);
    const Operator3 a = raise(b);
    MetricJordanForm f;
    try {
      f = metric_jordan_form(a);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateAmbiguity);
      continue;
    }
    ++checked;
    expect_consistent(a, f);
    const Cubic want = char_poly(a);
    const Cubic got = char_poly(jordan_matrix(f));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(got.c[k], want.c[k], 1e-8 * std::max(1.0, std::fabs(want.c[k])));
  }
  EXPECT_GT(checked, 290);
}
