#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sepweb/concircular.hpp"
#include "sepweb/linalg.hpp"

using namespace sepweb;

namespace {

Operator3 rand_op(std::mt19937_64& rng, double r = 2.0) {
  std::uniform_real_distribution<double> d(-r, r);
  Operator3 a;
  for (auto& row : a.m)
    for (auto& v : row) v = d(rng);
  return a;
}

// Faddeev-LeVerrier, written out independently of char_poly.
Cubic leverrier(const Operator3& a) {
  const double c2 = -trace(a);
  const Operator3 m2 = a + c2 * Operator3::identity();
  const Operator3 am2 = a * m2;
  const double c1 = -0.5 * trace(am2);
  const Operator3 m3 = am2 + c1 * Operator3::identity();
  const double c0 = -trace(a * m3) / 3.0;
  Cubic p;
  p.c = {c0, c1, c2};
  return p;
}

}  // namespace

TEST(Linalg, CharPolyMatchesLeverrier) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Operator3 a = rand_op(rng);
    const Cubic p = char_poly(a);
    const Cubic q = leverrier(a);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(p.c[k], q.c[k], 1e-12);
  }
}

TEST(Linalg, CubicRootsKnown) {
  Cubic p;  // (z-1)(z-2)(z-3)
  p.c = {-6, 11, -6};
  const CubicRoots r = cubic_roots(p);
  ASSERT_EQ(r.n_real, 3);
  EXPECT_NEAR(r.real[0], 1, 1e-14);
  EXPECT_NEAR(r.real[1], 2, 1e-14);
  EXPECT_NEAR(r.real[2], 3, 1e-14);

  Cubic q;  // (z-2)(z^2+1)
  q.c = {-2, 1, -2};
  const CubicRoots s = cubic_roots(q);
  ASSERT_EQ(s.n_real, 1);
  EXPECT_NEAR(s.real[0], 2, 1e-14);
  EXPECT_NEAR(s.pair.real(), 0, 1e-14);
  EXPECT_NEAR(s.pair.imag(), 1, 1e-14);
}

TEST(Linalg, CubicRootsAreRoots) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(-5, 5);
  for (int i = 0; i < 500; ++i) {
    Cubic p;
    p.c = {d(rng), d(rng), d(rng)};
    const CubicRoots r = cubic_roots(p);
    for (int k = 0; k < r.n_real; ++k) {
      const double z = r.real[static_cast<std::size_t>(k)];
      EXPECT_LE(std::fabs(p(z)), 1e-9 * std::max(1.0, std::fabs(z * z * z)));
    }
    if (r.n_real == 1) EXPECT_LE(std::abs(p(r.pair)), 1e-9 * std::max(1.0, std::pow(std::abs(r.pair), 3)));
  }
}

TEST(Linalg, SymmetricEigen) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Operator3 a = rand_op(rng);
    a = a + transpose(a);
    const SymEigen e = sym_eig3(a);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
    for (std::size_t k = 0; k < 3; ++k) {
      const Vec3M v = e.vectors.column(k);
      const Vec3M r = a * v - e.values[k] * v;
      EXPECT_LT(max_abs(r), 1e-12 * std::max(1.0, max_abs(a)));
    }
  }
}

TEST(Linalg, SingularValues) {
  const Operator3 a = Operator3::diag(3, -2, 0.5);
  const Singular3 s = singular_values3(a);
  EXPECT_NEAR(s.sigma[0], 3, 1e-14);
  EXPECT_NEAR(s.sigma[1], 2, 1e-14);
  EXPECT_NEAR(s.sigma[2], 0.5, 1e-14);
}

// The structured characteristic polynomial of a concircular tensor against the dense
// one at moderate |p|, where the latter is still accurate.
TEST(Linalg, StructuredCharPolyMatchesDense) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int i = 0; i < 300; ++i) {
    ConcircularTensor l;
    Operator3 s = rand_op(rng);
    s = s + transpose(s);
    SymBilinear b;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = r; c < 3; ++c) b(r, c) = s.m[r][c];
    l.A = raise(b);
    l.w = {d(rng), d(rng), d(rng)};
    l.m = d(rng);
    const Vec3M p{d(rng), d(rng), d(rng)};
    const Cubic fast = ct_char_poly(l, p);
    const Cubic dense = char_poly(evaluate_ct(l, p));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(fast.c[k], dense.c[k], 1e-10 * std::max(1.0, std::fabs(dense.c[k])));
  }
}
