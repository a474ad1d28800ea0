#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "sepweb/catalog.hpp"
#include "sepweb/killing.hpp"

using namespace sepweb;

namespace {

// d_i K_jk + d_j K_ki + d_k K_ij by central differences of the evaluated tensor.
double killing_fd(const PolySymTensor& k, const Vec3M& p) {
  const double h = 1e-5;
  double worst = 0.0;
  auto d = [&](int i, int a, int b) {
    Vec3M lo = p, hi = p;
    lo[static_cast<std::size_t>(i)] -= h;
    hi[static_cast<std::size_t>(i)] += h;
    return (k.evaluate(hi)(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) -
            k.evaluate(lo)(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) /
           (2 * h);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) worst = std::max(worst, std::fabs(d(i, j, l) + d(j, l, i) + d(l, i, j)));
  return worst;
}

}  // namespace

TEST(Killing, MetricHasZeroResidual) {
  EXPECT_EQ(killing_residual(PolySymTensor::metric(), {0.3, -2, 5}), 0.0);
}

TEST(Killing, TimesMetricHasResidualThree) {
  PolySymTensor k = PolySymTensor::metric();
  for (auto& c : k.c) c = c * Poly3::coordinate(0);
  for (const Vec3M& p : {Vec3M{0, 0, 0}, Vec3M{1, 2, 3}, Vec3M{-4, 0.5, 1}})
    EXPECT_NEAR(killing_residual(k, p), 3.0, 1e-14);
}

TEST(Killing, KbdtOfRandomTensorsIsKilling) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int i = 0; i < 50; ++i) {
    SymBilinear b;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = r; c < 3; ++c) b(r, c) = d(rng);
    ConcircularTensor l;
    l.A = raise(b);
    l.w = {d(rng), d(rng), d(rng)};
    l.m = d(rng);
    const KSAlgebra ks = ks_algebra(l);
    const Vec3M p{d(rng), d(rng), d(rng)};
    EXPECT_LE(killing_residual(ks.k1, p), 1e-12);
    EXPECT_LE(killing_residual(ks.k2, p), 1e-11);
    // Independent route: finite differences of the evaluated tensors.
    EXPECT_LE(killing_fd(ks.k1, p), 1e-6);
    EXPECT_LE(killing_fd(ks.k2, p), 1e-5);
  }
}

TEST(Killing, KbdtDefinition) {
  ConcircularTensor l;
  l.A = Operator3::diag(0, 1, 2);
  l.m = 1;
  const Vec3M p{0.3, 0.7, -1.1};
  const Operator3 lp = evaluate_ct(l, p);
  const SymBilinear want = trace(lp) * SymBilinear::metric() + (-1.0) * lower(lp);
  const SymBilinear got = kbdt(l).evaluate(p);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got.e[i], want.e[i], 1e-13);
}

TEST(Killing, GeneratorAlgebrasDiagonalizeInCharts) {
  for (const auto& c : list_charts()) {
    const Params p = default_params(c.web_id);
    std::mt19937_64 rng(300 + c.web_id * 8 + c.chart_index);
    for (int i = 0; i < 20; ++i) EXPECT_LE(diagonality_residual(c, p, sample_triple(c, p, rng)), 1e-8) << c.id();
  }
}

TEST(Killing, ConstantTensorIsNotDiagonalInPolarChart) {
  // Negative control: e_x-flat (x) e_x-flat is not diagonal in the polar chart of web 2.
  const ChartRecord& c = find_chart(2, 1);
  const auto j = chart_jacobian(c, {}, {0.0, 1.0, std::numbers::pi / 4});
  EXPECT_GT(pullback_offdiagonal(sym_outer(e_x(), e_x()), j), 0.1);
  EXPECT_LE(pullback_offdiagonal(SymBilinear::metric(), j), 1e-15);
}

TEST(Killing, QuadraticsAreConstantAlongLines) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> d(-2, 2);
  const std::array<double, 5> s{-1.5, -0.5, 0.25, 1.0, 2.0};
  for (const auto& w : list_webs()) {
    const KSAlgebra ks = ks_algebra(w.tensor(w.defaults));
    for (int i = 0; i < 5; ++i) {
      const Vec3M x0{d(rng), d(rng), d(rng)};
      const Vec3M v{d(rng), d(rng), d(rng)};
      EXPECT_LE(line_invariance(ks.k1, x0, v, s), 1e-10) << "web " << w.id;
      EXPECT_LE(line_invariance(ks.k2, x0, v, s), 1e-10) << "web " << w.id;
    }
  }
}

TEST(Killing, NonKillingTensorDriftsAlongLines) {
  PolySymTensor k = PolySymTensor::metric();
  for (auto& c : k.c) c = c * Poly3::coordinate(0);
  EXPECT_GT(line_invariance(k, {0.1, 0.2, 0.3}, {1, 0.5, 0}, {-1, 0, 1, 2, 3}), 0.1);
}

TEST(Killing, IndependenceOfIrreducibleAlgebras) {
  for (const auto& w : list_webs()) {
    if (!w.irreducible) continue;
    EXPECT_GT(ks_independence(ks_algebra(w.tensor(w.defaults))), 1e-8) << "web " << w.id;
  }
}
