#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sepweb/catalog.hpp"
#include "sepweb/errors.hpp"
#include "sepweb/warped.hpp"

using namespace sepweb;

TEST(Warped, SphereCases) {
  const SphereSpec flat = sphere_from_triple({}, {e_x(), e_y()}, {});
  EXPECT_EQ(flat.kind, SphereKind::Flat);

  const SphereSpec circle = sphere_from_triple(e_x(), {e_y()}, e_x());
  EXPECT_EQ(circle.kind, SphereKind::ConstCurv);
  EXPECT_LT(max_abs(circle.base), 1e-15);
  EXPECT_DOUBLE_EQ(circle.curvature, 1.0);

  const SphereSpec para = sphere_from_triple({}, {e_y()}, {1, 1, 0});
  EXPECT_EQ(para.kind, SphereKind::Parabolic);
}

TEST(Warped, CartesianMapIsSum) {
  InitialData d;
  d.v0 = {e_t()};
  d.v1 = {e_x(), e_y()};
  const WarpedProduct wp = make_warped_product(d);
  EXPECT_EQ(wp.form, MapForm::Cartesian);
  EXPECT_LT(max_abs(wp_map(wp, {1, 0, 0}, {0, 2, 3}) - Vec3M{1, 2, 3}), 1e-15);
}

TEST(Warped, NonNullCircleMap) {
  InitialData d;
  d.pbar = e_x();
  d.v0 = {e_t(), e_x()};
  d.v1 = {e_y()};
  d.a = e_x();
  const WarpedProduct wp = make_warped_product(d);
  EXPECT_EQ(wp.form, MapForm::NonNull);
  const Vec3M q = wp_map(wp, {2, 3, 0}, {0, std::cos(0.0), std::sin(0.0)});
  EXPECT_LT(max_abs(q - Vec3M{2, 3, 0}), 1e-14);
  EXPECT_DOUBLE_EQ(warping(wp, {2, 3, 0}), 3.0);
  EXPECT_THROW(wp_map(wp, {2, -1, 0}, {0, 1, 0}), Error);
}

TEST(Warped, NullMapAndImage) {
  const Vec3M a{1, 1, 0};
  InitialData d;
  d.v0 = {a, {-0.5, 0.5, 0}};
  d.v1 = {e_y()};
  d.a = a;
  const WarpedProduct wp = make_warped_product(d);
  EXPECT_EQ(wp.form, MapForm::Null);
  EXPECT_LT(max_abs(wp.b - Vec3M{-0.5, 0.5, 0}), 1e-15);
  const Vec3M q = wp_map(wp, wp.b, e_y());
  EXPECT_LT(max_abs(q - Vec3M{-1, 0, 1}), 1e-14);
  EXPECT_DOUBLE_EQ(dot(a, q), 1.0);
  EXPECT_TRUE(wp_image_contains(wp, {-1, 0, 1}));
  EXPECT_FALSE(wp_image_contains(wp, {1, 0, 0}));
}

TEST(Warped, ImageRejectsWrongCausalCharacter) {
  // Circle fibres: the projection onto span(a, e_y) must be spacelike and nonzero.
  InitialData d;
  d.pbar = e_x();
  d.v0 = {e_t(), e_x()};
  d.v1 = {e_y()};
  d.a = e_x();
  const WarpedProduct wp = make_warped_product(d);
  EXPECT_TRUE(wp_image_contains(wp, {0.5, 1.0, 0.3}));
  EXPECT_TRUE(wp_image_contains(wp, {0.5, -1.0, 0.3}));
  EXPECT_FALSE(wp_image_contains(wp, {0.5, 0.0, 0.0}));
}

TEST(Warped, CentralRadialDecomposition) {
  ConcircularTensor l;
  l.m = 1;
  const Decomposition d = decompose_reducible(l, e_t());
  EXPECT_EQ(d.wp.dim0(), 1);
  EXPECT_EQ(d.wp.dim1(), 2);
  EXPECT_EQ(d.wp.sphere.kind, SphereKind::ConstCurv);
  EXPECT_LT(d.wp.sphere.curvature, 0.0);  // hyperbolic plane fibres
}

TEST(Warped, CartesianProductDecomposition) {
  ConcircularTensor l;
  l.A = outer(e_t(), e_t());
  const Decomposition d = decompose_reducible(l, e_t());
  EXPECT_EQ(d.wp.form, MapForm::Cartesian);
  EXPECT_EQ(d.wp.dim0(), 1);
  EXPECT_EQ(d.wp.dim1(), 2);
  EXPECT_EQ(d.wp.sphere.kind, SphereKind::Flat);
}

TEST(Warped, NullRankOneDecomposition) {
  ConcircularTensor l;
  const Vec3M k{1, 1, 0};
  l.A = outer(k, k);
  l.m = 1;
  const Decomposition d = decompose_reducible(l, e_t());
  EXPECT_EQ(d.wp.form, MapForm::Null);
  EXPECT_EQ(d.wp.sphere.kind, SphereKind::Parabolic);
}

TEST(Warped, IrreducibleIsRejected) {
  ConcircularTensor l;
  l.A = Operator3::diag(0, 1, 2);
  l.m = 1;
  try {
    decompose_reducible(l, e_t());
    FAIL() << "expected NotReducible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReducible);
  }
}

TEST(Warped, ResidualsOverCatalogDecompositions) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> coord(-2, 2);
  const auto cases = reducible_cases();
  ASSERT_FALSE(cases.empty());
  for (const auto& rc : cases) {
    const WebRecord& w = find_web(rc.web_id);
    const Decomposition d = decompose_reducible(w.tensor(w.defaults), rc.hint);
    int taken = 0;
    for (int tries = 0; taken < 50 && tries < 20000; ++tries) {
      const std::array<double, 3> x{coord(rng), coord(rng), coord(rng)};
      if (!wp_coords_valid(d.wp, x)) continue;
      ++taken;
      EXPECT_LE(wp_isometry_residual(d.wp, x), 1e-8) << "web " << rc.web_id << " " << rc.hint_name;
      EXPECT_LE(wp_adaptedness_residual(d, x), 1e-8) << "web " << rc.web_id << " " << rc.hint_name;
      EXPECT_LE(wp_restriction_residual(d, x), 1e-8) << "web " << rc.web_id << " " << rc.hint_name;
      const auto q = wp_chart(d.wp, x);
      EXPECT_TRUE(wp_image_contains(d.wp, {q[0], q[1], q[2]})) << "web " << rc.web_id << " " << rc.hint_name;
    }
    EXPECT_EQ(taken, 50) << "web " << rc.web_id;
  }
}

TEST(Warped, EveryReducibleWebHasADecomposition) {
  std::vector<bool> seen(46, false);
  for (const auto& rc : reducible_cases()) seen[static_cast<std::size_t>(rc.web_id)] = true;
  for (const auto& w : list_webs())
    if (!w.irreducible) EXPECT_TRUE(seen[static_cast<std::size_t>(w.id)]) << "web " << w.id;
}
