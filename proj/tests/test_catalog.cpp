#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "sepweb/catalog.hpp"
#include "sepweb/errors.hpp"

using namespace sepweb;

namespace {

// Timelike coordinate (0=u, 1=v, 2=w) of each chart, in catalog order, as annotated
// in the chart headers.
const std::map<int, std::vector<int>> kTimelike = {
    {1, {0}},          {2, {0}},       {3, {0}},          {4, {0}},          {5, {0, 1}},       {6, {1}},
    {7, {1, 1, 0}},    {8, {0}},       {9, {0}},          {10, {1, 1}},      {11, {0}},         {12, {1}},
    {13, {1}},         {14, {0, 0}},   {15, {0, 1, 0}},   {16, {0, 0}},      {17, {1, 0, 0}},   {18, {0, 0}},
    {19, {1, 0}},      {20, {0, 1, 1, 0}}, {21, {0, 0}},  {22, {0, 0}},      {23, {1, 1, 0}},   {24, {1}},
    {25, {0, 1}},      {26, {0, 1, 1, 0}}, {27, {1, 1}},  {28, {0}},         {29, {2}},         {30, {2, 1, 2, 1}},
    {31, {2, 1, 0, 1}}, {32, {1, 2}},  {33, {2}},         {34, {1, 1}},      {35, {1, 2, 2}},   {36, {1, 1, 2}},
    {37, {1, 2}},      {38, {0}},      {39, {2, 1}},      {40, {0, 1}},      {41, {1, 0, 1}},   {42, {1}},
    {43, {1, 1}},      {44, {1, 2}},   {45, {1}},
};

std::mt19937_64 rng_for(const ChartRecord& c, int salt) {
  return std::mt19937_64(static_cast<std::uint64_t>(salt * 1000 + c.web_id * 8 + c.chart_index));
}

// Central-difference Jacobian of chart_map; shares nothing with the dual numbers.
std::array<std::array<double, 3>, 3> fd_jacobian(const ChartRecord& c, const Params& p, const SeparableTriple& s) {
  std::array<std::array<double, 3>, 3> j{};
  for (int k = 0; k < 3; ++k) {
    const double h = 1e-6 * std::max(1.0, std::fabs(k == 0 ? s.u : k == 1 ? s.v : s.w));
    SeparableTriple lo = s, hi = s;
    (k == 0 ? lo.u : k == 1 ? lo.v : lo.w) -= h;
    (k == 0 ? hi.u : k == 1 ? hi.v : hi.w) += h;
    const auto a = c.program.run<double>({lo.u, lo.v, lo.w}, p);
    const auto b = c.program.run<double>({hi.u, hi.v, hi.w}, p);
    for (std::size_t i = 0; i < 3; ++i) j[i][static_cast<std::size_t>(k)] = (b[i] - a[i]) / (2 * h);
  }
  return j;
}

}  // namespace

TEST(Catalog, Counts) {
  EXPECT_EQ(list_webs().size(), 45u);
  EXPECT_EQ(list_charts().size(), 88u);
  const auto irr = std::count_if(list_charts().begin(), list_charts().end(),
                                 [](const ChartRecord& c) { return c.irreducible; });
  EXPECT_EQ(irr, 33);
  std::size_t total = 0;
  for (const auto& [web, tl] : kTimelike) {
    EXPECT_EQ(charts_of(web).size(), tl.size()) << "web " << web;
    total += tl.size();
  }
  EXPECT_EQ(total, 88u);
}

TEST(Catalog, LabelsAndNotes) {
  const WebRecord& w34 = find_web(34);
  EXPECT_FALSE(w34.hm_label.has_value());
  EXPECT_FALSE(w34.km_label.has_value());
  EXPECT_TRUE(find_web(29).hm_label.has_value());
  EXPECT_NE(find_web(31).note.find("three"), std::string::npos);
  EXPECT_FALSE(find_web(39).note.empty());
  EXPECT_THROW(find_web(46), Error);
  EXPECT_THROW(find_chart(99, 1), Error);
  EXPECT_THROW(find_chart(7, 4), Error);
}

TEST(Catalog, ParameterRules) {
  EXPECT_THROW(check_params(ParamRule::AOrderedB, {2, 1, 0}), Error);
  EXPECT_NO_THROW(check_params(ParamRule::AOrderedB, {1, 2, 0}));
  EXPECT_THROW(check_params(ParamRule::UnitPair, {0.5, 0.5, 0}), Error);
  EXPECT_NO_THROW(check_params(ParamRule::UnitPair, {0.6, 0.8, 0}));
  EXPECT_THROW(chart_map(find_chart(29, 1), {2, 1, 0}, {3, 1.5, -1}), Error);
  for (const auto& w : list_webs()) EXPECT_NO_THROW(check_params(w.rule, w.defaults)) << "web " << w.id;
}

TEST(Catalog, MapExamples) {
  const Vec3M q2 = chart_map(find_chart(2, 1), {}, {1, 2, std::numbers::pi / 2});
  EXPECT_NEAR(q2.t, 1, 1e-15);
  EXPECT_NEAR(q2.x, 0, 1e-15);
  EXPECT_NEAR(q2.y, 2, 1e-15);

  // The (1, 0, 0) example of 16.2 sits on the v = 0 boundary: the formula gives
  // (1, 0, 0) but chart_map refuses the boundary itself.
  const ChartRecord& c16 = find_chart(16, 2);
  const auto raw = c16.program.run<double>({1.0, 0.0, 0.0}, {});
  EXPECT_EQ(raw[0], 1.0);
  EXPECT_EQ(raw[1], 0.0);
  EXPECT_EQ(raw[2], 0.0);
  EXPECT_THROW(chart_map(c16, {}, {1, 0, 0}), Error);
  const Vec3M near = chart_map(c16, {}, {1, 1e-9, 0.5});
  EXPECT_NEAR(near.t, 1, 1e-12);

  const Vec3M q29 = chart_map(find_chart(29, 1), {1, 2, 0}, {3, 1.5, -1});
  EXPECT_NEAR(q29.t * q29.t, 2.25, 1e-12);
  EXPECT_NEAR(q29.x * q29.x, 2.0, 1e-12);
  EXPECT_NEAR(q29.y * q29.y, 0.75, 1e-12);
}

TEST(Catalog, MetricExamples) {
  const auto g1 = chart_metric_eval(find_chart(1, 1), {}, {0.3, -1, 4});
  EXPECT_EQ(g1[0], -1);
  EXPECT_EQ(g1[1], 1);
  EXPECT_EQ(g1[2], 1);

  const auto g29 = chart_metric_eval(find_chart(29, 1), {1, 2, 0}, {3, 1.5, -1});
  EXPECT_NEAR(g29[0], 0.25, 1e-15);

  const auto g38 = chart_metric_eval(find_chart(38, 1), {}, {2, 1, 0.5});
  EXPECT_NEAR(g38[0], -3, 1e-15);
  EXPECT_NEAR(g38[2], 4, 1e-15);
}

TEST(Catalog, RegionExamples) {
  const ChartRecord& c16 = find_chart(16, 2);
  EXPECT_TRUE(region_contains(c16, {}, {1, 0, 0}));
  EXPECT_FALSE(region_contains(c16, {}, {0, 1, 0}));
  const ChartRecord& c7 = find_chart(7, 1);
  EXPECT_EQ(c7.region.front().text, "abs(t)-abs(x) > a");
  EXPECT_TRUE(region_contains(c7, {1, 0, 0}, {2, 0.5, 0}));
  EXPECT_FALSE(region_contains(c7, {1, 0, 0}, {0.5, 2, 0}));
}

TEST(Catalog, InvertExamples) {
  const SeparableTriple s29 = chart_invert(find_chart(29, 1), {1, 2, 0}, {1.5, std::sqrt(2.0), std::sqrt(0.75)});
  EXPECT_NEAR(s29.u, 3, 1e-12);
  EXPECT_NEAR(s29.v, 1.5, 1e-12);
  EXPECT_NEAR(s29.w, -1, 1e-12);

  const SeparableTriple s2 = chart_invert(find_chart(2, 1), {}, {1, 0, 2});
  EXPECT_NEAR(s2.u, 1, 1e-10);
  EXPECT_NEAR(s2.v, 2, 1e-10);
  EXPECT_NEAR(s2.w, std::numbers::pi / 2, 1e-10);

  try {
    chart_invert(find_chart(16, 2), {}, {1, 1, 0});
    FAIL() << "expected OutsideRegion";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideRegion);
  }
}

TEST(Catalog, SamplesStayInRange) {
  for (const auto& c : list_charts()) {
    const Params p = default_params(c.web_id);
    auto rng = rng_for(c, 1);
    for (int i = 0; i < 50; ++i) EXPECT_TRUE(in_range(c, p, sample_triple(c, p, rng))) << c.id();
  }
}

TEST(Catalog, PullbackResidualSmall) {
  for (const auto& c : list_charts()) {
    const Params p = default_params(c.web_id);
    auto rng = rng_for(c, 2);
    for (int i = 0; i < 100; ++i) EXPECT_LE(pullback_residual(c, p, sample_triple(c, p, rng)), 1e-8) << c.id();
  }
}

// Second route for the pullback: finite differences instead of dual numbers.
TEST(Catalog, PullbackAgainstFiniteDifferences) {
  for (const auto& c : list_charts()) {
    const Params p = default_params(c.web_id);
    auto rng = rng_for(c, 3);
    for (int i = 0; i < 10; ++i) {
      const SeparableTriple s = sample_triple(c, p, rng);
      const auto j = fd_jacobian(c, p, s);
      const auto g = chart_metric_eval(c, p, s);
      double scale = 1.0;
      for (double v : g) scale = std::max(scale, std::fabs(v));
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
          double m = 0.0, mag = 0.0;
          for (std::size_t k = 0; k < 3; ++k) {
            m += kEta[k] * j[k][a] * j[k][b];
            mag += std::fabs(j[k][a] * j[k][b]);
          }
          EXPECT_NEAR(m, a == b ? g[a] : 0.0, 1e-5 * std::max(scale, mag)) << c.id() << " entry " << a << b;
        }
    }
  }
}

TEST(Catalog, CorruptedMapIsCaught) {
  ChartRecord bad = find_chart(2, 1);
  bad.program = Program({"u", "v", "w"}, {});
  for (const char* out : {"u", "v*cosh(w)", "v*sin(w)", "-1", "1", "v^2"}) bad.program.add_output(out);
  EXPECT_GT(pullback_residual(bad, {}, {0.2, 1.3, 0.9}), 0.1);
}

TEST(Catalog, SignatureMatchesTimelikeAnnotation) {
  for (const auto& [web, tl] : kTimelike) {
    const auto charts = charts_of(web);
    ASSERT_EQ(charts.size(), tl.size());
    for (std::size_t k = 0; k < charts.size(); ++k) {
      const ChartRecord& c = *charts[k];
      EXPECT_EQ(c.timelike, tl[k]) << c.id();
      const Params p = default_params(web);
      auto rng = rng_for(c, 4);
      for (int i = 0; i < 20; ++i) {
        const auto g = chart_metric_eval(c, p, sample_triple(c, p, rng));
        int negative = 0;
        for (std::size_t a = 0; a < 3; ++a)
          if (g[a] < 0) {
            ++negative;
            EXPECT_EQ(static_cast<int>(a), tl[k]) << c.id();
          }
        EXPECT_EQ(negative, 1) << c.id();
      }
    }
  }
}

TEST(Catalog, ImagesLieInRegions) {
  for (const auto& c : list_charts()) {
    const Params p = default_params(c.web_id);
    auto rng = rng_for(c, 5);
    for (int i = 0; i < 30; ++i) EXPECT_TRUE(region_contains(c, p, chart_map(c, p, sample_triple(c, p, rng)))) << c.id();
  }
}

TEST(Catalog, ReducibleRoundTrips) {
  for (const auto& c : list_charts()) {
    if (c.irreducible) continue;
    const Params p = default_params(c.web_id);
    auto rng = rng_for(c, 6);
    for (int i = 0; i < 20; ++i) {
      const SeparableTriple s = sample_triple(c, p, rng);
      const Vec3M q = chart_map(c, p, s);
      SeparableTriple r;
      try {
        r = chart_invert(c, p, q);
      } catch (const Error& e) {
        // Only the elliptic webs may give up.
        EXPECT_EQ(e.code(), ErrorCode::NumericalNonConvergence) << c.id();
        EXPECT_TRUE(c.web_id == 14 || c.web_id == 15 || c.web_id == 18) << c.id();
        continue;
      }
      EXPECT_TRUE(in_range(c, p, r)) << c.id();
      // The returned triple always reproduces the point; on 18.2 the positive-branch
      // map folds and a different preimage is legitimate.
      EXPECT_LE(max_abs(chart_map(c, p, r) - q), 1e-8 * std::max(1.0, max_abs(q))) << c.id();
      if (c.web_id != 18) {
        const double sc = std::max({1.0, std::fabs(s.u), std::fabs(s.v), std::fabs(s.w)});
        EXPECT_LE(std::max({std::fabs(r.u - s.u), std::fabs(r.v - s.v), std::fabs(r.w - s.w)}) / sc, 1e-8) << c.id();
      }
    }
  }
}

TEST(Catalog, OffsetsAndIdentification) {
  const Vec3M o39 = canonical_offset(find_chart(39, 1), {2, 0, 0});
  EXPECT_DOUBLE_EQ(o39.t, 1.0);
  const Vec3M o41 = canonical_offset(find_chart(41, 1), {2, 0, 0});
  EXPECT_DOUBLE_EQ(o41.y, -1.0);
  EXPECT_EQ(max_abs(canonical_offset(find_chart(29, 1), {1, 2, 0})), 0.0);

  for (const auto& w : list_webs()) {
    const auto ids = identify_webs(classify_ct(w.tensor(w.defaults)));
    EXPECT_NE(std::find(ids.begin(), ids.end(), w.id), ids.end()) << "web " << w.id;
    if (w.irreducible) EXPECT_EQ(ids.size(), 1u) << "web " << w.id;
  }
}
