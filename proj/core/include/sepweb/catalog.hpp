#pragma once

// The 45 separable webs of E^3_1 and their 88 inequivalent charts.
//
// Charts are data: every map and metric is a Program over (u, v, w) with a few
// let-bindings, so the same record drives evaluation, differentiation and export.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sepweb/concircular.hpp"
#include "sepweb/expr.hpp"
#include "sepweb/ict.hpp"
#include "sepweb/warped.hpp"

namespace sepweb {

enum class Family { Cartesian, Central, NonNullAxial, NullAxial };

const char* family_name(Family f);

// Parameter constraints stated in the web headers.
enum class ParamRule {
  None,
  APositive,   // a > 0
  AOrderedB,   // 0 < a < b
  UnitPair,    // 0 < a, b < 1 and a^2 + b^2 = 1
  BPositive,   // b > 0
  CPositive,   // c > 0
};

const char* param_rule_text(ParamRule r);
// Throws BadParams.
void check_params(ParamRule r, const Params& p);

struct WebRecord {
  int id = 0;
  std::string name;
  Family family = Family::Cartesian;
  std::optional<std::string> hm_label;
  std::optional<std::string> km_label;
  ParamRule rule = ParamRule::None;
  Params defaults;
  bool irreducible = false;
  std::string note;
  ConcircularTensor (*generator)(const Params&) = nullptr;

  ConcircularTensor tensor(const Params& p) const { return generator(p); }
};

// A parsed range-chain entry: a coordinate (optionally |.|), +-infinity or a bound.
struct RangeToken {
  int coord = -1;
  bool absolute = false;
  int infinity = 0;  // -1, +1 or 0 for a finite bound
  Expr bound;
};

// One inequality "lhs > rhs" over (t, x, y).
struct RegionClause {
  std::string text;
  Expr lhs_minus_rhs;
};

struct ChartRecord {
  int web_id = 0;
  int chart_index = 0;
  bool irreducible = false;
  int timelike = 0;  // 0, 1, 2 for u, v, w
  // Each chain is strictly increasing; tokens are u, v, w, |v|, -inf, inf or a
  // parameter expression such as K(a) or pi/2.
  std::vector<std::vector<std::string>> ranges;
  std::vector<std::pair<std::string, std::string>> lets;
  std::array<std::string, 3> map_text;     // t, x, y
  std::array<std::string, 3> metric_text;  // g_uu, g_vv, g_ww
  std::array<std::string, 3> offset_text;  // canonical offset
  std::vector<RegionClause> region;        // empty: the whole space (or ICT-derived)
  std::vector<std::vector<RangeToken>> chains;
  std::array<Expr, 3> offset;
  Program program;  // outputs: t, x, y, g_uu, g_vv, g_ww

  std::string id() const { return std::to_string(web_id) + "." + std::to_string(chart_index); }
};

const std::vector<WebRecord>& list_webs();
const std::vector<ChartRecord>& list_charts();
// Throws UnknownChart.
const WebRecord& find_web(int id);
const ChartRecord& find_chart(int web, int chart);
std::vector<const ChartRecord*> charts_of(int web);

// Evaluated defaults, with no constraint check.
Params default_params(int web);

bool in_range(const ChartRecord& c, const Params& p, const SeparableTriple& s);
// Rejection-free sampling inside the range chains with a relative margin.
SeparableTriple sample_triple(const ChartRecord& c, const Params& p, std::mt19937_64& rng,
                              double margin = 1e-3);

// BadParams, RangeViolation.
Vec3M chart_map(const ChartRecord& c, const Params& p, const SeparableTriple& s);
std::array<double, 3> chart_metric_eval(const ChartRecord& c, const Params& p,
                                        const SeparableTriple& s);
// Jacobian of chart_map, rows (t, x, y), columns (u, v, w).
std::array<std::array<double, 3>, 3> chart_jacobian(const ChartRecord& c, const Params& p,
                                                    const SeparableTriple& s);
// max |J^T g J - diag(metric)| relative to the larger of 1, the metric entries and the term sizes.
double pullback_residual(const ChartRecord& c, const Params& p, const SeparableTriple& s);

Vec3M canonical_offset(const ChartRecord& c, const Params& p);
// The generator written in the chart's Cartesian frame.
ConcircularTensor chart_tensor(const ChartRecord& c, const Params& p);

bool region_contains(const ChartRecord& c, const Params& p, const Vec3M& pt);

// Irreducible charts invert through the eigenvalues of L; reducible charts by
// damped Newton from seeded starts. OutsideRegion, DegenerateSpectrum,
// NumericalNonConvergence.
SeparableTriple chart_invert(const ChartRecord& c, const Params& p, const Vec3M& pt);

// Largest scaled off-diagonal entry of g, K1, K2 pulled back through the chart.
double diagonality_residual(const ChartRecord& c, const Params& p, const SeparableTriple& s);

// Warped-product decompositions behind the reducible webs.
struct ReducibleCase {
  int web_id = 0;
  std::string hint_name;
  Vec3M hint;
};
std::vector<ReducibleCase> reducible_cases();

// Webs whose generator matches the fingerprint of c (empty when none).
std::vector<int> identify_webs(const CanonicalCT& c);

}  // namespace sepweb
