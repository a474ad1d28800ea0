#include "sepweb/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "catalog_data.hpp"
#include "sepweb/errors.hpp"
#include "sepweb/killing.hpp"

namespace sepweb {

const char* family_name(Family f) {
  switch (f) {
    case Family::Cartesian: return "Cartesian";
    case Family::Central: return "Central";
    case Family::NonNullAxial: return "NonNullAxial";
    case Family::NullAxial: return "NullAxial";
  }
  return "?";
}

const char* param_rule_text(ParamRule r) {
  switch (r) {
    case ParamRule::None: return "";
    case ParamRule::APositive: return "a > 0";
    case ParamRule::AOrderedB: return "0 < a < b";
    case ParamRule::UnitPair: return "0 < a < 1, 0 < b < 1, a^2 + b^2 = 1";
    case ParamRule::BPositive: return "b > 0";
    case ParamRule::CPositive: return "c > 0";
  }
  return "";
}

void check_params(ParamRule r, const Params& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c))
    throw Error(ErrorCode::BadParams, "non-finite parameter");
  bool ok = true;
  switch (r) {
    case ParamRule::None: break;
    case ParamRule::APositive: ok = p.a > 0; break;
    case ParamRule::AOrderedB: ok = 0 < p.a && p.a < p.b; break;
    case ParamRule::UnitPair:
      ok = 0 < p.a && p.a < 1 && 0 < p.b && p.b < 1 && std::fabs(p.a * p.a + p.b * p.b - 1) <= 1e-12;
      break;
    case ParamRule::BPositive: ok = p.b > 0; break;
    case ParamRule::CPositive: ok = p.c > 0; break;
  }
  if (!ok) throw Error(ErrorCode::BadParams, std::string("parameters violate ") + param_rule_text(r));
}

namespace {

Params defaults_for(ParamRule r) {
  switch (r) {
    case ParamRule::None: return {};
    case ParamRule::APositive: return {1.0, 0.0, 0.0};
    case ParamRule::AOrderedB: return {1.0, 2.0, 0.0};
    case ParamRule::UnitPair: return {0.6, 0.8, 0.0};
    case ParamRule::BPositive: return {0.0, 1.0, 1.0};
    case ParamRule::CPositive: return {0.0, 0.0, 1.0};
  }
  return {};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

const std::map<std::string, int> kNoSlots;
const std::map<std::string, int> kTxy = {{"t", 0}, {"x", 1}, {"y", 2}};

RangeToken parse_token(const std::string& tok) {
  RangeToken r;
  static const std::map<std::string, int> coords = {{"u", 0}, {"v", 1}, {"w", 2}};
  if (tok == "-inf") {
    r.infinity = -1;
  } else if (tok == "inf") {
    r.infinity = 1;
  } else if (coords.count(tok)) {
    r.coord = coords.at(tok);
  } else if (tok.size() == 3 && tok.front() == '|' && tok.back() == '|') {
    r.coord = coords.at(tok.substr(1, 1));
    r.absolute = true;
  } else {
    r.bound = Expr::parse(tok, kNoSlots);
  }
  return r;
}

RegionClause parse_clause(const std::string& text) {
  const auto pos = text.find_first_of("<>");
  if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "region clause without inequality: " + text);
  const std::string lhs = text.substr(0, pos);
  const std::string rhs = text.substr(pos + 1);
  const std::string diff = text[pos] == '>' ? "(" + lhs + ")-(" + rhs + ")" : "(" + rhs + ")-(" + lhs + ")";
  return {text, Expr::parse(diff, kTxy)};
}

bool web_irreducible(int id) { return (id >= 29 && id <= 37) || id == 39 || id >= 41; }

std::vector<WebRecord> build_webs() {
  std::vector<WebRecord> out;
  for (const auto& r : data::raw_webs()) {
    WebRecord w;
    w.id = r.id;
    w.name = r.name;
    w.family = r.family;
    if (r.hm_label != nullptr) w.hm_label = r.hm_label;
    if (r.km_label != nullptr) w.km_label = r.km_label;
    w.rule = r.rule;
    w.defaults = defaults_for(r.rule);
    w.irreducible = web_irreducible(r.id);
    w.note = r.note;
    w.generator = r.generator;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<ChartRecord> build_charts() {
  std::vector<data::RawChart> raw = data::raw_charts();
  std::stable_sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.web < y.web; });
  std::vector<ChartRecord> out;
  std::map<int, int> counter;
  for (const auto& r : raw) {
    ChartRecord c;
    c.web_id = r.web;
    c.chart_index = ++counter[r.web];
    c.irreducible = web_irreducible(r.web);
    c.timelike = r.timelike;
    for (const auto& chain : split(r.ranges, ';')) {
      std::vector<std::string> toks;
      std::istringstream in(chain);
      std::string t;
      while (in >> t) toks.push_back(t);
      std::vector<RangeToken> parsed;
      for (const auto& tok : toks) parsed.push_back(parse_token(tok));
      c.ranges.push_back(toks);
      c.chains.push_back(std::move(parsed));
    }
    for (const auto& let : split(r.lets, ';')) {
      const auto eq = let.find('=');
      c.lets.emplace_back(trim(let.substr(0, eq)), trim(let.substr(eq + 1)));
    }
    c.map_text = r.map;
    c.metric_text = r.metric;
    const auto off = r.offset.empty() ? std::vector<std::string>{"0", "0", "0"} : split(r.offset, ',');
    for (std::size_t i = 0; i < 3; ++i) {
      c.offset_text[i] = off.at(i);
      c.offset[i] = Expr::parse(off.at(i), kNoSlots);
    }
    for (const auto& clause : split(r.region, ';')) c.region.push_back(parse_clause(clause));
    c.program = Program({"u", "v", "w"}, c.lets);
    for (const auto& e : c.map_text) c.program.add_output(e);
    for (const auto& e : c.metric_text) c.program.add_output(e);
    out.push_back(std::move(c));
  }
  return out;
}

double coord_value(const RangeToken& t, const SeparableTriple& s) {
  const double v = t.coord == 0 ? s.u : t.coord == 1 ? s.v : s.w;
  return t.absolute ? std::fabs(v) : v;
}

double& coord_ref(int k, SeparableTriple& s) { return k == 0 ? s.u : k == 1 ? s.v : s.w; }

double token_value(const RangeToken& t, const Params& p) {
  if (t.infinity != 0) return t.infinity * std::numeric_limits<double>::infinity();
  return t.bound.eval<double>({}, p);
}

const WebRecord& web_of(const ChartRecord& c) { return find_web(c.web_id); }

std::vector<double> run_checked(const ChartRecord& c, const Params& p, const SeparableTriple& s) {
  check_params(web_of(c).rule, p);
  if (!in_range(c, p, s)) throw Error(ErrorCode::RangeViolation, "triple outside the ranges of chart " + c.id());
  auto out = c.program.run<double>({s.u, s.v, s.w}, p);
  for (double v : out)
    if (!std::isfinite(v)) throw Error(ErrorCode::RangeViolation, "chart " + c.id() + " is singular at the triple");
  return out;
}

}  // namespace

const std::vector<WebRecord>& list_webs() {
  static const std::vector<WebRecord> webs = build_webs();
  return webs;
}

const std::vector<ChartRecord>& list_charts() {
  static const std::vector<ChartRecord> charts = build_charts();
  return charts;
}

const WebRecord& find_web(int id) {
  const auto& w = list_webs();
  if (id < 1 || id > static_cast<int>(w.size()))
    throw Error(ErrorCode::UnknownChart, "no web " + std::to_string(id));
  return w[static_cast<std::size_t>(id - 1)];
}

const ChartRecord& find_chart(int web, int chart) {
  for (const auto& c : list_charts())
    if (c.web_id == web && c.chart_index == chart) return c;
  throw Error(ErrorCode::UnknownChart, "no chart " + std::to_string(web) + "." + std::to_string(chart));
}

std::vector<const ChartRecord*> charts_of(int web) {
  std::vector<const ChartRecord*> out;
  for (const auto& c : list_charts())
    if (c.web_id == web) out.push_back(&c);
  return out;
}

Params default_params(int web) { return find_web(web).defaults; }

bool in_range(const ChartRecord& c, const Params& p, const SeparableTriple& s) {
  for (const auto& chain : c.chains) {
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& t : chain) {
      const double v = t.coord >= 0 ? coord_value(t, s) : token_value(t, p);
      if (!std::isfinite(v) && t.coord >= 0) return false;
      if (!(v > prev) && !(std::isinf(v) && std::isinf(prev) && v < 0)) return false;
      prev = v;
    }
  }
  return true;
}

namespace {

// With edge set, draws crowd geometrically towards the interval ends.
SeparableTriple sample_impl(const ChartRecord& c, const Params& p, std::mt19937_64& rng, double margin,
                            double kWindow, bool edge) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    if (!edge) return unit(rng);
    const double d = 0.5 * std::pow(10.0, -6.0 * unit(rng));
    return unit(rng) < 0.5 ? d : 1.0 - d;
  };
  SeparableTriple s;
  for (const auto& chain : c.chains) {
    // Coordinates between consecutive bounds are sampled sorted in that interval.
    double lo = -std::numeric_limits<double>::infinity();
    std::vector<const RangeToken*> group;
    auto flush = [&](double hi) {
      if (group.empty()) return;
      double a = lo;
      double b = hi;
      if (std::isinf(a) && std::isinf(b)) {
        a = -kWindow;
        b = kWindow;
      } else if (std::isinf(a)) {
        a = b - kWindow;
      } else if (std::isinf(b)) {
        b = a + kWindow;
      }
      const double span = b - a;
      std::vector<double> vals;
      for (std::size_t i = 0; i < group.size(); ++i) vals.push_back(a + span * (margin + (1 - 2 * margin) * draw()));
      std::sort(vals.begin(), vals.end());
      for (std::size_t i = 0; i < group.size(); ++i) {
        double v = vals[i];
        if (group[i]->absolute && unit(rng) < 0.5) v = -v;
        coord_ref(group[i]->coord, s) = v;
      }
      group.clear();
    };
    for (const auto& t : chain) {
      if (t.coord >= 0) {
        group.push_back(&t);
      } else {
        const double v = token_value(t, p);
        flush(v);
        lo = v;
      }
    }
    flush(std::numeric_limits<double>::infinity());
  }
  return s;
}

}  // namespace

SeparableTriple sample_triple(const ChartRecord& c, const Params& p, std::mt19937_64& rng, double margin) {
  return sample_impl(c, p, rng, margin, 3.0, false);
}

Vec3M chart_map(const ChartRecord& c, const Params& p, const SeparableTriple& s) {
  const auto out = run_checked(c, p, s);
  return {out[0], out[1], out[2]};
}

std::array<double, 3> chart_metric_eval(const ChartRecord& c, const Params& p, const SeparableTriple& s) {
  const auto out = run_checked(c, p, s);
  return {out[3], out[4], out[5]};
}

std::array<std::array<double, 3>, 3> chart_jacobian(const ChartRecord& c, const Params& p,
                                                    const SeparableTriple& s) {
  check_params(web_of(c).rule, p);
  const std::array<DualScalar, 3> in = {DualScalar::variable(s.u, 0), DualScalar::variable(s.v, 1),
                                        DualScalar::variable(s.w, 2)};
  const auto out = c.program.run<DualScalar>(in, p);
  std::array<std::array<double, 3>, 3> j{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) j[r][k] = out[r].d[k];
  return j;
}

double pullback_residual(const ChartRecord& c, const Params& p, const SeparableTriple& s) {
  const auto g = chart_metric_eval(c, p, s);
  const auto j = chart_jacobian(c, p, s);
  double scale = 1.0;
  for (double v : g) scale = std::max(scale, std::fabs(v));
  double worst = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      double m = 0.0;
      double mag = 0.0;
      for (std::size_t i = 0; i < 3; ++i) {
        m += kEta[i] * j[i][a] * j[i][b];
        mag += std::fabs(j[i][a] * j[i][b]);
      }
      scale = std::max(scale, mag);
      const double expected = a == b ? g[a] : 0.0;
      worst = std::max(worst, std::fabs(m - expected));
    }
  return worst / scale;
}

Vec3M canonical_offset(const ChartRecord& c, const Params& p) {
  return {c.offset[0].eval<double>({}, p), c.offset[1].eval<double>({}, p), c.offset[2].eval<double>({}, p)};
}

ConcircularTensor chart_tensor(const ChartRecord& c, const Params& p) {
  return translate(web_of(c).tensor(p), canonical_offset(c, p));
}

namespace {

bool reproduces(const ChartRecord& c, const Params& p, const SeparableTriple& s, const Vec3M& pt) {
  try {
    const Vec3M q = chart_map(c, p, s);
    return max_abs(q - pt) <= 1e-8 * std::max(1.0, max_abs(pt));
  } catch (const Error&) {
    return false;
  }
}

SeparableTriple invert_ict(const ChartRecord& c, const Params& p, const Vec3M& pt) {
  SeparableTriple s;
  try {
    s = ict_invert(web_of(c).tensor(p), pt, canonical_offset(c, p));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ComplexSpectrum) throw Error(ErrorCode::OutsideRegion, e.what());
    throw;
  }
  if (!in_range(c, p, s) || !reproduces(c, p, s, pt))
    throw Error(ErrorCode::OutsideRegion, "point is not covered by chart " + c.id());
  return s;
}

double misfit(const ChartRecord& c, const Params& p, const SeparableTriple& s, const Vec3M& pt) {
  const auto out = c.program.run<double>({s.u, s.v, s.w}, p);
  const double r = std::max({std::fabs(out[0] - pt.t), std::fabs(out[1] - pt.x), std::fabs(out[2] - pt.y)});
  return std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
}

// Misfit on asinh-compressed components; Newton uses it as its merit function.
double squashed_misfit(const ChartRecord& c, const Params& p, const SeparableTriple& s, const Vec3M& goal) {
  const auto out = c.program.run<double>({s.u, s.v, s.w}, p);
  double r = 0.0;
  for (int a = 0; a < 3; ++a)
    r = std::max(r, std::fabs(std::asinh(out[static_cast<std::size_t>(a)]) - goal[static_cast<std::size_t>(a)]));
  return std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
}

// Damped Newton towards target from s on asinh-compressed components, which tames
// the exponential growth of many charts; returns the final misfit.
double newton(const ChartRecord& c, const Params& p, const Vec3M& target, SeparableTriple& s, int iters,
              double tol) {
  const Vec3M goal{std::asinh(target.t), std::asinh(target.x), std::asinh(target.y)};
  double merit = squashed_misfit(c, p, s, goal);
  for (int it = 0; it < iters && misfit(c, p, s, target) > tol; ++it) {
    const std::array<DualScalar, 3> in = {DualScalar::variable(s.u, 0), DualScalar::variable(s.v, 1),
                                          DualScalar::variable(s.w, 2)};
    const auto out = c.program.run<DualScalar>(in, p);
    Operator3 jm;
    Vec3M rhs;
    for (int a = 0; a < 3; ++a) {
      const DualScalar& f = out[static_cast<std::size_t>(a)];
      const double damp = 1.0 / std::sqrt(1.0 + f.value * f.value);
      for (int b = 0; b < 3; ++b) jm.m[a][b] = f.d[static_cast<std::size_t>(b)] * damp;
      rhs[static_cast<std::size_t>(a)] = goal[static_cast<std::size_t>(a)] - std::asinh(f.value);
    }
    Vec3M step;
    try {
      step = inverse(jm) * rhs;
    } catch (const Error&) {
      break;
    }
    double lambda = 1.0;
    bool moved = false;
    for (int h = 0; h < 40; ++h, lambda *= 0.5) {
      SeparableTriple trial{s.u + lambda * step.t, s.v + lambda * step.x, s.w + lambda * step.y};
      // Most two-coordinate orderings (v < u) fold a symmetric map; stepping across
      // the fold and swapping back keeps Newton off the singular diagonal.
      if (!in_range(c, p, trial)) {
        const SeparableTriple swaps[3] = {{trial.v, trial.u, trial.w}, {trial.u, trial.w, trial.v},
                                          {trial.w, trial.v, trial.u}};
        bool found = false;
        for (const auto& sw : swaps)
          if (in_range(c, p, sw)) {
            trial = sw;
            found = true;
            break;
          }
        if (!found) continue;
      }
      const double mt = squashed_misfit(c, p, trial, goal);
      if (mt < merit) {
        s = trial;
        merit = mt;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return misfit(c, p, s, target);
}

// Follows target(tau) = p0 + tau (pt - p0) from a seed with p0 = chart_map(seed).
bool continuation(const ChartRecord& c, const Params& p, const Vec3M& pt, SeparableTriple& s) {
  const auto out = c.program.run<double>({s.u, s.v, s.w}, p);
  const Vec3M p0{out[0], out[1], out[2]};
  double tau = 0.0;
  double dtau = 0.1;
  while (tau < 1.0) {
    const double next = std::min(1.0, tau + dtau);
    const Vec3M q = p0 + next * (pt - p0);
    SeparableTriple trial = s;
    if (newton(c, p, q, trial, 25, 1e-11 * std::max(1.0, max_abs(q))) <= 1e-11 * std::max(1.0, max_abs(q))) {
      s = trial;
      tau = next;
      dtau *= 1.5;
    } else {
      dtau *= 0.5;
      if (dtau < 1e-7) return false;
    }
  }
  return true;
}

SeparableTriple invert_newton(const ChartRecord& c, const Params& p, const Vec3M& pt) {
  constexpr int kSeeds = 256;
  constexpr int kTries = 24;
  const double tol = 1e-12 * std::max(1.0, max_abs(pt));
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(c.web_id * 16 + c.chart_index));
  std::vector<std::pair<double, SeparableTriple>> seeds;
  for (int i = 0; i < kSeeds; ++i) {
    const SeparableTriple s = i % 4 == 0   ? sample_impl(c, p, rng, 0.0, 3.0, true)
                              : i % 4 == 1 ? sample_impl(c, p, rng, 1e-3, 12.0, false)
                                           : sample_impl(c, p, rng, 1e-3, 3.0, false);
    if (!in_range(c, p, s)) continue;
    seeds.emplace_back(misfit(c, p, s, pt), s);
  }
  std::sort(seeds.begin(), seeds.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (int k = 0; k < kTries; ++k) {
    SeparableTriple s = seeds[static_cast<std::size_t>(k)].second;
    if (newton(c, p, pt, s, 100, tol) <= tol * 1e4 && reproduces(c, p, s, pt)) return s;
  }
  for (int k = 0; k < kTries; ++k) {
    SeparableTriple s = seeds[static_cast<std::size_t>(k)].second;
    if (continuation(c, p, pt, s) && newton(c, p, pt, s, 20, tol) <= tol * 1e4 && reproduces(c, p, s, pt))
      return s;
  }
  throw Error(ErrorCode::NumericalNonConvergence, "Newton inversion failed for chart " + c.id());
}

}  // namespace

bool region_contains(const ChartRecord& c, const Params& p, const Vec3M& pt) {
  check_params(web_of(c).rule, p);
  if (c.irreducible) {
    try {
      invert_ict(c, p, pt);
      return true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BadParams) throw;
      return false;
    }
  }
  const std::vector<double> slots = {pt.t, pt.x, pt.y};
  for (const auto& clause : c.region)
    if (!(clause.lhs_minus_rhs.eval<double>(slots, p) > 0.0)) return false;
  return true;
}

SeparableTriple chart_invert(const ChartRecord& c, const Params& p, const Vec3M& pt) {
  check_params(web_of(c).rule, p);
  if (c.irreducible) return invert_ict(c, p, pt);
  if (!region_contains(c, p, pt)) throw Error(ErrorCode::OutsideRegion, "point outside chart " + c.id());
  return invert_newton(c, p, pt);
}

double diagonality_residual(const ChartRecord& c, const Params& p, const SeparableTriple& s) {
  const Vec3M pt = chart_map(c, p, s);
  const auto j = chart_jacobian(c, p, s);
  const KSAlgebra ks = ks_algebra(chart_tensor(c, p));
  double worst = 0.0;
  for (const PolySymTensor* k : {&ks.g, &ks.k1, &ks.k2})
    worst = std::max(worst, pullback_offdiagonal(k->evaluate(pt), j));
  return worst;
}

std::vector<ReducibleCase> reducible_cases() {
  static const std::vector<ReducibleCase> cases = [] {
    const std::vector<std::pair<std::string, Vec3M>> hints = {
        {"e_t", e_t()}, {"e_x", e_x()}, {"e_y", e_y()}};
    std::vector<ReducibleCase> out;
    for (const auto& w : list_webs()) {
      if (w.irreducible) continue;
      const ConcircularTensor l = w.tensor(w.defaults);
      const bool constant = max_abs(l.w) == 0.0 && l.m == 0.0;
      for (const auto& [name, h] : hints) {
        try {
          decompose_reducible(l, h);
        } catch (const Error&) {
          continue;
        }
        out.push_back({w.id, constant ? "none" : name, h});
        if (constant) break;
      }
    }
    return out;
  }();
  return cases;
}

std::vector<int> identify_webs(const CanonicalCT& c) {
  const std::string fp = web_fingerprint(c);
  std::vector<int> out;
  for (const auto& w : list_webs()) {
    try {
      if (web_fingerprint(classify_ct(w.tensor(w.defaults))) == fp) out.push_back(w.id);
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace sepweb
