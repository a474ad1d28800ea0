#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "sepweb/catalog.hpp"
#include "sepweb/errors.hpp"

namespace sepweb::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// Locale-independent; the whole token must be consumed.
double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    parse_fail("not a number: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::array<double, 3> parse_triple(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) parse_fail("expected three comma-separated numbers, got '" + s + "'");
  return {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
}

Params parse_params(const std::string& s, Params p) {
  if (s.empty()) return p;
  for (const auto& item : split(s, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) parse_fail("expected name=value in '" + item + "'");
    const std::string name = item.substr(0, eq);
    const double v = parse_number(std::string_view(item).substr(eq + 1));
    if (name == "a") p.a = v;
    else if (name == "b") p.b = v;
    else if (name == "c") p.c = v;
    else parse_fail("unknown parameter '" + name + "'");
  }
  return p;
}

int coord_index(const std::string& name) {
  if (name == "u") return 0;
  if (name == "v") return 1;
  if (name == "w") return 2;
  parse_fail("unknown coordinate '" + name + "'");
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) parse_fail(std::string("field '") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) parse_fail(std::string("field '") + key + "' is not finite");
  return d;
}

Vec3M vec_of(const json& j, const char* what) {
  if (j.is_number()) {
    const double d = j.get<double>();
    return {d, d, d};
  }
  if (!j.is_array() || j.size() != 3) parse_fail(std::string(what) + " must be a number or a 3-array");
  Vec3M v;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number()) parse_fail(std::string(what) + " entries must be numbers");
    v[i] = j[i].get<double>();
  }
  return v;
}

json vec_json(const Vec3M& v) { return json::array({v.t, v.x, v.y}); }

json op_json(const Operator3& a) {
  json rows = json::array();
  for (const auto& r : a.m) rows.push_back(json::array({r[0], r[1], r[2]}));
  return rows;
}

json params_json(const Params& p) { return {{"a", p.a}, {"b", p.b}, {"c", p.c}}; }

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownChart:
    case ErrorCode::BadParams:
      return kUsage;
    case ErrorCode::NotSelfAdjoint:
      return kInvalidTensor;
    default:
      return kDomain;
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ConcircularTensor ct_from_json(const json& j) {
  if (!j.is_object()) parse_fail("tensor must be a JSON object");
  for (const char* key : {"A", "w", "m"})
    if (!j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  ConcircularTensor l;
  const json& a = j.at("A");
  if (a.is_number()) {
    l.A = a.get<double>() * Operator3::identity();
  } else {
    if (!a.is_array() || a.size() != 3) parse_fail("A must be a number or a 3x3 array");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!a[i].is_array() || a[i].size() != 3) parse_fail("A must be a number or a 3x3 array");
      for (std::size_t k = 0; k < 3; ++k) {
        if (!a[i][k].is_number()) parse_fail("A entries must be numbers");
        l.A.m[i][k] = a[i][k].get<double>();
      }
    }
  }
  l.w = vec_of(j.at("w"), "w");
  l.m = number_field(j, "m");
  if (!std::isfinite(max_abs(l.A)) || !std::isfinite(max_abs(l.w))) parse_fail("tensor entries must be finite");
  return l;
}

json ct_to_json(const ConcircularTensor& l) { return {{"A", op_json(l.A)}, {"w", vec_json(l.w)}, {"m", l.m}}; }

json classification_json(const ConcircularTensor& l) {
  if (!is_self_adjoint(l.A)) throw Error(ErrorCode::NotSelfAdjoint, "A is not g-self-adjoint");
  const CanonicalCT c = classify_ct(l);
  json out;
  out["schema_version"] = kSchemaVersion;
  out["class"] = kind_name(c.cls.kind);
  out["eps"] = c.cls.eps;
  out["k"] = c.cls.k;
  out["trivial"] = c.trivial;
  out["canonical"] = ct_to_json(canonical_tensor(c));
  out["origin_shift"] = vec_json(c.origin_shift);
  out["scale"] = c.scale;
  out["metric_shift"] = c.metric_shift;
  out["complement_shift"] = c.complement_shift;
  out["frame"] = op_json(c.frame);
  out["reducible"] = is_reducible(c);
  out["fingerprint"] = web_fingerprint(c);
  const std::vector<int> webs = identify_webs(c);
  if (webs.empty()) out["web"] = nullptr;
  else if (webs.size() == 1) out["web"] = webs.front();
  else out["web"] = webs;
  return out;
}

json verify_report_json(const VerifyReport& r, const VerifyOptions& opt) {
  json charts = json::array();
  for (const auto& c : r.charts) {
    json e;
    e["id"] = std::to_string(c.web) + "." + std::to_string(c.chart);
    e["web"] = c.web;
    e["chart"] = c.chart;
    e["samples"] = c.samples;
    e["pullback"] = c.pullback;
    e["killing"] = c.killing;
    e["diagonality"] = c.diagonality;
    // Non-finite values have no JSON spelling; null marks a failed inversion.
    e["roundtrip"] = std::isfinite(c.roundtrip) ? json(c.roundtrip) : json(nullptr);
    e["roundtrip_skipped"] = c.roundtrip_skipped;
    e["pass"] = c.pass;
    if (!c.error.empty()) e["error"] = c.error;
    charts.push_back(std::move(e));
  }
  json out;
  out["schema_version"] = kSchemaVersion;
  out["seed"] = opt.seed;
  out["samples"] = opt.samples;
  out["tol"] = opt.tol;
  out["web"] = opt.web ? json(*opt.web) : json(nullptr);
  out["charts"] = std::move(charts);
  out["summary"] = {{"total", r.passed + r.failed}, {"passed", r.passed}, {"failed", r.failed}};
  return out;
}

json catalog_json() {
  json webs = json::array();
  for (const auto& w : list_webs()) {
    json e;
    e["id"] = w.id;
    e["name"] = w.name;
    e["family"] = family_name(w.family);
    e["hm_label"] = w.hm_label ? json(*w.hm_label) : json(nullptr);
    e["km_label"] = w.km_label ? json(*w.km_label) : json(nullptr);
    e["param_rule"] = param_rule_text(w.rule);
    e["defaults"] = params_json(w.defaults);
    e["irreducible"] = w.irreducible;
    e["note"] = w.note;
    e["generator"] = ct_to_json(w.tensor(w.defaults));
    webs.push_back(std::move(e));
  }
  json charts = json::array();
  for (const auto& c : list_charts()) {
    json e;
    e["id"] = c.id();
    e["web"] = c.web_id;
    e["chart"] = c.chart_index;
    e["irreducible"] = c.irreducible;
    e["timelike"] = std::string(1, "uvw"[c.timelike]);
    json ranges = json::array();
    for (const auto& chain : c.ranges) {
      std::string s;
      for (const auto& t : chain) s += (s.empty() ? "" : " < ") + t;
      ranges.push_back(s);
    }
    e["ranges"] = std::move(ranges);
    json lets = json::array();
    for (const auto& [name, expr] : c.program.lets()) lets.push_back({{"name", name}, {"expr", expr.prefix()}});
    e["lets"] = std::move(lets);
    const auto& outs = c.program.outputs();
    e["map"] = json::array({outs[0].prefix(), outs[1].prefix(), outs[2].prefix()});
    e["metric"] = json::array({outs[3].prefix(), outs[4].prefix(), outs[5].prefix()});
    e["offset"] = json::array({c.offset[0].prefix(), c.offset[1].prefix(), c.offset[2].prefix()});
    json region = json::array();
    for (const auto& r : c.region) region.push_back({{"text", r.text}, {"expr", r.lhs_minus_rhs.prefix()}});
    e["region"] = std::move(region);
    charts.push_back(std::move(e));
  }
  json out;
  out["schema_version"] = kSchemaVersion;
  out["web_count"] = webs.size();
  out["chart_count"] = charts.size();
  out["webs"] = std::move(webs);
  out["charts"] = std::move(charts);
  return out;
}

std::vector<std::array<double, 6>> surface_grid(int web, int chart, const Params& p, int fixed_coord,
                                                double fixed_value, int grid) {
  const ChartRecord& c = find_chart(web, chart);
  if (grid < 1) parse_fail("grid must be positive");
  constexpr double kWindow = 3.0;

  // Interval of each free coordinate, and which free coordinates share one
  // (they are then ordered inside it).
  struct Slot {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    int group = -1;
  };
  std::array<Slot, 3> slot;
  int groups = 0;
  for (const auto& chain : c.chains) {
    double lo = -std::numeric_limits<double>::infinity();
    std::vector<int> pending;
    auto close = [&](double hi) {
      for (int k : pending) {
        slot[static_cast<std::size_t>(k)].lo = std::max(slot[static_cast<std::size_t>(k)].lo, lo);
        slot[static_cast<std::size_t>(k)].hi = std::min(slot[static_cast<std::size_t>(k)].hi, hi);
        slot[static_cast<std::size_t>(k)].group = groups;
      }
      if (!pending.empty()) ++groups;
      pending.clear();
    };
    for (const auto& t : chain) {
      if (t.coord >= 0 && t.coord != fixed_coord) {
        pending.push_back(t.coord);
        continue;
      }
      double v = 0.0;
      if (t.coord >= 0) v = t.absolute ? std::fabs(fixed_value) : fixed_value;
      else if (t.infinity != 0) v = t.infinity * std::numeric_limits<double>::infinity();
      else v = t.bound.eval<double>({}, p);
      close(v);
      lo = v;
    }
    close(std::numeric_limits<double>::infinity());
  }

  std::vector<int> free;
  for (int k = 0; k < 3; ++k)
    if (k != fixed_coord) free.push_back(k);
  for (int k : free) {
    Slot& s = slot[static_cast<std::size_t>(k)];
    if (s.group < 0) s.group = groups++;
    if (std::isinf(s.lo) && std::isinf(s.hi)) {
      s.lo = -kWindow;
      s.hi = kWindow;
    } else if (std::isinf(s.lo)) {
      s.lo = s.hi - kWindow;
    } else if (std::isinf(s.hi)) {
      s.hi = s.lo + kWindow;
    }
    if (!(s.lo < s.hi)) throw Error(ErrorCode::RangeViolation, "fixed value leaves an empty slice");
  }

  const Slot& s0 = slot[static_cast<std::size_t>(free[0])];
  const Slot& s1 = slot[static_cast<std::size_t>(free[1])];
  const bool nested = s0.group == s1.group;
  std::vector<std::array<double, 6>> rows;
  rows.reserve(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double fi = (i + 0.5) / grid;
      const double fj = (j + 0.5) / grid;
      std::array<double, 3> q{};
      q[static_cast<std::size_t>(fixed_coord)] = fixed_value;
      if (nested) {
        // Both lie in one interval and must keep the chain order (s0 first).
        const double first = s0.lo + (s0.hi - s0.lo) * fi;
        q[static_cast<std::size_t>(free[0])] = first;
        q[static_cast<std::size_t>(free[1])] = first + (s0.hi - first) * fj;
        const SeparableTriple probe{q[0], q[1], q[2]};
        if (!in_range(c, p, probe)) {
          const double second = s0.lo + (s0.hi - s0.lo) * fi;
          q[static_cast<std::size_t>(free[1])] = second;
          q[static_cast<std::size_t>(free[0])] = second + (s0.hi - second) * fj;
        }
      } else {
        q[static_cast<std::size_t>(free[0])] = s0.lo + (s0.hi - s0.lo) * fi;
        q[static_cast<std::size_t>(free[1])] = s1.lo + (s1.hi - s1.lo) * fj;
      }
      const SeparableTriple s{q[0], q[1], q[2]};
      const Vec3M pt = chart_map(c, p, s);
      rows.push_back({s.u, s.v, s.w, pt.t, pt.x, pt.y});
    }
  }
  return rows;
}

namespace {

struct Globals {
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string format = "json";
  std::string output;
};

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) parse_fail("cannot open '" + path + "' for writing");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void emit_json(const json& j, const Globals& g, std::ostream& out) {
  Sink sink(g.output, out);
  sink.stream() << j.dump(2) << "\n";
}

int cmd_classify(const Globals& g, const std::string& input, const std::string& inline_json, std::ostream& out,
                 std::ostream& err) {
  json doc;
  try {
    if (!inline_json.empty()) {
      doc = json::parse(inline_json);
    } else if (input == "-" || input.empty()) {
      doc = json::parse(std::cin);
    } else {
      std::ifstream f(input);
      if (!f) parse_fail("cannot read '" + input + "'");
      doc = json::parse(f);
    }
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  const ConcircularTensor l = ct_from_json(doc);
  json res;
  try {
    res = classification_json(l);
  } catch (const Error& e) {
    // Any classification failure is a defect of the input tensor.
    err << e.what() << "\n";
    return kInvalidTensor;
  }
  if (g.format == "json") {
    emit_json(res, g, out);
  } else {
    Sink sink(g.output, out);
    auto& o = sink.stream();
    o << "class " << res["class"].get<std::string>() << " eps=" << res["eps"] << " k=" << res["k"]
      << (res["reducible"].get<bool>() ? " reducible" : " irreducible") << "\n";
    o << "web " << res["web"].dump() << "\n";
    o << "fingerprint " << res["fingerprint"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_chart(const Globals& g, int web, int chart, const std::string& params, const std::string& triple,
              const std::string& point, bool forward, bool invert, std::ostream& out) {
  const ChartRecord& c = find_chart(web, chart);
  const Params p = parse_params(params, default_params(web));
  check_params(find_web(web).rule, p);
  if (forward && invert) parse_fail("--forward and --invert are exclusive");
  if (!forward && !invert) {
    forward = !triple.empty();
    invert = !point.empty();
  }
  if (forward == invert) parse_fail("give exactly one of --triple or --point");
  json res;
  res["schema_version"] = kSchemaVersion;
  res["chart"] = c.id();
  res["params"] = params_json(p);
  if (forward) {
    if (triple.empty()) parse_fail("--forward needs --triple");
    const auto q = parse_triple(triple);
    const SeparableTriple s{q[0], q[1], q[2]};
    const Vec3M pt = chart_map(c, p, s);
    const auto metric = chart_metric_eval(c, p, s);
    res["direction"] = "forward";
    res["triple"] = {s.u, s.v, s.w};
    res["t"] = pt.t;
    res["x"] = pt.x;
    res["y"] = pt.y;
    res["metric"] = {metric[0], metric[1], metric[2]};
  } else {
    if (point.empty()) parse_fail("--invert needs --point");
    const auto q = parse_triple(point);
    const Vec3M pt{q[0], q[1], q[2]};
    const SeparableTriple s = chart_invert(c, p, pt);
    res["direction"] = "invert";
    res["point"] = {pt.t, pt.x, pt.y};
    res["u"] = s.u;
    res["v"] = s.v;
    res["w"] = s.w;
    res["in_range"] = in_range(c, p, s);
  }
  if (g.format == "json") {
    emit_json(res, g, out);
  } else {
    Sink sink(g.output, out);
    if (forward)
      sink.stream() << "t=" << fmt(res["t"]) << " x=" << fmt(res["x"]) << " y=" << fmt(res["y"]) << "\n";
    else
      sink.stream() << "u=" << fmt(res["u"]) << " v=" << fmt(res["v"]) << " w=" << fmt(res["w"]) << "\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, int samples, std::optional<int> web, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = g.seed;
  opt.tol = g.tol;
  opt.samples = samples;
  opt.web = web;
  if (samples < 1) parse_fail("--samples must be positive");
  if (web) find_web(*web);
  const VerifyReport r = run_verify(opt);
  if (g.format == "json") {
    emit_json(verify_report_json(r, opt), g, out);
  } else {
    Sink sink(g.output, out);
    auto& o = sink.stream();
    char line[200];
    std::snprintf(line, sizeof line, "%-6s %9s %9s %9s %9s  %s\n", "chart", "pullback", "killing", "diag",
                  "roundtrip", "result");
    o << line;
    for (const auto& c : r.charts) {
      const std::string id = std::to_string(c.web) + "." + std::to_string(c.chart);
      char rt[32];
      if (c.roundtrip_skipped) std::snprintf(rt, sizeof rt, "%9s", "skipped");
      else std::snprintf(rt, sizeof rt, "%9.2e", c.roundtrip);
      std::snprintf(line, sizeof line, "%-6s %9.2e %9.2e %9.2e %s  %s\n", id.c_str(), c.pullback, c.killing,
                    c.diagonality, rt, c.pass ? "pass" : "FAIL");
      o << line;
      if (!c.error.empty()) o << "       " << c.error << "\n";
    }
    o << r.passed << "/" << (r.passed + r.failed) << " charts pass\n";
  }
  return r.failed == 0 ? kOk : kVerifyFailed;
}

int cmd_export(const Globals& g, const std::string& kind, std::optional<int> web, std::optional<int> chart,
               const std::string& fix, int grid, const std::string& params, std::ostream& out) {
  if (kind == "catalog") {
    emit_json(catalog_json(), g, out);
    return kOk;
  }
  if (kind != "surface") parse_fail("export kind must be catalog or surface");
  if (!web || !chart) parse_fail("export surface needs a web and a chart");
  find_chart(*web, *chart);
  const Params p = parse_params(params, default_params(*web));
  check_params(find_web(*web).rule, p);
  const auto eq = fix.find('=');
  if (eq == std::string::npos) parse_fail("--fix expects coord=value");
  const int coord = coord_index(fix.substr(0, eq));
  const double value = parse_number(std::string_view(fix).substr(eq + 1));
  const auto rows = surface_grid(*web, *chart, p, coord, value, grid);
  Sink sink(g.output, out);
  auto& o = sink.stream();
  o << "u,v,w,t,x,y\n";
  for (const auto& r : rows)
    o << fmt(r[0]) << "," << fmt(r[1]) << "," << fmt(r[2]) << "," << fmt(r[3]) << "," << fmt(r[4]) << ","
      << fmt(r[5]) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separable webs and concircular tensors on 3-dimensional Minkowski space", "sepweb"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "Residual tolerance")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("-o,--output", g.output, "Write output to a file");

  auto* classify = app.add_subcommand("classify", "Classify a concircular tensor given as JSON");
  std::string ct_path;
  std::string ct_inline;
  classify->add_option("input", ct_path, "JSON file, or - for stdin");
  classify->add_option("--json", ct_inline, "Tensor JSON given inline");

  auto* chart = app.add_subcommand("chart", "Evaluate or invert a catalog chart");
  int web = 0;
  int chart_no = 0;
  std::string params;
  std::string triple;
  std::string point;
  bool forward = false;
  bool invert = false;
  chart->add_option("web", web)->required();
  chart->add_option("chart", chart_no)->required();
  chart->add_option("--params", params, "Parameters, e.g. a=1,b=2");
  chart->add_option("--triple", triple, "Separable coordinates u,v,w");
  chart->add_option("--point", point, "Cartesian point t,x,y");
  chart->add_flag("--forward", forward);
  chart->add_flag("--invert", invert);

  auto* verify = app.add_subcommand("verify", "Run the property suite over the catalog");
  int samples = 100;
  std::optional<int> verify_web;
  verify->add_option("--samples", samples)->capture_default_str();
  verify->add_option("--web", verify_web, "Only check this web");

  auto* exp = app.add_subcommand("export", "Export the catalog or a coordinate surface");
  std::string kind;
  std::optional<int> exp_web;
  std::optional<int> exp_chart;
  std::string fix;
  int grid = 20;
  std::string exp_params;
  exp->add_option("kind", kind, "catalog or surface")->required();
  exp->add_option("web", exp_web);
  exp->add_option("chart", exp_chart);
  exp->add_option("--fix", fix, "Fixed coordinate, e.g. u=1");
  exp->add_option("--grid", grid)->capture_default_str();
  exp->add_option("--params", exp_params);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(g, ct_path, ct_inline, out, err);
    if (*chart) return cmd_chart(g, web, chart_no, params, triple, point, forward, invert, out);
    if (*verify) return cmd_verify(g, samples, verify_web, out);
    return cmd_export(g, kind, exp_web, exp_chart, fix, grid, exp_params, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.code());
  }
}

}  // namespace sepweb::cli
