#include "sepweb/concircular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sepweb/errors.hpp"

namespace sepweb {

Operator3 evaluate_ct(const ConcircularTensor& l, const Vec3M& p) {
  return l.A + outer(l.w, p) + outer(p, l.w) + l.m * outer(p, p);
}

ConcircularTensor translate(const ConcircularTensor& l, const Vec3M& o) {
  ConcircularTensor r;
  r.A = evaluate_ct(l, o);
  r.w = l.w + l.m * o;
  r.m = l.m;
  return r;
}

const char* kind_name(CTKind kind) {
  switch (kind) {
    case CTKind::Cartesian: return "cartesian";
    case CTKind::Central: return "central";
    case CTKind::NonNullAxial: return "non-null-axial";
    case CTKind::NullAxial: return "null-axial";
  }
  return "unknown";
}

namespace {

constexpr double kZeroTol = 1e-10;

std::vector<std::size_t> block_offsets(const MetricJordanForm& f) {
  std::vector<std::size_t> off;
  std::size_t k = 0;
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    off.push_back(k);
    k += static_cast<std::size_t>(f.blocks[b].size);
  }
  return off;
}

// Eigenvalue moved to zero by the metric shift: the nilpotent block, the real part of
// a complex pair, or the smallest simple eigenvalue.
double zero_value(const std::vector<JordanBlockSpec>& blocks) {
  for (const auto& b : blocks)
    if (b.size >= 2) return b.eigenvalue.real();
  for (const auto& b : blocks)
    if (b.is_complex()) return b.eigenvalue.real();
  double z = blocks.front().eigenvalue.real();
  for (const auto& b : blocks) z = std::min(z, b.eigenvalue.real());
  return z;
}

Operator3 basis_matrix(const std::vector<Vec3M>& basis) {
  return Operator3::from_columns(basis[0], basis[1], basis[2]);
}

// Fills frame/canonical_A/complement from a metric-Jordan form of the working operator.
void adopt_form(CanonicalCT& c, const Operator3& work, const MetricJordanForm& form) {
  const Operator3 t = standard_realization(form);
  c.frame = basis_matrix(form.basis) * inverse(t);
  const double zero = zero_value(form.blocks);
  c.canonical_A = inverse(c.frame) * work * c.frame - zero * Operator3::identity();
  c.metric_shift -= zero;
  c.complement.blocks = form.blocks;
  for (auto& b : c.complement.blocks) b.eigenvalue -= zero;
  c.complement.basis = {t.column(0), t.column(1), t.column(2)};
  c.complement_projector = Operator3::identity();
}

void classify_central(const ConcircularTensor& l, CanonicalCT& c) {
  c.cls = {CTKind::Central, 1, 0};
  c.origin_shift = (-1.0 / l.m) * l.w;
  c.scale = 1.0 / l.m;
  const ConcircularTensor lo = translate(l, c.origin_shift);
  const Operator3 work = c.scale * lo.A;
  adopt_form(c, work, metric_jordan_form(work));
  c.canonical_w = {};
  c.canonical_m = 1.0;
}

void classify_cartesian(const ConcircularTensor& l, CanonicalCT& c) {
  c.cls = {CTKind::Cartesian, 1, 0};
  const double mean = trace(l.A) / 3.0;
  const Operator3 dev = l.A - mean * Operator3::identity();
  if (max_abs(dev) <= kZeroTol * std::max(1.0, std::fabs(mean))) {
    c.trivial = true;
    c.metric_shift = -mean;
    c.canonical_A = Operator3{};
    c.complement_projector = Operator3::identity();
    c.complement.blocks = {{1, -1, {0.0, 0.0}}, {1, 1, {0.0, 0.0}}, {1, 1, {0.0, 0.0}}};
    c.complement.basis = {e_t(), e_x(), e_y()};
    return;
  }
  adopt_form(c, l.A, metric_jordan_form(l.A));
}

void classify_nonnull(const ConcircularTensor& l, CanonicalCT& c, double ww) {
  const int eps = ww < 0 ? -1 : 1;
  c.cls = {CTKind::NonNullAxial, eps, 1};
  const double as = 1.0 / std::sqrt(std::fabs(ww));
  const Vec3M e1 = as * l.w;
  const Vec3M ae1 = l.A * e1;
  const double h = dot(ae1, e1);
  c.origin_shift = (-eps * as) * (ae1 - (eps * h) * e1);
  c.scale = as;
  c.metric_shift = -eps * as * h;
  const ConcircularTensor lo = translate(l, c.origin_shift);
  const Operator3 work = as * lo.A + c.metric_shift * Operator3::identity();

  // Lift e1 far away from the rest of the spectrum so the form isolates it.
  const double lift = 10.0 * (1.0 + max_abs(work));
  const Operator3 m = work + (lift * eps) * outer(e1, e1);
  MetricJordanForm form = metric_jordan_form(m);
  const std::vector<std::size_t> off = block_offsets(form);
  std::size_t lifted = form.blocks.size();
  for (std::size_t b = 0; b < form.blocks.size(); ++b) {
    const auto& blk = form.blocks[b];
    if (!blk.is_complex() && blk.size == 1 && std::fabs(blk.eigenvalue.real() - lift) < 1e-6 * lift) lifted = b;
  }
  if (lifted == form.blocks.size())
    throw Error(ErrorCode::DegenerateAmbiguity, "axis block not isolated");
  form.basis[off[lifted]] = e1;

  const Operator3 t = standard_realization(form);
  c.frame = basis_matrix(form.basis) * inverse(t);
  std::vector<JordanBlockSpec> rest;
  std::vector<Vec3M> rest_basis;
  for (std::size_t b = 0; b < form.blocks.size(); ++b) {
    if (b == lifted) continue;
    rest.push_back(form.blocks[b]);
    for (int j = 0; j < form.blocks[b].size; ++j)
      rest_basis.push_back(t.column(off[b] + static_cast<std::size_t>(j)));
  }
  const double zero = zero_value(rest);
  const Vec3M axis = eps < 0 ? e_t() : e_y();
  c.complement_projector = Operator3::identity() - static_cast<double>(eps) * outer(axis, axis);
  c.complement_shift = -zero;
  c.canonical_A = inverse(c.frame) * work * c.frame - zero * c.complement_projector;
  for (auto& b : rest) b.eigenvalue -= zero;
  c.complement.blocks = rest;
  c.complement.basis = rest_basis;
  c.canonical_w = axis;
  c.canonical_m = 0.0;
  c.axis = {axis};
}

void classify_null(const ConcircularTensor& l, CanonicalCT& c) {
  const Vec3M w = l.w;
  const Vec3M aw = l.A * w;
  const double waw = dot(w, aw);
  const double scale_ref = euclid_dot(w, w) * std::max(1.0, max_abs(l.A));
  const Operator3& A = l.A;
  if (std::fabs(waw) > kZeroTol * scale_ref) {
    const double a = std::cbrt(1.0 / waw);
    const Vec3M e1 = a * w;
    const Vec3M ae1 = A * e1;
    const double beta = -a * dot(ae1, ae1) / (2.0 * dot(ae1, e1));
    const Vec3M e2 = a * ae1 + beta * e1;
    const Vec3M e3 = g_orthogonal_complement(e1, e2);
    const double b = -a * dot(A * e3, e3);
    const double gamma = -a * dot(A * e2, e2) / 2.0;
    const Vec3M o = -a * (A * e2) - gamma * e1 - b * e2;
    c.cls = {CTKind::NullAxial, 1, 2};
    c.scale = a;
    c.metric_shift = b;
    c.origin_shift = o;
    const Operator3 t = Operator3::from_columns(d_eta(), d_xi(), e_y());
    c.frame = Operator3::from_columns(e1, e2, e3) * inverse(t);
    c.complement.blocks = {{1, 1, {0.0, 0.0}}};
    c.complement.basis = {e_y()};
    c.complement_projector = outer(e_y(), e_y());
    c.axis = {d_eta(), d_xi()};
  } else {
    const double awaw = dot(aw, aw);
    if (awaw <= kZeroTol * scale_ref * std::max(1.0, max_abs(l.A)))
      throw Error(ErrorCode::NonOrthogonalCT, "null axial tensor with Aw parallel to w");
    const double a = std::pow(awaw, -0.25);
    const Vec3M e1 = a * w;
    const Vec3M e2 = a * (A * e1);
    const double b = -a * dot(A * e2, e2);
    const Vec3M pre = a * (A * e2) + b * e2;
    const double gamma = -dot(pre, pre) / 2.0;
    const Vec3M e3 = pre + gamma * e1;
    const double delta = -a * dot(A * e3, e3) / 2.0;
    const Vec3M o = -a * (A * e3) - b * e3 - delta * e1;
    c.cls = {CTKind::NullAxial, 1, 3};
    c.scale = a;
    c.metric_shift = b;
    c.origin_shift = o;
    const Operator3 t = Operator3::from_columns(d_eta(), e_y(), d_xi());
    c.frame = Operator3::from_columns(e1, e2, e3) * inverse(t);
    c.complement_projector = Operator3{};
    c.axis = {d_eta(), e_y(), d_xi()};
  }
  const ConcircularTensor lo = translate(l, c.origin_shift);
  const Operator3 work = c.scale * lo.A + c.metric_shift * Operator3::identity();
  c.canonical_A = inverse(c.frame) * work * c.frame;
  c.canonical_w = d_eta();
  c.canonical_m = 0.0;
}

}  // namespace

CanonicalCT classify_ct(const ConcircularTensor& l) {
  CanonicalCT c;
  const double wscale = max_abs(l.w);
  const double ascale = std::max(1.0, max_abs(l.A));
  if (std::fabs(l.m) > kZeroTol * ascale) {
    classify_central(l, c);
  } else if (wscale <= kZeroTol * ascale) {
    classify_cartesian(l, c);
  } else {
    const double ww = dot(l.w, l.w);
    if (std::fabs(ww) > kZeroTol * euclid_dot(l.w, l.w)) {
      classify_nonnull(l, c, ww);
    } else {
      classify_null(l, c);
    }
  }
  return c;
}

ConcircularTensor canonical_tensor(const CanonicalCT& c) {
  return {c.canonical_A, c.canonical_w, c.canonical_m};
}

ConcircularTensor apply_equivalence(const ConcircularTensor& l, const CanonicalCT& c) {
  const ConcircularTensor lo = translate(l, c.origin_shift);
  const Operator3 finv = inverse(c.frame);
  ConcircularTensor r;
  r.A = c.scale * (finv * lo.A * c.frame) + c.metric_shift * Operator3::identity() +
        c.complement_shift * c.complement_projector;
  r.w = c.scale * (finv * lo.w);
  r.m = c.scale * lo.m;
  return r;
}

Vec3M from_canonical(const CanonicalCT& c, const Vec3M& q) { return c.origin_shift + c.frame * q; }

Vec3M to_canonical(const CanonicalCT& c, const Vec3M& p) {
  return inverse(c.frame) * (p - c.origin_shift);
}

bool is_reducible(const CanonicalCT& c) {
  if (c.cls.kind == CTKind::Cartesian) return true;
  if (c.cls.kind == CTKind::NullAxial) return false;
  const auto& bl = c.complement.blocks;
  double scale = 1.0;
  for (const auto& b : bl) scale = std::max(scale, std::abs(b.eigenvalue));
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (std::size_t j = i + 1; j < bl.size(); ++j) {
      if (bl[i].is_complex() || bl[j].is_complex()) continue;
      if (std::fabs(bl[i].eigenvalue.real() - bl[j].eigenvalue.real()) <= 1e-8 * scale) return true;
    }
  return false;
}

bool is_reducible(const ConcircularTensor& l) {
  if (max_abs(l.w) == 0.0 && l.m == 0.0) return true;
  return is_reducible(classify_ct(l));
}

namespace {

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

double poly_eval(const std::vector<double>& coeffs, double z) {
  double r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * z + *it;
  return r;
}

CharPolySet char_polys(const CanonicalCT& c, const Vec3M& p) {
  CharPolySet s;
  s.B = {1.0};
  const auto& bl = c.complement.blocks;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    const auto& b = bl[i];
    if (b.is_complex()) {
      const double al = b.eigenvalue.real();
      const double be = b.eigenvalue.imag();
      s.B = poly_mul(s.B, {al * al + be * be, -2.0 * al, 1.0});
      ++i;
      continue;
    }
    for (int k = 0; k < b.size; ++k) s.B = poly_mul(s.B, {-b.eigenvalue.real(), 1.0});
  }
  s.D_dim = 4 - static_cast<int>(s.B.size());
  s.p_at_point = char_poly(evaluate_ct(canonical_tensor(c), p));
  return s;
}

Cubic ct_char_poly(const ConcircularTensor& l, const Vec3M& p) {
  // det(z - A - U W^T) with U = [w, r], W^T = [<r, .>, <w + m r, .>]. Expanding
  // through adj(z - A) keeps the |r|^4 terms from cancelling in floating point.
  const Operator3& a = l.A;
  const Cubic b = char_poly(a);
  const double e1 = -b.c[2];
  const double e2 = b.c[1];
  const Operator3 a1 = a - e1 * Operator3::identity();
  const Operator3 a2 = a * a - e1 * a + e2 * Operator3::identity();
  const Vec3M& w = l.w;
  // <x, M(z) y> summed over the three update terms, per power of z.
  auto form = [&](const Operator3& m) {
    return dot(p, m * w) + dot(w, m * p) + l.m * dot(p, m * p);
  };
  const double t2 = form(Operator3::identity());
  const double t1 = form(a1);
  const double t0 = form(a2);
  const Vec3M cu = cross(w, p);
  const Vec3M cw = cross(Vec3M{-p.t, p.x, p.y}, Vec3M{-w.t, w.x, w.y});
  const double q1 = euclid_dot(cu, cw);
  const double q0 = -euclid_dot(cu, a * cw);
  Cubic r;
  r.c[2] = b.c[2] - t2;
  r.c[1] = b.c[1] - t1 + q1;
  r.c[0] = b.c[0] - t0 + q0;
  return r;
}

PointSpectrum point_eigenvalues(const ConcircularTensor& l, const Vec3M& p) {
  const Operator3 lp = evaluate_ct(l, p);
  const CubicRoots r = cubic_roots(ct_char_poly(l, p));
  PointSpectrum s;
  if (r.n_real == 3) {
    s.values = {r.real[2], r.real[1], r.real[0]};
    return s;
  }
  const double scale = std::max(1.0, max_abs(lp));
  if (r.pair.imag() > 1e-9 * scale) {
    s.complex = true;
    s.values = {r.real[0], r.pair.real(), r.pair.real()};
    return s;
  }
  std::array<double, 3> v{r.real[0], r.pair.real(), r.pair.real()};
  std::sort(v.begin(), v.end(), std::greater<>());
  s.values = v;
  return s;
}

namespace {

std::string token(const JordanBlockSpec& b, bool flip) {
  if (b.is_complex()) return "C";
  if (b.size == 1) return b.sign < 0 ? "J-1" : "J+1";
  if (b.size == 2) return (b.sign * (flip ? -1 : 1)) < 0 ? "J2-" : "J2+";
  return "J3";
}

// Ordered eigenvalue pattern, e.g. "J-1<J+1=J+1".
std::string ordered_pattern(const std::vector<JordanBlockSpec>& blocks, bool reverse) {
  std::vector<std::pair<double, std::string>> items;
  bool has_complex = false;
  double scale = 1.0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.is_complex()) {
      has_complex = true;
      ++i;
      continue;
    }
    const double v = reverse ? -b.eigenvalue.real() : b.eigenvalue.real();
    scale = std::max(scale, std::fabs(v));
    items.emplace_back(v, token(b, reverse));
  }
  std::sort(items.begin(), items.end());
  std::vector<std::vector<std::string>> groups;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 || std::fabs(items[i].first - items[i - 1].first) > 1e-8 * scale) groups.emplace_back();
    groups.back().push_back(items[i].second);
  }
  std::ostringstream os;
  if (has_complex) os << "C|";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto grp = groups[g];
    std::sort(grp.begin(), grp.end());
    if (g) os << '<';
    for (std::size_t k = 0; k < grp.size(); ++k) os << (k ? "=" : "") << grp[k];
  }
  return os.str();
}

std::string unordered_pattern(const std::vector<JordanBlockSpec>& blocks) {
  const std::string fwd = ordered_pattern(blocks, false);
  std::vector<std::string> groups;
  std::string cur;
  for (char ch : fwd) {
    if (ch == '<') {
      groups.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  groups.push_back(cur);
  std::sort(groups.begin(), groups.end());
  std::string r;
  for (std::size_t i = 0; i < groups.size(); ++i) r += (i ? "|" : "") + groups[i];
  return r;
}

}  // namespace

std::string web_fingerprint(const CanonicalCT& c) {
  switch (c.cls.kind) {
    case CTKind::Cartesian:
      if (c.trivial) return "cartesian trivial";
      return "cartesian " + unordered_pattern(c.complement.blocks);
    case CTKind::Central:
      return "central " + ordered_pattern(c.complement.blocks, false);
    case CTKind::NonNullAxial: {
      const std::string a = ordered_pattern(c.complement.blocks, false);
      const std::string b = ordered_pattern(c.complement.blocks, true);
      return std::string("non-null-axial eps=") + (c.cls.eps < 0 ? "-1 " : "+1 ") + std::min(a, b);
    }
    case CTKind::NullAxial:
      return "null-axial k=" + std::to_string(c.cls.k);
  }
  return "";
}

}  // namespace sepweb
