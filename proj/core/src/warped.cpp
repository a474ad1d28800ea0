#include "sepweb/warped.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sepweb/errors.hpp"
#include "sepweb/linalg.hpp"
#include "sepweb/metric_jordan.hpp"

namespace sepweb {

namespace {

constexpr double kDegenerateTol = 1e-12;

template <class T>
using V3 = std::array<T, 3>;

template <class T>
T dot3(const V3<T>& u, const V3<T>& v) {
  return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

template <class T>
V3<T> lift(const Vec3M& v) {
  return {T(v.t), T(v.x), T(v.y)};
}

template <class T>
V3<T> axpy(const T& s, const Vec3M& v, V3<T> acc) {
  acc[0] += s * v.t;
  acc[1] += s * v.x;
  acc[2] += s * v.y;
  return acc;
}

template <class T>
T dot_mixed(const Vec3M& a, const V3<T>& v) {
  return -a.t * v[0] + a.x * v[1] + a.y * v[2];
}

Vec3M to_vec(const V3<double>& v) { return {v[0], v[1], v[2]}; }

// g-orthogonal projection onto span(basis) (nondegenerate).
Vec3M project(const std::vector<Vec3M>& basis, const Vec3M& v) {
  if (basis.empty()) return {};
  if (basis.size() == 1) return (dot(basis[0], v) / dot(basis[0], basis[0])) * basis[0];
  if (basis.size() == 3) return v;
  const double g00 = dot(basis[0], basis[0]);
  const double g01 = dot(basis[0], basis[1]);
  const double g11 = dot(basis[1], basis[1]);
  const double det = g00 * g11 - g01 * g01;
  if (std::fabs(det) < kDegenerateTol) throw Error(ErrorCode::DegenerateSubspace, "degenerate plane");
  const double h0 = dot(basis[0], v);
  const double h1 = dot(basis[1], v);
  return ((g11 * h0 - g01 * h1) / det) * basis[0] + ((g00 * h1 - g01 * h0) / det) * basis[1];
}

Operator3 projector(const std::vector<Vec3M>& basis) {
  Operator3 p;
  for (int j = 0; j < 3; ++j) {
    Vec3M e{};
    e[static_cast<std::size_t>(j)] = 1.0;
    const Vec3M c = project(basis, e);
    for (int i = 0; i < 3; ++i) p.m[i][j] = c[static_cast<std::size_t>(i)];
  }
  return p;
}

double gram_det(const std::vector<Vec3M>& v) {
  if (v.size() == 1) return dot(v[0], v[0]);
  if (v.size() == 2) return dot(v[0], v[0]) * dot(v[1], v[1]) - dot(v[0], v[1]) * dot(v[0], v[1]);
  return det(Operator3::from_columns(v[0], v[1], v[2])) * det(Operator3::from_columns(v[0], v[1], v[2])) * -1.0;
}

bool is_zero(const Vec3M& v) { return max_abs(v) == 0.0; }

// Basis of the g-orthogonal complement of span(v).
std::vector<Vec3M> complement(const std::vector<Vec3M>& v) {
  if (v.size() == 2) return {g_orthogonal_complement(v[0], v[1])};
  const Vec3M n{-v[0].t, v[0].x, v[0].y};  // Euclidean normal of v-perp
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::fabs(n[i]) < std::fabs(n[k])) k = i;
  Vec3M e{};
  e[k] = 1.0;
  Vec3M u1 = cross(n, e);
  u1 = u1 / euclid_norm(u1);
  Vec3M u2 = cross(n, u1);
  u2 = u2 / euclid_norm(u2);
  return {u1, u2};
}

Vec3M min_norm_pbar(const std::vector<Vec3M>& v0, const Vec3M& a) {
  // Euclidean Gram-Schmidt on V0, then the minimum-norm solution of <p, a> = 1.
  std::vector<Vec3M> h;
  for (Vec3M x : v0) {
    for (const auto& y : h) x = x - euclid_dot(x, y) * y;
    const double n = euclid_norm(x);
    if (n > 1e-14) h.push_back(x / n);
  }
  double s = 0.0;
  Vec3M p{};
  for (const auto& y : h) {
    const double g = dot(y, a);
    s += g * g;
    p += g * y;
  }
  if (s < kDegenerateTol) throw Error(ErrorCode::NoCanonicalPoint, "<p, a> = 1 has no solution in V0");
  return p / s;
}

}  // namespace

SphereSpec sphere_from_triple(const Vec3M& pbar, const std::vector<Vec3M>& v, const Vec3M& a) {
  if (v.empty() || std::fabs(gram_det(v)) < kDegenerateTol)
    throw Error(ErrorCode::DegenerateSubspace, "sphere subspace is degenerate");
  SphereSpec s;
  s.basis = v;
  s.a = a;
  const double aa = dot(a, a);
  if (is_zero(a)) {
    s.kind = SphereKind::Flat;
    s.base = pbar;
  } else if (std::fabs(aa) > kDegenerateTol * euclid_dot(a, a)) {
    s.kind = SphereKind::ConstCurv;
    s.curvature = aa;
    s.base = pbar - a / aa;
  } else {
    s.kind = SphereKind::Parabolic;
    s.base = pbar;
  }
  return s;
}

WarpedProduct make_warped_product(const InitialData& data, const Vec3M& origin) {
  WarpedProduct wp;
  wp.origin = origin;
  wp.data = data;
  wp.sphere = sphere_from_triple(data.pbar, data.v1, data.a);
  switch (wp.sphere.kind) {
    case SphereKind::Flat: wp.form = MapForm::Cartesian; break;
    case SphereKind::ConstCurv: {
      wp.form = MapForm::NonNull;
      const bool a_timelike = wp.sphere.curvature < 0;
      const bool v1_timelike = data.v1.size() == 1 && dot(data.v1[0], data.v1[0]) < 0;
      wp.fiber_disconnected = a_timelike || v1_timelike;
      break;
    }
    case SphereKind::Parabolic: {
      wp.form = MapForm::Null;
      const Vec3M* best = nullptr;
      for (const auto& u : data.v0)
        if (best == nullptr || std::fabs(dot(data.a, u)) > std::fabs(dot(data.a, *best))) best = &u;
      if (best == nullptr || std::fabs(dot(data.a, *best)) < kDegenerateTol)
        throw Error(ErrorCode::DegenerateSubspace, "no partner for the lightlike a");
      const Vec3M u = *best / dot(data.a, *best);
      wp.b = u - (0.5 * dot(u, u)) * data.a;
      break;
    }
  }
  return wp;
}

double warping(const WarpedProduct& wp, const Vec3M& p0) {
  return wp.form == MapForm::Cartesian ? 1.0 : dot(wp.data.a, p0);
}

template <class T>
std::array<T, 3> sphere_point(const WarpedProduct& wp, const std::array<T, 3>& coords) {
  const int n0 = wp.dim0();
  V3<T> q{T(0.0), T(0.0), T(0.0)};
  for (int j = 0; j < wp.dim1(); ++j)
    q = axpy(coords[static_cast<std::size_t>(n0 + j)], wp.data.v1[static_cast<std::size_t>(j)], q);
  const SphereSpec& s = wp.sphere;
  V3<T> base = lift<T>(s.base);
  switch (s.kind) {
    case SphereKind::Flat:
      for (int i = 0; i < 3; ++i) base[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(i)];
      return base;
    case SphereKind::ConstCurv: {
      using std::sqrt;
      const double aa = s.curvature;
      const double sa = aa < 0 ? -1.0 : 1.0;
      const T qq = dot3(q, q);
      const T alpha = sa * sqrt(T(1.0 / std::fabs(aa)) - sa * qq);
      const Vec3M ahat = s.a / std::sqrt(std::fabs(aa));
      V3<T> r = axpy(alpha, ahat, base);
      for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(i)];
      return r;
    }
    case SphereKind::Parabolic: {
      const T qq = dot3(q, q);
      V3<T> r = axpy(T(-0.5) * qq, s.a, base);
      for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] += q[static_cast<std::size_t>(i)];
      return r;
    }
  }
  return base;
}

template <class T>
std::array<T, 3> wp_chart(const WarpedProduct& wp, const std::array<T, 3>& coords) {
  V3<T> p0{T(0.0), T(0.0), T(0.0)};
  for (int i = 0; i < wp.dim0(); ++i)
    p0 = axpy(coords[static_cast<std::size_t>(i)], wp.data.v0[static_cast<std::size_t>(i)], p0);
  const V3<T> p1 = sphere_point(wp, coords);
  V3<T> r = lift<T>(wp.origin);
  const Vec3M& a = wp.data.a;
  switch (wp.form) {
    case MapForm::Cartesian:
      for (int i = 0; i < 3; ++i)
        r[static_cast<std::size_t>(i)] += p0[static_cast<std::size_t>(i)] + p1[static_cast<std::size_t>(i)];
      return r;
    case MapForm::NonNull: {
      const T rho = dot_mixed(a, p0);
      const double aa = dot(a, a);
      // P0 p0 = p0 - <p0, a>/<a, a> a, then rho (p1 - c).
      r = axpy(T(-1.0 / aa) * rho, a, r);
      r = axpy(T(-1.0) * rho, wp.sphere.base, r);
      for (int i = 0; i < 3; ++i)
        r[static_cast<std::size_t>(i)] += p0[static_cast<std::size_t>(i)] + rho * p1[static_cast<std::size_t>(i)];
      return r;
    }
    case MapForm::Null: {
      const T rho = dot_mixed(a, p0);
      const T pb = dot_mixed(wp.b, p0);
      V3<T> q{T(0.0), T(0.0), T(0.0)};
      for (int j = 0; j < wp.dim1(); ++j)
        q = axpy(coords[static_cast<std::size_t>(wp.dim0() + j)], wp.data.v1[static_cast<std::size_t>(j)], q);
      const T qq = dot3(q, q);
      // P0 p0 removes the span of the null pair (a, b).
      r = axpy(T(-1.0) * pb, a, r);
      r = axpy(T(-1.0) * rho, wp.b, r);
      for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] += p0[static_cast<std::size_t>(i)];
      r = axpy(pb - T(0.5) * rho * qq, a, r);
      r = axpy(rho, wp.b, r);
      for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(i)] += rho * q[static_cast<std::size_t>(i)];
      return r;
    }
  }
  return r;
}

template std::array<double, 3> sphere_point(const WarpedProduct&, const std::array<double, 3>&);
template std::array<DualScalar, 3> sphere_point(const WarpedProduct&, const std::array<DualScalar, 3>&);
template std::array<double, 3> wp_chart(const WarpedProduct&, const std::array<double, 3>&);
template std::array<DualScalar, 3> wp_chart(const WarpedProduct&, const std::array<DualScalar, 3>&);

Vec3M wp_map(const WarpedProduct& wp, const Vec3M& p0, const Vec3M& p1) {
  const double rho = warping(wp, p0);
  if (!(rho > 0.0)) throw Error(ErrorCode::OutsideGeodesicFactor, "rho(p0) <= 0");
  const Vec3M& a = wp.data.a;
  switch (wp.form) {
    case MapForm::Cartesian: return wp.origin + p0 + p1;
    case MapForm::NonNull: {
      const Vec3M p0w = p0 - (dot(p0, a) / dot(a, a)) * a;
      return wp.origin + p0w + rho * (p1 - wp.sphere.base);
    }
    case MapForm::Null: {
      const Vec3M p0w = p0 - dot(p0, wp.b) * a - dot(p0, a) * wp.b;
      const Vec3M q = project(wp.data.v1, p1);
      return wp.origin + p0w + (dot(wp.b, p0) - 0.5 * rho * dot(q, q)) * a + rho * wp.b + rho * q;
    }
  }
  return {};
}

bool wp_image_contains(const WarpedProduct& wp, const Vec3M& p) {
  const Vec3M q = p - wp.origin;
  const Vec3M& a = wp.data.a;
  switch (wp.form) {
    case MapForm::Cartesian: return true;
    case MapForm::NonNull: {
      std::vector<Vec3M> span{a};
      span.insert(span.end(), wp.data.v1.begin(), wp.data.v1.end());
      const Vec3M p1 = project(span, q);
      const double n = dot(p1, p1);
      const double aa = dot(a, a);
      if (!(n * aa > 0.0)) return false;
      if (wp.fiber_disconnected && !(dot(a, q) > 0.0)) return false;
      return true;
    }
    case MapForm::Null: return dot(a, q) > 0.0;
  }
  return false;
}

bool wp_coords_valid(const WarpedProduct& wp, const std::array<double, 3>& coords) {
  Vec3M p0{};
  for (int i = 0; i < wp.dim0(); ++i) p0 += coords[static_cast<std::size_t>(i)] * wp.data.v0[static_cast<std::size_t>(i)];
  if (wp.form != MapForm::Cartesian && !(warping(wp, p0) > 0.0)) return false;
  if (wp.sphere.kind == SphereKind::ConstCurv) {
    Vec3M q{};
    for (int j = 0; j < wp.dim1(); ++j)
      q += coords[static_cast<std::size_t>(wp.dim0() + j)] * wp.data.v1[static_cast<std::size_t>(j)];
    const double aa = wp.sphere.curvature;
    const double sa = aa < 0 ? -1.0 : 1.0;
    if (!(1.0 / std::fabs(aa) - sa * dot(q, q) > 0.0)) return false;
  }
  return true;
}

Decomposition decompose_reducible(const ConcircularTensor& l, const Vec3M& hint) {
  if (!is_reducible(l)) throw Error(ErrorCode::NotReducible, "tensor is irreducible");
  Decomposition d;
  d.source = l;
  InitialData data;
  Vec3M origin{};

  if (max_abs(l.w) == 0.0 && l.m == 0.0) {
    const MetricJordanForm f = metric_jordan_form(l.A);
    for (const auto& b : f.blocks)
      if (b.size > 1 || b.is_complex())
        throw Error(ErrorCode::DegenerateSubspace, "constant tensor is not diagonalizable");
    // Cartesian product: V1 is a multidimensional eigenspace, or the last two
    // eigenvectors when all eigenvalues are simple.
    std::size_t lo = 1;
    const double scale = std::max(1.0, max_abs(l.A));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (std::fabs(f.blocks[i].eigenvalue.real() - f.blocks[j].eigenvalue.real()) <= 1e-8 * scale) {
          const std::size_t other = 3 - i - j;
          data.v0 = {f.basis[other]};
          data.v1 = {f.basis[i], f.basis[j]};
        }
    if (data.v0.empty()) {
      data.v0 = {f.basis[0]};
      data.v1 = {f.basis[lo], f.basis[lo + 1]};
    }
    d.wp = make_warped_product(data, origin);
    d.restricted = {projector(data.v0) * l.A * projector(data.v0), {}, 0.0};
    return d;
  }

  const CanonicalCT c = classify_ct(l);
  origin = c.origin_shift;
  const auto& blocks = c.complement.blocks;
  std::vector<Vec3M> vecs;
  for (const auto& v : c.complement.basis) vecs.push_back(c.frame * v);
  std::vector<std::size_t> off;
  std::size_t k = 0;
  for (const auto& b : blocks) {
    off.push_back(k);
    k += static_cast<std::size_t>(b.size);
  }
  double scale = 1.0;
  for (const auto& b : blocks) scale = std::max(scale, std::abs(b.eigenvalue));

  // The multidimensional eigenspace: blocks sharing a real eigenvalue.
  std::vector<std::size_t> group;
  for (std::size_t i = 0; i < blocks.size() && group.empty(); ++i) {
    if (blocks[i].is_complex()) continue;
    std::vector<std::size_t> g{i};
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!blocks[j].is_complex() &&
          std::fabs(blocks[i].eigenvalue.real() - blocks[j].eigenvalue.real()) <= 1e-8 * scale)
        g.push_back(j);
    if (g.size() >= 2) group = g;
  }
  if (group.empty()) throw Error(ErrorCode::NotReducible, "no multidimensional eigenspace");

  const JordanBlockSpec* chain = nullptr;
  std::size_t chain_off = 0;
  std::vector<Vec3M> eigvecs;
  for (std::size_t i : group) {
    if (blocks[i].size >= 2) {
      chain = &blocks[i];
      chain_off = off[i];
    }
    eigvecs.push_back(vecs[off[i]]);
  }

  if (chain != nullptr) {
    // Degenerate eigenspace: a is the lightlike eigenvector of the chain.
    const Vec3M b1 = vecs[chain_off];
    const Vec3M b2 = vecs[chain_off + 1];
    const double s = dot(b1, hint);
    if (s == 0.0) throw Error(ErrorCode::DegenerateSubspace, "hint is orthogonal to the null eigenvector");
    data.a = s > 0 ? b1 : -b1;
    for (const auto& v : eigvecs)
      if (std::fabs(dot(v, v)) > kDegenerateTol) data.v1 = {v};
    data.v0 = {data.a, b2};
  } else {
    const Vec3M ah = project(eigvecs, hint);
    const double n = dot(ah, ah);
    if (std::fabs(n) < kDegenerateTol * std::max(1.0, euclid_dot(ah, ah)))
      throw Error(ErrorCode::DegenerateSubspace, "hint projects to a null direction");
    data.a = ah / std::sqrt(std::fabs(n));
    if (eigvecs.size() == 3) {
      data.v1 = complement({data.a});
      data.v0 = {data.a};
    } else {
      Vec3M v = eigvecs[0] - (dot(eigvecs[0], data.a) / dot(data.a, data.a)) * data.a;
      if (euclid_norm(v) < 1e-8) v = eigvecs[1] - (dot(eigvecs[1], data.a) / dot(data.a, data.a)) * data.a;
      v = v / std::sqrt(std::fabs(dot(v, v)));
      data.v1 = {v};
      data.v0 = {data.a, g_orthogonal_complement(data.a, v)};
    }
  }
  data.pbar = min_norm_pbar(data.v0, data.a);
  d.wp = make_warped_product(data, origin);

  const ConcircularTensor lo = translate(l, origin);
  const Operator3 p0 = projector(data.v0);
  d.restricted = {p0 * lo.A * p0, p0 * lo.w, lo.m};
  return d;
}

namespace {

using Jac = std::array<std::array<double, 3>, 3>;

Jac jacobian(const std::array<DualScalar, 3>& x) {
  Jac j{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) j[r][c] = x[r].d[c];
  return j;
}

std::array<DualScalar, 3> variables(const std::array<double, 3>& c) {
  return {DualScalar::variable(c[0], 0), DualScalar::variable(c[1], 1), DualScalar::variable(c[2], 2)};
}

double pair_metric(const Jac& j, std::size_t a, std::size_t b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) s += kEta[i] * j[i][a] * j[i][b];
  return s;
}

}  // namespace

double wp_isometry_residual(const WarpedProduct& wp, const std::array<double, 3>& coords) {
  const auto vars = variables(coords);
  const Jac j = jacobian(wp_chart(wp, vars));
  const Jac js = jacobian(sphere_point(wp, vars));
  Vec3M p0{};
  for (int i = 0; i < wp.dim0(); ++i) p0 += coords[static_cast<std::size_t>(i)] * wp.data.v0[static_cast<std::size_t>(i)];
  const double rho = warping(wp, p0);
  const auto n0 = static_cast<std::size_t>(wp.dim0());
  double worst = 0.0;
  double scale = 1.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      double expected = 0.0;
      if (a < n0 && b < n0) {
        expected = dot(wp.data.v0[a], wp.data.v0[b]);
      } else if (a >= n0 && b >= n0) {
        expected = rho * rho * pair_metric(js, a, b);
      }
      scale = std::max(scale, std::fabs(expected));
      worst = std::max(worst, std::fabs(pair_metric(j, a, b) - expected));
    }
  return worst / scale;
}

double wp_adaptedness_residual(const Decomposition& d, const std::array<double, 3>& coords) {
  const auto x = wp_chart(d.wp, variables(coords));
  const Jac j = jacobian(x);
  const Vec3M p{x[0].value, x[1].value, x[2].value};
  const Operator3 lp = evaluate_ct(d.source, p);
  const auto n0 = static_cast<std::size_t>(d.wp.dim0());
  std::vector<Vec3M> tangents;
  for (std::size_t c = n0; c < 3; ++c) tangents.push_back({j[0][c], j[1][c], j[2][c]});
  // Euclidean orthonormal basis of the tangent space.
  std::vector<Vec3M> h;
  for (Vec3M t : tangents) {
    for (const auto& y : h) t = t - euclid_dot(t, y) * y;
    h.push_back(t / euclid_norm(t));
  }
  double worst = 0.0;
  for (const auto& t : tangents) {
    Vec3M r = lp * t;
    Vec3M res = r;
    for (const auto& y : h) res = res - euclid_dot(r, y) * y;
    worst = std::max(worst, euclid_norm(res) / (std::max(1.0, max_abs(lp)) * euclid_norm(t)));
  }
  return worst;
}

double wp_restriction_residual(const Decomposition& d, const std::array<double, 3>& coords) {
  const auto x = wp_chart(d.wp, coords);
  const Vec3M p = to_vec(x);
  Vec3M p0{};
  const auto& v0 = d.wp.data.v0;
  for (std::size_t i = 0; i < v0.size(); ++i) p0 += coords[i] * v0[i];
  const Operator3 lt = evaluate_ct(d.restricted, p0);

  std::vector<std::complex<double>> mu;
  if (v0.size() == 1) {
    mu.emplace_back(dot(v0[0], lt * v0[0]) / dot(v0[0], v0[0]));
  } else {
    // Matrix of L-tilde on V0 in the basis v0: G^-1 H.
    const double g00 = dot(v0[0], v0[0]);
    const double g01 = dot(v0[0], v0[1]);
    const double g11 = dot(v0[1], v0[1]);
    const double det = g00 * g11 - g01 * g01;
    double h[2][2];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) h[r][c] = dot(v0[static_cast<std::size_t>(r)], lt * v0[static_cast<std::size_t>(c)]);
    const double m00 = (g11 * h[0][0] - g01 * h[1][0]) / det;
    const double m01 = (g11 * h[0][1] - g01 * h[1][1]) / det;
    const double m10 = (g00 * h[1][0] - g01 * h[0][0]) / det;
    const double m11 = (g00 * h[1][1] - g01 * h[0][1]) / det;
    const double tr = m00 + m11;
    const double dt = m00 * m11 - m01 * m10;
    const std::complex<double> disc = std::sqrt(std::complex<double>(tr * tr - 4.0 * dt));
    mu.push_back(0.5 * (tr + disc));
    mu.push_back(0.5 * (tr - disc));
  }

  const Operator3 lp = evaluate_ct(d.source, p);
  const CubicRoots r = cubic_roots(char_poly(lp));
  std::vector<std::complex<double>> lam;
  if (r.n_real == 3) {
    for (double v : r.real) lam.emplace_back(v);
  } else {
    lam = {r.real[0], r.pair, std::conj(r.pair)};
  }
  double scale = 1.0;
  for (const auto& v : lam) scale = std::max(scale, std::abs(v));
  double worst = 0.0;
  for (const auto& m : mu) {
    double best = 1e300;
    for (const auto& v : lam) best = std::min(best, std::abs(m - v));
    worst = std::max(worst, best);
  }
  return worst / scale;
}

}  // namespace sepweb
