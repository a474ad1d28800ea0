#include "sepweb/minkowski.hpp"

#include <algorithm>

#include "sepweb/errors.hpp"

namespace sepweb {

double dot(const Vec3M& u, const Vec3M& v) { return -u.t * v.t + u.x * v.x + u.y * v.y; }

double euclid_dot(const Vec3M& u, const Vec3M& v) { return u.t * v.t + u.x * v.x + u.y * v.y; }

double euclid_norm(const Vec3M& u) { return std::sqrt(euclid_dot(u, u)); }

double max_abs(const Vec3M& u) {
  return std::max({std::fabs(u.t), std::fabs(u.x), std::fabs(u.y)});
}

Vec3M cross(const Vec3M& u, const Vec3M& v) {
  return {u.x * v.y - u.y * v.x, u.y * v.t - u.t * v.y, u.t * v.x - u.x * v.t};
}

Covector lower(const Vec3M& v) { return {-v.t, v.x, v.y}; }

Vec3M raise(const Covector& c) { return {-c[0], c[1], c[2]}; }

Operator3 Operator3::identity() { return diag(1, 1, 1); }

Operator3 Operator3::diag(double a, double b, double c) {
  Operator3 r;
  r.m[0][0] = a;
  r.m[1][1] = b;
  r.m[2][2] = c;
  return r;
}

Operator3 Operator3::from_columns(const Vec3M& c0, const Vec3M& c1, const Vec3M& c2) {
  Operator3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    r.m[i][0] = c0[i];
    r.m[i][1] = c1[i];
    r.m[i][2] = c2[i];
  }
  return r;
}

Vec3M operator*(const Operator3& a, const Vec3M& v) {
  Vec3M r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = a.m[i][0] * v.t + a.m[i][1] * v.x + a.m[i][2] * v.y;
  return r;
}

Operator3 operator*(const Operator3& a, const Operator3& b) {
  Operator3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
  return r;
}

Operator3 operator+(const Operator3& a, const Operator3& b) {
  Operator3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

Operator3 operator-(const Operator3& a, const Operator3& b) { return a + (-1.0) * b; }

Operator3 operator*(double s, const Operator3& a) {
  Operator3 r = a;
  for (auto& row : r.m)
    for (auto& v : row) v *= s;
  return r;
}

Operator3 transpose(const Operator3& a) {
  Operator3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = a.m[j][i];
  return r;
}

double trace(const Operator3& a) { return a.m[0][0] + a.m[1][1] + a.m[2][2]; }

double det(const Operator3& a) {
  const auto& m = a.m;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double max_abs(const Operator3& a) {
  double r = 0.0;
  for (const auto& row : a.m)
    for (double v : row) r = std::max(r, std::fabs(v));
  return r;
}

Operator3 inverse(const Operator3& a) {
  const auto& m = a.m;
  const double d = det(a);
  const double s = max_abs(a);
  if (s == 0.0 || std::fabs(d) <= 1e-14 * s * s * s) {
    throw Error(ErrorCode::DegenerateSubspace, "singular 3x3 matrix");
  }
  Operator3 r;
  r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  return r;
}

Operator3 outer(const Vec3M& u, const Vec3M& v) {
  const Covector vf = lower(v);
  Operator3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = u[i] * vf[j];
  return r;
}

std::size_t SymBilinear::index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  static constexpr std::size_t map[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return map[i][j];
}

SymBilinear SymBilinear::metric() {
  SymBilinear g;
  g(0, 0) = -1;
  g(1, 1) = 1;
  g(2, 2) = 1;
  return g;
}

double SymBilinear::apply(const Vec3M& u, const Vec3M& v) const {
  double r = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r += (*this)(i, j) * u[i] * v[j];
  return r;
}

SymBilinear operator+(const SymBilinear& a, const SymBilinear& b) {
  SymBilinear r;
  for (std::size_t k = 0; k < 6; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

SymBilinear operator*(double s, const SymBilinear& a) {
  SymBilinear r = a;
  for (double& v : r.e) v *= s;
  return r;
}

Operator3 raise(const SymBilinear& b) {
  Operator3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = kEta[i] * b(i, j);
  return r;
}

SymBilinear lower(const Operator3& a) {
  SymBilinear r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      r(i, j) = 0.5 * (kEta[i] * a.m[i][j] + kEta[j] * a.m[j][i]);
  return r;
}

SymBilinear sym_outer(const Vec3M& u, const Vec3M& v) {
  const Covector uf = lower(u);
  const Covector vf = lower(v);
  SymBilinear r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) r(i, j) = 0.5 * (uf[i] * vf[j] + vf[i] * uf[j]);
  return r;
}

bool is_self_adjoint(const Operator3& a, double tol) {
  const double scale = std::max(1.0, max_abs(a));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::fabs(kEta[i] * a.m[i][j] - kEta[j] * a.m[j][i]) > tol * scale) return false;
  return true;
}

bool is_pseudo_orthogonal(const Operator3& q, double tol) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double g = dot(q.column(i), q.column(j));
      const double want = i == j ? kEta[i] : 0.0;
      if (std::fabs(g - want) > tol) return false;
    }
  return true;
}

Vec3M g_orthogonal_complement(const Vec3M& u, const Vec3M& v) {
  // <e, u> = 0 means (g e) is Euclidean-orthogonal to u, so g e is parallel to u x v.
  const Vec3M c = cross(u, v);
  Vec3M e{-c.t, c.x, c.y};
  const double n = dot(e, e);
  const double scale = euclid_dot(e, e);
  if (scale == 0.0) throw Error(ErrorCode::DegenerateSubspace, "parallel spanning vectors");
  if (std::fabs(n) > 1e-12 * scale) return e / std::sqrt(std::fabs(n));
  return e / std::sqrt(scale);
}

}  // namespace sepweb
