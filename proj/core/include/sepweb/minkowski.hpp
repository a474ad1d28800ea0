#pragma once

// Vectors, bilinear forms and operators on 3-dimensional Minkowski space.
// Signature (-,+,+), coordinate order (t,x,y).

#include <array>
#include <cmath>
#include <cstddef>

namespace sepweb {

struct Vec3M {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;

  double& operator[](std::size_t i) { return i == 0 ? t : (i == 1 ? x : y); }
  double operator[](std::size_t i) const { return i == 0 ? t : (i == 1 ? x : y); }

  Vec3M& operator+=(const Vec3M& o) { t += o.t; x += o.x; y += o.y; return *this; }
  Vec3M& operator-=(const Vec3M& o) { t -= o.t; x -= o.x; y -= o.y; return *this; }
  Vec3M& operator*=(double s) { t *= s; x *= s; y *= s; return *this; }
};

inline Vec3M operator+(Vec3M a, const Vec3M& b) { return a += b; }
inline Vec3M operator-(Vec3M a, const Vec3M& b) { return a -= b; }
inline Vec3M operator-(const Vec3M& a) { return {-a.t, -a.x, -a.y}; }
inline Vec3M operator*(double s, Vec3M a) { return a *= s; }
inline Vec3M operator*(Vec3M a, double s) { return a *= s; }
inline Vec3M operator/(Vec3M a, double s) { return a *= (1.0 / s); }

inline constexpr std::array<double, 3> kEta{-1.0, 1.0, 1.0};  // diagonal of g

inline Vec3M e_t() { return {1, 0, 0}; }
inline Vec3M e_x() { return {0, 1, 0}; }
inline Vec3M e_y() { return {0, 0, 1}; }
// Lightcone frame: eta = x + t, xi = (x - t)/2, <d_eta, d_xi> = 1.
inline Vec3M d_eta() { return {0.5, 0.5, 0}; }
inline Vec3M d_xi() { return {-1, 1, 0}; }

double dot(const Vec3M& u, const Vec3M& v);
double euclid_dot(const Vec3M& u, const Vec3M& v);
double euclid_norm(const Vec3M& u);
double max_abs(const Vec3M& u);
Vec3M cross(const Vec3M& u, const Vec3M& v);

using Covector = std::array<double, 3>;
Covector lower(const Vec3M& v);
Vec3M raise(const Covector& c);

// Mixed (1,1) operator; m[i][j] acts as (A v)^i = m[i][j] v^j.
struct Operator3 {
  std::array<std::array<double, 3>, 3> m{};

  double& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  double operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  static Operator3 identity();
  static Operator3 diag(double a, double b, double c);
  static Operator3 from_columns(const Vec3M& c0, const Vec3M& c1, const Vec3M& c2);
  Vec3M column(std::size_t j) const { return {m[0][j], m[1][j], m[2][j]}; }
};

Vec3M operator*(const Operator3& a, const Vec3M& v);
Operator3 operator*(const Operator3& a, const Operator3& b);
Operator3 operator+(const Operator3& a, const Operator3& b);
Operator3 operator-(const Operator3& a, const Operator3& b);
Operator3 operator*(double s, const Operator3& a);
Operator3 transpose(const Operator3& a);
double trace(const Operator3& a);
double det(const Operator3& a);
double max_abs(const Operator3& a);
// Throws Error(DegenerateSubspace) for a numerically singular matrix.
Operator3 inverse(const Operator3& a);
// u (x) v-flat, the mixed operator x -> u <v, x>.
Operator3 outer(const Vec3M& u, const Vec3M& v);

// Symmetric covariant 2-tensor; stores tt, tx, ty, xx, xy, yy.
struct SymBilinear {
  std::array<double, 6> e{};

  static std::size_t index(std::size_t i, std::size_t j);
  double operator()(std::size_t i, std::size_t j) const { return e[index(i, j)]; }
  double& operator()(std::size_t i, std::size_t j) { return e[index(i, j)]; }

  static SymBilinear metric();
  double apply(const Vec3M& u, const Vec3M& v) const;
};

SymBilinear operator+(const SymBilinear& a, const SymBilinear& b);
SymBilinear operator*(double s, const SymBilinear& a);

Operator3 raise(const SymBilinear& b);
// Lowers the first index and keeps the symmetric part.
SymBilinear lower(const Operator3& a);
// (u-flat (x) v-flat + v-flat (x) u-flat) / 2
SymBilinear sym_outer(const Vec3M& u, const Vec3M& v);

// max |g_ik A^k_j - g_jk A^k_i| <= tol * max(1, max|A|)
bool is_self_adjoint(const Operator3& a, double tol = 1e-10);
// q^T g q = g within tol.
bool is_pseudo_orthogonal(const Operator3& q, double tol = 1e-10);

// Unit vector g-orthogonal to both u and v (spanning the complement), normalized so
// |<e,e>| = 1 when non-null; Euclidean-normalized when null.
Vec3M g_orthogonal_complement(const Vec3M& u, const Vec3M& v);

}  // namespace sepweb
