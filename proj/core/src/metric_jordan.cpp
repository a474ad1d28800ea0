#include "sepweb/metric_jordan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sepweb/errors.hpp"
#include "sepweb/linalg.hpp"

namespace sepweb {

namespace {

// Root clustering on the normalized depressed cubic. See the decisions ledger: the
// multiplicity decision uses the discriminant rather than raw root gaps.
constexpr double kClusterTol = 1e-9;
constexpr double kRankTol = 1e-7;

Operator3 shifted(const Operator3& a, double lambda) {
  return a - lambda * Operator3::identity();
}

Vec3M null_vector(const Operator3& n) {
  const Singular3 s = singular_values3(n);
  return s.right.column(2);
}

// Deterministic orientation: largest-magnitude component positive.
Vec3M orient(Vec3M v) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::fabs(v[i]) > std::fabs(v[k]) + 1e-12) k = i;
  return v[k] < 0 ? -v : v;
}

// g-orthonormal basis of span{k1, k2} (a nondegenerate plane).
std::pair<Vec3M, Vec3M> g_orthonormal_plane(Vec3M k1, Vec3M k2) {
  k1 = k1 / euclid_norm(k1);
  k2 = k2 - euclid_dot(k1, k2) * k1;
  k2 = k2 / euclid_norm(k2);
  Operator3 gram;
  gram.m[0][0] = dot(k1, k1);
  gram.m[0][1] = gram.m[1][0] = dot(k1, k2);
  gram.m[1][1] = dot(k2, k2);
  gram.m[2][2] = 1e300;  // keep the dummy slot last
  const SymEigen e = sym_eig3(gram);
  Vec3M v0 = e.vectors.m[0][0] * k1 + e.vectors.m[1][0] * k2;
  Vec3M v1 = e.vectors.m[0][1] * k1 + e.vectors.m[1][1] * k2;
  if (std::fabs(e.values[0]) < 1e-12 || std::fabs(e.values[1]) < 1e-12)
    throw Error(ErrorCode::DegenerateSubspace, "degenerate eigenspace");
  return {orient(v0 / std::sqrt(std::fabs(e.values[0]))), orient(v1 / std::sqrt(std::fabs(e.values[1])))};
}

struct Simple {
  double lambda;
  Vec3M v;
  int sign;
};

// Assemble three 1-blocks: timelike first, then ascending eigenvalue.
MetricJordanForm diagonal_form(std::vector<Simple> parts) {
  std::stable_sort(parts.begin(), parts.end(), [](const Simple& a, const Simple& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    return a.lambda < b.lambda;
  });
  MetricJordanForm f;
  for (const auto& p : parts) {
    f.blocks.push_back({1, p.sign, {p.lambda, 0.0}});
    f.basis.push_back(p.v);
  }
  return f;
}

Simple simple_eigen(const Operator3& a, double lambda) {
  Vec3M v = orient(null_vector(shifted(a, lambda)));
  const double n = dot(v, v);
  return {lambda, v / std::sqrt(std::fabs(n)), n < 0 ? -1 : 1};
}

// Normalized 2-cycle (b1, b2) for N nilpotent on the cycle, starting from x with Nx != 0.
std::pair<Vec3M, Vec3M> two_cycle(const Operator3& n, const Vec3M& x, int& eps) {
  const Vec3M nx = n * x;
  const double s = dot(nx, x);
  if (s == 0.0) throw Error(ErrorCode::DegenerateAmbiguity, "null 2-cycle pairing");
  eps = s > 0 ? 1 : -1;
  Vec3M b2 = x / std::sqrt(std::fabs(s));
  Vec3M b1 = n * b2;
  b2 = b2 - (dot(b2, b2) / (2.0 * eps)) * b1;
  return {b1, b2};
}

MetricJordanForm complex_form(const Operator3& a, const CubicRoots& roots) {
  const double mu = roots.real[0];
  const std::complex<double> lam = roots.pair;
  using C = std::complex<double>;
  std::array<std::array<C, 3>, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a.m[i][j] - (i == j ? lam : C(0.0));
  std::array<C, 3> best{};
  double best_norm = -1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto& u = r[i];
      const auto& v = r[j];
      std::array<C, 3> c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
      const double nn = std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]);
      if (nn > best_norm) {
        best_norm = nn;
        best = c;
      }
    }
  }
  const C gzz = -best[0] * best[0] + best[1] * best[1] + best[2] * best[2];
  const C scale = std::sqrt(gzz);
  for (auto& c : best) c /= scale;
  const double r2 = std::numbers::sqrt2;
  Vec3M e1{r2 * best[0].real(), r2 * best[1].real(), r2 * best[2].real()};
  Vec3M e0{-r2 * best[0].imag(), -r2 * best[1].imag(), -r2 * best[2].imag()};
  if (e0.t < 0) {
    e0 = -e0;
    e1 = -e1;
  }
  const Simple s = simple_eigen(a, mu);
  MetricJordanForm f;
  f.blocks.push_back({1, 1, lam});
  f.blocks.push_back({1, 1, std::conj(lam)});
  f.blocks.push_back({1, s.sign, {mu, 0.0}});
  f.basis = {e0, e1, s.v};
  return f;
}

}  // namespace

MetricJordanForm metric_jordan_form(const Operator3& a, double tol) {
  if (!is_self_adjoint(a, tol)) throw Error(ErrorCode::NotSelfAdjoint, "operator is not g-self-adjoint");

  const double mean = trace(a) / 3.0;
  const Operator3 a0 = shifted(a, mean);
  const double s = max_abs(a0);
  if (s <= 1e-12 * std::max(1.0, std::fabs(mean))) {
    return diagonal_form({{mean, e_t(), -1}, {mean, e_x(), 1}, {mean, e_y(), 1}});
  }
  const Cubic cn = char_poly((1.0 / s) * a0);
  const double p = cn.c[1];
  const double q = cn.c[0];
  const double disc = 4.0 * p * p * p + 27.0 * q * q;  // >0: complex pair, <0: three real

  const bool triple = std::fabs(p) <= kClusterTol && std::fabs(q) <= kClusterTol;
  const bool grey_triple = !triple && std::fabs(p) <= 10 * kClusterTol && std::fabs(q) <= 10 * kClusterTol;
  const bool twofold = !triple && std::fabs(disc) <= kClusterTol;
  const bool grey_double = !triple && !twofold && std::fabs(disc) <= 10 * kClusterTol;
  if (grey_triple || grey_double)
    throw Error(ErrorCode::DegenerateAmbiguity, "eigenvalue clustering is unstable at the tolerance");

  if (triple) {
    const Operator3 n = a0;
    const Singular3 sv = singular_values3(n);
    const double scale = std::max(s, 1e-300);
    int rank = 0;
    for (double sg : sv.sigma)
      if (sg > kRankTol * scale) ++rank;
    if (rank == 0) return diagonal_form({{mean, e_t(), -1}, {mean, e_x(), 1}, {mean, e_y(), 1}});
    if (rank == 1) {
      int eps = 1;
      auto [b1, b2] = two_cycle(n, sv.right.column(0), eps);
      const Vec3M e = orient(g_orthogonal_complement(b1, b2));
      MetricJordanForm f;
      f.blocks = {{2, eps, {mean, 0.0}}, {1, 1, {mean, 0.0}}};
      f.basis = {b1, b2, e};
      return f;
    }
    const Operator3 n2 = n * n;
    const Vec3M x = singular_values3(n2).right.column(0);
    const Vec3M nx = n * x;
    const double nn = dot(nx, nx);
    if (nn <= 0.0) throw Error(ErrorCode::DegenerateAmbiguity, "inadmissible 3-block sign");
    const double c = 1.0 / std::sqrt(nn);
    Vec3M b3 = c * x;
    Vec3M b2 = c * nx;
    Vec3M b1 = c * (n * nx);
    const double rho = dot(b2, b3);
    const double sigma = dot(b3, b3);
    const double alpha = -rho / 2.0;
    const double beta = -(sigma + alpha * alpha + 2.0 * alpha * rho) / 2.0;
    b3 = b3 + alpha * b2 + beta * b1;
    b2 = b2 + alpha * b1;
    MetricJordanForm f;
    f.blocks = {{3, 1, {mean, 0.0}}};
    f.basis = {b1, b2, b3};
    return f;
  }

  if (twofold) {
    const double lam = mean + s * (-3.0 * q / (2.0 * p));
    const double mu = mean + s * (3.0 * q / p);
    const Simple sm = simple_eigen(a, mu);
    const Operator3 n = shifted(a, lam);
    const Singular3 sv = singular_values3(n);
    const bool defective = sv.sigma[1] > kRankTol * std::max(s, 1e-300);
    if (!defective) {
      auto [v0, v1] = g_orthonormal_plane(sv.right.column(1), sv.right.column(2));
      return diagonal_form({sm, {lam, v0, dot(v0, v0) < 0 ? -1 : 1}, {lam, v1, dot(v1, v1) < 0 ? -1 : 1}});
    }
    // Plane g-orthogonal to the mu-eigenvector carries the 2-block.
    const Vec3M gv{-sm.v.t, sm.v.x, sm.v.y};
    Vec3M p1 = std::fabs(gv.t) < 0.9 * euclid_norm(gv) ? cross(gv, e_t()) : cross(gv, e_x());
    p1 = p1 / euclid_norm(p1);
    Vec3M p2 = cross(gv, p1);
    p2 = p2 / euclid_norm(p2);
    const Vec3M x = euclid_norm(n * p1) >= euclid_norm(n * p2) ? p1 : p2;
    int eps = 1;
    auto [b1, b2] = two_cycle(n, x, eps);
    MetricJordanForm f;
    f.blocks = {{2, eps, {lam, 0.0}}, {1, sm.sign, {mu, 0.0}}};
    f.basis = {b1, b2, sm.v};
    return f;
  }

  const CubicRoots roots = cubic_roots(char_poly(a));
  if (disc > 0.0 && roots.n_real == 1 && roots.pair.imag() > 0.0) return complex_form(a, roots);
  if (roots.n_real == 1) throw Error(ErrorCode::DegenerateAmbiguity, "root classification disagrees");
  return diagonal_form({simple_eigen(a, roots.real[0]), simple_eigen(a, roots.real[1]),
                        simple_eigen(a, roots.real[2])});
}

Operator3 jordan_matrix(const MetricJordanForm& form) {
  Operator3 j;
  std::size_t k = 0;
  for (std::size_t b = 0; b < form.blocks.size(); ++b) {
    const auto& blk = form.blocks[b];
    if (blk.is_complex()) {
      const double al = blk.eigenvalue.real();
      const double be = std::fabs(blk.eigenvalue.imag());
      j.m[k][k] = al;
      j.m[k][k + 1] = be;
      j.m[k + 1][k] = -be;
      j.m[k + 1][k + 1] = al;
      k += 2;
      ++b;  // the conjugate partner shares the 2x2 real block
      continue;
    }
    for (int i = 0; i < blk.size; ++i) {
      j.m[k + i][k + i] = blk.eigenvalue.real();
      if (i + 1 < blk.size) j.m[k + i][k + i + 1] = 1.0;
    }
    k += static_cast<std::size_t>(blk.size);
  }
  return j;
}

Operator3 target_gram(const MetricJordanForm& form) {
  Operator3 g;
  std::size_t k = 0;
  for (std::size_t b = 0; b < form.blocks.size(); ++b) {
    const auto& blk = form.blocks[b];
    if (blk.is_complex()) {
      g.m[k][k] = -1;
      g.m[k + 1][k + 1] = 1;
      k += 2;
      ++b;
      continue;
    }
    const auto n = static_cast<std::size_t>(blk.size);
    for (std::size_t i = 0; i < n; ++i) g.m[k + i][k + n - 1 - i] = blk.sign;
    k += n;
  }
  return g;
}

Operator3 standard_realization(const MetricJordanForm& form) {
  const auto& b0 = form.blocks.front();
  if (b0.is_complex()) return Operator3::identity();
  if (b0.size == 3) return Operator3::from_columns(d_xi(), e_y(), d_eta());
  if (b0.size == 2) {
    const Vec3M b1 = b0.sign > 0 ? d_xi() : -d_xi();
    return Operator3::from_columns(b1, d_eta(), e_y());
  }
  // Three 1-blocks; exactly one timelike, listed first.
  return Operator3::identity();
}

Operator3 synthesize_operator(const MetricJordanForm& form, const Operator3& q) {
  if (!is_pseudo_orthogonal(q, 1e-10)) throw Error(ErrorCode::NotPseudoOrthogonal, "q^T g q != g");
  const Operator3 t = standard_realization(form);
  const Operator3 canonical = t * jordan_matrix(form) * inverse(t);
  return q * canonical * inverse(q);
}

Operator3 pseudo_orthogonal(double rapidity, double angle, bool flip_t, bool flip_x) {
  Operator3 boost = Operator3::identity();
  boost.m[0][0] = boost.m[1][1] = std::cosh(rapidity);
  boost.m[0][1] = boost.m[1][0] = std::sinh(rapidity);
  Operator3 rot = Operator3::identity();
  rot.m[1][1] = rot.m[2][2] = std::cos(angle);
  rot.m[1][2] = -std::sin(angle);
  rot.m[2][1] = std::sin(angle);
  const Operator3 refl = Operator3::diag(flip_t ? -1 : 1, flip_x ? -1 : 1, 1);
  return refl * rot * boost;
}

Operator3 random_pseudo_orthogonal(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rap(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution coin(0.5);
  const double r = rap(rng);
  const double a = ang(rng);
  const bool ft = coin(rng);
  const bool fx = coin(rng);
  return pseudo_orthogonal(r, a, ft, fx);
}

}  // namespace sepweb
