#include "sepweb/ict.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sepweb/errors.hpp"

namespace sepweb {

namespace {

using Poly = std::vector<double>;  // ascending coefficients

constexpr double kCollisionTol = 1e-12;
constexpr double kNegativeTol = 1e-12;
constexpr double kSpectrumTol = 1e-10;

Poly triple_poly(const SeparableTriple& s) {
  // (z - u)(z - v)(z - w)
  const double e1 = s.u + s.v + s.w;
  const double e2 = s.u * s.v + s.u * s.w + s.v * s.w;
  const double e3 = s.u * s.v * s.w;
  return {-e3, e2, -e1, 1.0};
}

std::complex<double> eval_c(const Poly& p, std::complex<double> z) {
  std::complex<double> r = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
  return r;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<double>(i) * p[i]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

// Quotient and remainder of p by a monic divisor.
void divide(const Poly& p, const Poly& divisor, Poly& quot, Poly& rem) {
  rem = p;
  const std::size_t dn = divisor.size() - 1;
  if (p.size() - 1 < dn) {
    quot = {0.0};
    return;
  }
  quot.assign(p.size() - dn, 0.0);
  for (std::size_t i = p.size() - 1; i + 1 > dn; --i) {
    const double q = rem[i];
    quot[i - dn] = q;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= q * divisor[j];
    if (i == dn) break;
  }
  rem.resize(std::max<std::size_t>(dn, 1));
}

// First n Taylor coefficients at 0 of num / den (den(0) != 0).
Poly series_ratio(const Poly& num, const Poly& den, std::size_t n) {
  Poly r(n, 0.0);
  for (std::size_t l = 0; l < n; ++l) {
    double acc = l < num.size() ? num[l] : 0.0;
    for (std::size_t j = 1; j <= l && j < den.size(); ++j) acc -= den[j] * r[l - j];
    r[l] = acc / den[0];
  }
  return r;
}

double checked_sqrt(double v, double tol, const char* what) {
  if (v < -tol) throw Error(ErrorCode::RangeViolation, std::string("negative square for ") + what);
  return std::sqrt(std::max(0.0, v));
}

void check_triple(const CanonicalICTData& d, const SeparableTriple& s) {
  const double scale = std::max({1.0, std::fabs(s.u), std::fabs(s.v), std::fabs(s.w)});
  const double tol = kCollisionTol * scale;
  const std::array<double, 3> v{s.u, s.v, s.w};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j)
      if (std::fabs(v[i] - v[j]) <= tol) throw Error(ErrorCode::DegenerateTriple, "equal eigenvalues");
    for (double lam : d.lambda)
      if (std::fabs(v[i] - lam) <= tol) throw Error(ErrorCode::DegenerateTriple, "eigenvalue on a root of B");
    if (!d.block.empty() && std::fabs(v[i]) <= tol)
      throw Error(ErrorCode::DegenerateTriple, "eigenvalue on the nilpotent root");
  }
}

// Shared complement solve: h = eps_h (p - p_d B), evaluated at the roots of B.
Vec3M forward_impl(const CanonicalICTData& d, const SeparableTriple& s) {
  check_triple(d, s);
  const double scale = std::max({1.0, std::fabs(s.u), std::fabs(s.v), std::fabs(s.w)});
  const double tol = kNegativeTol * scale * scale * scale;
  const Poly p = triple_poly(s);
  Poly pd;
  Poly rem;
  divide(p, d.B, pd, rem);
  const double eps_h = d.kind == ICTKind::Axial ? d.eps0 : 1.0;
  Poly h = rem;
  for (double& x : h) x *= eps_h;
  const Poly bprime = derivative(d.B);

  Vec3M q{};
  if (d.kind == ICTKind::Axial) {
    const int k = d.k;
    std::vector<double> x(static_cast<std::size_t>(k) + 1, 0.0);
    const double two_e = 2.0 * d.eps0;
    x[static_cast<std::size_t>(k)] = -pd[static_cast<std::size_t>(k - 1)] / two_e;
    for (int l = 2; l <= k; ++l) {
      double acc = 0.0;
      for (int i = 1; i <= l - 1; ++i)
        acc += x[static_cast<std::size_t>(k + 1 + i - l)] * x[static_cast<std::size_t>(k + 1 - i)];
      x[static_cast<std::size_t>(k - l + 1)] = (acc - pd[static_cast<std::size_t>(k - l)]) / two_e;
    }
    for (int i = 1; i <= k; ++i) q += x[static_cast<std::size_t>(i)] * d.axis[static_cast<std::size_t>(i - 1)];
  }

  if (!d.block.empty()) {
    const std::size_t j = d.block.size();
    // B_{U-perp} = B / z^j
    const Poly bu(d.B.begin() + static_cast<std::ptrdiff_t>(j), d.B.end());
    const Poly series = series_ratio(h, bu, j);
    std::array<double, 3> S{};
    for (std::size_t l = 0; l < j; ++l) S[l] = -d.block_sign * series[l];
    const double x1 = checked_sqrt(S[0], tol, "block coordinate");
    if (x1 == 0.0) throw Error(ErrorCode::DegenerateTriple, "block coordinate vanishes");
    std::array<double, 3> x{x1, 0.0, 0.0};
    if (j >= 2) x[1] = S[1] / (2.0 * x1);
    if (j >= 3) x[2] = (S[2] - x[1] * x[1]) / (2.0 * x1);
    for (std::size_t l = 0; l < j; ++l) q += x[l] * d.block[l];
  }

  for (std::size_t i = 0; i < d.lambda.size(); ++i) {
    const double lam = d.lambda[i];
    const double val = -d.eps_i[i] * poly_eval(h, lam) / poly_eval(bprime, lam);
    q += checked_sqrt(val, tol, "diagonal coordinate") * d.dirs[i];
  }

  if (d.has_pair) {
    const std::complex<double> lam(d.alpha, d.beta);
    const std::complex<double> c2 = -eval_c(h, lam) / eval_c(bprime, lam);
    const double mod = std::abs(c2);
    const double x = std::sqrt(std::max(0.0, mod + c2.real()));
    double t = std::sqrt(std::max(0.0, mod - c2.real()));
    if (c2.imag() < 0.0) t = -t;
    q += t * d.pair_e0 + x * d.pair_e1;
  }
  return q;
}

}  // namespace

CanonicalICTData ict_data(const CanonicalCT& c) {
  if (c.cls.kind == CTKind::Cartesian || is_reducible(c))
    throw Error(ErrorCode::DegenerateSubspace, "tensor has no irreducible separable coordinates");
  CanonicalICTData d;
  d.kind = c.cls.kind == CTKind::Central ? ICTKind::Central : ICTKind::Axial;
  d.B = char_polys(c, Vec3M{}).B;
  const auto& f = c.complement;
  std::size_t off = 0;
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    const JordanBlockSpec& blk = f.blocks[b];
    if (blk.is_complex()) {
      d.has_pair = true;
      d.alpha = blk.eigenvalue.real();
      d.beta = std::fabs(blk.eigenvalue.imag());
      d.pair_e0 = f.basis[off];
      d.pair_e1 = f.basis[off + 1];
      off += 2;
      ++b;
      continue;
    }
    if (blk.size >= 2) {
      // x^1 rides on the last vector of the Jordan chain.
      for (int j = blk.size - 1; j >= 0; --j) d.block.push_back(f.basis[off + static_cast<std::size_t>(j)]);
      d.block_sign = blk.sign;
    } else {
      d.lambda.push_back(blk.eigenvalue.real());
      d.eps_i.push_back(blk.sign);
      d.dirs.push_back(f.basis[off]);
    }
    off += static_cast<std::size_t>(blk.size);
  }
  if (d.kind == ICTKind::Central) {
    d.k = static_cast<int>(d.block.size());
    d.eps0 = d.block.empty() ? 1 : d.block_sign;
    d.eps = 1;
  } else {
    d.axis = c.axis;
    d.k = static_cast<int>(c.axis.size());
    d.eps0 = c.cls.eps;
    d.eps = c.cls.eps;
  }
  return d;
}

Vec3M central_forward(const CanonicalICTData& d, const SeparableTriple& s) {
  if (d.kind != ICTKind::Central) throw Error(ErrorCode::DegenerateSubspace, "central_forward on axial data");
  return forward_impl(d, s);
}

Vec3M axial_forward(const CanonicalICTData& d, const SeparableTriple& s) {
  if (d.kind != ICTKind::Axial) throw Error(ErrorCode::DegenerateSubspace, "axial_forward on central data");
  return forward_impl(d, s);
}

Vec3M ict_forward(const CanonicalICTData& d, const SeparableTriple& s) { return forward_impl(d, s); }

std::array<double, 3> ict_metric(const CanonicalICTData& d, const SeparableTriple& s) {
  check_triple(d, s);
  const std::array<double, 3> v{s.u, s.v, s.w};
  std::array<double, 3> g{};
  for (int i = 0; i < 3; ++i) {
    double num = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) num *= v[i] - v[j];
    g[i] = d.eps * num / (4.0 * poly_eval(d.B, v[i]));
  }
  return g;
}

SeparableTriple ict_invert(const ConcircularTensor& l, const Vec3M& p, const Vec3M& offset) {
  const PointSpectrum sp = point_eigenvalues(l, p + offset);
  if (sp.complex) throw Error(ErrorCode::ComplexSpectrum, "complex eigenvalues");
  const auto& v = sp.values;
  const double scale = std::max({1.0, std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
  const double tol = kSpectrumTol * scale;
  if (v[0] - v[1] <= tol || v[1] - v[2] <= tol)
    throw Error(ErrorCode::DegenerateSpectrum, "repeated eigenvalue");
  if (max_abs(l.w) != 0.0 || l.m != 0.0) {
    const CanonicalCT c = classify_ct(l);
    for (const auto& blk : c.complement.blocks) {
      if (blk.is_complex()) continue;
      const double root = (blk.eigenvalue.real() - c.metric_shift - c.complement_shift) / c.scale;
      for (double x : v)
        if (std::fabs(x - root) <= tol)
          throw Error(ErrorCode::DegenerateSpectrum, "eigenvalue on a coordinate boundary");
    }
  }
  return {v[0], v[1], v[2]};
}

}  // namespace sepweb
