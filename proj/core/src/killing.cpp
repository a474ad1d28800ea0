#include "sepweb/killing.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sepweb/errors.hpp"
#include "sepweb/linalg.hpp"

namespace sepweb {

namespace {

struct MonomialTable {
  std::array<std::array<int, 3>, Poly3::kTerms> exps{};
  std::array<int, 125> lookup{};

  MonomialTable() {
    lookup.fill(-1);
    int n = 0;
    for (int d = 0; d <= Poly3::kMaxDegree; ++d)
      for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) {
          const int k = d - i - j;
          exps[static_cast<std::size_t>(n)] = {i, j, k};
          lookup[static_cast<std::size_t>(25 * i + 5 * j + k)] = n;
          ++n;
        }
  }
};

const MonomialTable& table() {
  static const MonomialTable t;
  return t;
}

}  // namespace

int Poly3::index(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i + j + k > kMaxDegree) return -1;
  return table().lookup[static_cast<std::size_t>(25 * i + 5 * j + k)];
}

Poly3 Poly3::constant(double c) {
  Poly3 p;
  p.c_[0] = c;
  return p;
}

Poly3 Poly3::coordinate(int axis) {
  Poly3 p;
  p.coeff(axis == 0 ? 1 : 0, axis == 1 ? 1 : 0, axis == 2 ? 1 : 0) = 1.0;
  return p;
}

double Poly3::coeff(int i, int j, int k) const { return c_[static_cast<std::size_t>(index(i, j, k))]; }
double& Poly3::coeff(int i, int j, int k) { return c_[static_cast<std::size_t>(index(i, j, k))]; }

double Poly3::operator()(const Vec3M& p) const {
  std::array<std::array<double, kMaxDegree + 1>, 3> pw{};
  for (int a = 0; a < 3; ++a) {
    pw[static_cast<std::size_t>(a)][0] = 1.0;
    for (int e = 1; e <= kMaxDegree; ++e)
      pw[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] =
          pw[static_cast<std::size_t>(a)][static_cast<std::size_t>(e - 1)] * p[a];
  }
  double r = 0.0;
  for (int n = 0; n < kTerms; ++n) {
    const auto& e = table().exps[static_cast<std::size_t>(n)];
    r += c_[static_cast<std::size_t>(n)] * pw[0][static_cast<std::size_t>(e[0])] *
         pw[1][static_cast<std::size_t>(e[1])] * pw[2][static_cast<std::size_t>(e[2])];
  }
  return r;
}

Poly3 Poly3::partial(int axis) const {
  Poly3 r;
  for (int n = 0; n < kTerms; ++n) {
    auto e = table().exps[static_cast<std::size_t>(n)];
    const int pwr = e[static_cast<std::size_t>(axis)];
    if (pwr == 0) continue;
    e[static_cast<std::size_t>(axis)] -= 1;
    r.coeff(e[0], e[1], e[2]) += pwr * c_[static_cast<std::size_t>(n)];
  }
  return r;
}

int Poly3::degree() const {
  int d = -1;
  for (int n = 0; n < kTerms; ++n) {
    if (c_[static_cast<std::size_t>(n)] == 0.0) continue;
    const auto& e = table().exps[static_cast<std::size_t>(n)];
    d = std::max(d, e[0] + e[1] + e[2]);
  }
  return d;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (int n = 0; n < kTerms; ++n) c_[static_cast<std::size_t>(n)] += o.c_[static_cast<std::size_t>(n)];
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (int n = 0; n < kTerms; ++n) c_[static_cast<std::size_t>(n)] -= o.c_[static_cast<std::size_t>(n)];
  return *this;
}

Poly3& Poly3::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 r;
  const auto& ex = table().exps;
  for (int n = 0; n < Poly3::kTerms; ++n) {
    const double ca = a.c_[static_cast<std::size_t>(n)];
    if (ca == 0.0) continue;
    for (int m = 0; m < Poly3::kTerms; ++m) {
      const double cb = b.c_[static_cast<std::size_t>(m)];
      if (cb == 0.0) continue;
      const auto& ea = ex[static_cast<std::size_t>(n)];
      const auto& eb = ex[static_cast<std::size_t>(m)];
      const int idx = Poly3::index(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]);
      if (idx < 0) throw Error(ErrorCode::DegenerateSubspace, "polynomial degree exceeds 4");
      r.c_[static_cast<std::size_t>(idx)] += ca * cb;
    }
  }
  return r;
}

Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
Poly3 operator*(double s, Poly3 a) { return a *= s; }

int PolySymTensor::index(int i, int j) {
  return static_cast<int>(SymBilinear::index(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
}

PolySymTensor PolySymTensor::metric() {
  PolySymTensor g;
  for (int i = 0; i < 3; ++i) g.at(i, i) = Poly3::constant(kEta[static_cast<std::size_t>(i)]);
  return g;
}

SymBilinear PolySymTensor::evaluate(const Vec3M& p) const {
  SymBilinear b;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = at(i, j)(p);
  return b;
}

namespace {

using PolyMatrix = std::array<std::array<Poly3, 3>, 3>;

// Mixed components K^i_j = eta_i K_ij.
PolyMatrix raise_first(const PolySymTensor& k) {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = kEta[static_cast<std::size_t>(i)] * k.at(i, j);
  return m;
}

Poly3 mixed_trace(const PolySymTensor& k) {
  Poly3 t;
  for (int i = 0; i < 3; ++i) t += kEta[static_cast<std::size_t>(i)] * k.at(i, i);
  return t;
}

PolySymTensor combine(const Poly3& trace_part, const PolySymTensor& sub) {
  PolySymTensor r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      r.at(i, j) = -1.0 * sub.at(i, j);
      if (i == j) r.at(i, j) += kEta[static_cast<std::size_t>(i)] * trace_part;
    }
  return r;
}

}  // namespace

PolySymTensor ct_polynomial(const ConcircularTensor& l) {
  const SymBilinear a = lower(l.A);
  std::array<Poly3, 3> rflat;
  std::array<double, 3> wflat{};
  const Covector wf = lower(l.w);
  for (int i = 0; i < 3; ++i) {
    rflat[static_cast<std::size_t>(i)] = kEta[static_cast<std::size_t>(i)] * Poly3::coordinate(i);
    wflat[static_cast<std::size_t>(i)] = wf[static_cast<std::size_t>(i)];
  }
  PolySymTensor r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      Poly3 e = Poly3::constant(a(ui, uj));
      e += wflat[ui] * rflat[uj] + wflat[uj] * rflat[ui];
      e += l.m * (rflat[ui] * rflat[uj]);
      r.at(i, j) = e;
    }
  return r;
}

PolySymTensor kbdt(const ConcircularTensor& l) {
  const PolySymTensor lp = ct_polynomial(l);
  return combine(mixed_trace(lp), lp);
}

KSAlgebra ks_algebra(const ConcircularTensor& l) {
  KSAlgebra ks;
  ks.g = PolySymTensor::metric();
  const PolySymTensor lp = ct_polynomial(l);
  ks.k1 = combine(mixed_trace(lp), lp);
  // (K1 L)_ij = K1_ik L^k_j, symmetric because K1 and L commute.
  const PolyMatrix lm = raise_first(lp);
  PolySymTensor prod;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Poly3 e;
      for (int k = 0; k < 3; ++k) e += ks.k1.at(i, k) * lm[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      prod.at(i, j) = e;
    }
  ks.k2 = combine(0.5 * mixed_trace(prod), prod);
  return ks;
}

double killing_residual(const PolySymTensor& k, const Vec3M& p) {
  std::array<PolySymTensor, 3> d;
  for (int a = 0; a < 3; ++a)
    for (int n = 0; n < 6; ++n) d[static_cast<std::size_t>(a)].c[static_cast<std::size_t>(n)] = k.c[static_cast<std::size_t>(n)].partial(a);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int l = j; l < 3; ++l) {
        const double r = d[static_cast<std::size_t>(i)].at(j, l)(p) + d[static_cast<std::size_t>(j)].at(l, i)(p) +
                         d[static_cast<std::size_t>(l)].at(i, j)(p);
        worst = std::max(worst, std::fabs(r));
      }
  return worst;
}

double pullback_offdiagonal(const SymBilinear& k, const std::array<std::array<double, 3>, 3>& jac) {
  // Off-diagonal entries relative to the size of the terms that cancel in them,
  // so points far out or near a chart boundary are judged at working precision.
  double off = 0.0;
  double scale = 1.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      double s = 0.0;
      double mag = 0.0;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const double term = jac[i][a] * k(i, j) * jac[j][b];
          s += term;
          mag += std::fabs(term);
        }
      scale = std::max(scale, mag);
      if (a != b) off = std::max(off, std::fabs(s));
    }
  return off / scale;
}

double ks_independence(const KSAlgebra& ks) {
  const std::array<const PolySymTensor*, 3> ts{&ks.g, &ks.k1, &ks.k2};
  std::array<std::vector<double>, 3> rows;
  for (std::size_t r = 0; r < 3; ++r) {
    for (const Poly3& p : ts[r]->c)
      rows[r].insert(rows[r].end(), p.coeffs().begin(), p.coeffs().end());
    double norm = 0.0;
    for (double x : rows[r]) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double& x : rows[r]) x /= norm;
  }
  std::vector<std::array<double, 3>> tall(rows[0].size());
  for (std::size_t i = 0; i < tall.size(); ++i) tall[i] = {rows[0][i], rows[1][i], rows[2][i]};
  return singular_values_tall(std::move(tall))[2];
}

double line_invariance(const PolySymTensor& k, const Vec3M& x0, const Vec3M& v,
                       const std::array<double, 5>& s) {
  auto kvv = [&](double si) {
    const SymBilinear b = k.evaluate(x0 + si * v);
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r += b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * v[i] * v[j];
    return r;
  };
  const double ref = kvv(0.0);
  double worst = 0.0;
  for (double si : s) worst = std::max(worst, std::fabs(kvv(si) - ref));
  return worst / std::max(1.0, std::fabs(ref));
}

}  // namespace sepweb
