#include "sepweb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace sepweb {

Cubic char_poly(const Operator3& a) {
  const auto& m = a.m;
  const double minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                        m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  return Cubic{{-det(a), minors, -trace(a)}};
}

namespace {

double polish(const Cubic& p, double z) {
  for (int it = 0; it < 2; ++it) {
    const double f = p(z);
    const double df = p.derivative(z);
    if (df == 0.0) break;
    const double step = f / df;
    const double candidate = z - step;
    if (std::fabs(p(candidate)) >= std::fabs(f)) break;
    z = candidate;
  }
  return z;
}

}  // namespace

CubicRoots cubic_roots(const Cubic& poly) {
  const double a2 = poly.c[2];
  const double a1 = poly.c[1];
  const double a0 = poly.c[0];
  const double shift = -a2 / 3.0;
  const double p = a1 - a2 * a2 / 3.0;
  const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;

  CubicRoots r;
  if (disc <= 0.0) {
    r.n_real = 3;
    if (p == 0.0) {
      r.real = {shift, shift, shift};
    } else {
      const double m = 2.0 * std::sqrt(-p / 3.0);
      double arg = 3.0 * q / (p * m);
      arg = std::clamp(arg, -1.0, 1.0);
      const double theta = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k)
        r.real[k] = shift + m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
    }
    for (double& z : r.real) z = polish(poly, z);
    std::sort(r.real.begin(), r.real.end());
  } else {
    r.n_real = 1;
    const double s = std::sqrt(disc);
    const double big = -std::copysign(std::cbrt(std::fabs(q) / 2.0 + s), q);
    const double small = big != 0.0 ? -p / (3.0 * big) : 0.0;
    const double y = big + small;
    r.real = {polish(poly, shift + y), 0.0, 0.0};
    // Deflate by the polished real root for the pair.
    const double z0 = r.real[0];
    const double b = a2 + z0;
    const double c = a1 + z0 * b;
    const double re = -b / 2.0;
    const double im2 = c - re * re;
    r.pair = {re, std::sqrt(std::max(im2, 0.0))};
  }
  return r;
}

SymEigen sym_eig3(const Operator3& s) {
  Operator3 a = s;
  Operator3 v = Operator3::identity();
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) off += a.m[i][j] * a.m[i][j];
    if (off < 1e-300) break;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a.m[p][q];
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = (a.m[q][q] - a.m[p][p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a.m[k][p];
          const double akq = a.m[k][q];
          a.m[k][p] = c * akp - sn * akq;
          a.m[k][q] = sn * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a.m[p][k];
          const double aqk = a.m[q][k];
          a.m[p][k] = c * apk - sn * aqk;
          a.m[q][k] = sn * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v.m[k][p];
          const double vkq = v.m[k][q];
          v.m[k][p] = c * vkp - sn * vkq;
          v.m[k][q] = sn * vkp + c * vkq;
        }
      }
    }
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a.m[i][i] < a.m[j][j]; });
  SymEigen r;
  for (int k = 0; k < 3; ++k) {
    r.values[k] = a.m[order[k]][order[k]];
    for (int i = 0; i < 3; ++i) r.vectors.m[i][k] = v.m[i][order[k]];
  }
  return r;
}

namespace {

// Rotates column pairs of rows (m x 3) until mutually orthogonal; accumulates v.
void hestenes(std::vector<std::array<double, 3>>& rows, Operator3& v) {
  v = Operator3::identity();
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (const auto& r : rows) {
          alpha += r[p] * r[p];
          beta += r[q] * r[q];
          gamma += r[p] * r[q];
        }
        if (std::fabs(gamma) <= 1e-15 * std::sqrt(alpha * beta) || gamma == 0.0) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (auto& r : rows) {
          const double rp = r[p];
          const double rq = r[q];
          r[p] = c * rp - s * rq;
          r[q] = s * rp + c * rq;
        }
        for (int k = 0; k < 3; ++k) {
          const double vp = v.m[k][p];
          const double vq = v.m[k][q];
          v.m[k][p] = c * vp - s * vq;
          v.m[k][q] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
}

}  // namespace

Singular3 singular_values3(const Operator3& a) {
  std::vector<std::array<double, 3>> rows(a.m.begin(), a.m.end());
  Operator3 v;
  hestenes(rows, v);
  std::array<double, 3> norms{};
  for (int k = 0; k < 3; ++k) {
    double n = 0.0;
    for (const auto& r : rows) n += r[k] * r[k];
    norms[k] = std::sqrt(n);
  }
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return norms[i] > norms[j]; });
  Singular3 r;
  for (int k = 0; k < 3; ++k) {
    r.sigma[k] = norms[order[k]];
    for (int i = 0; i < 3; ++i) r.right.m[i][k] = v.m[i][order[k]];
  }
  return r;
}

std::array<double, 3> singular_values_tall(std::vector<std::array<double, 3>> rows) {
  Operator3 v;
  hestenes(rows, v);
  std::array<double, 3> norms{};
  for (int k = 0; k < 3; ++k) {
    double n = 0.0;
    for (const auto& r : rows) n += r[k] * r[k];
    norms[k] = std::sqrt(n);
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  return norms;
}

}  // namespace sepweb
