#pragma once

// Forward-mode dual numbers with three partial derivatives.

#include <array>
#include <cmath>

namespace sepweb {

struct DualScalar {
  double value = 0.0;
  std::array<double, 3> d{};

  DualScalar() = default;
  DualScalar(double v) : value(v) {}  // NOLINT: constants promote implicitly
  DualScalar(double v, std::array<double, 3> partials) : value(v), d(partials) {}

  static DualScalar variable(double v, int slot) {
    DualScalar r(v);
    r.d[static_cast<std::size_t>(slot)] = 1.0;
    return r;
  }

  DualScalar& operator+=(const DualScalar& o) {
    value += o.value;
    for (int i = 0; i < 3; ++i) d[i] += o.d[i];
    return *this;
  }
  DualScalar& operator-=(const DualScalar& o) {
    value -= o.value;
    for (int i = 0; i < 3; ++i) d[i] -= o.d[i];
    return *this;
  }
  DualScalar& operator*=(const DualScalar& o) {
    for (int i = 0; i < 3; ++i) d[i] = d[i] * o.value + value * o.d[i];
    value *= o.value;
    return *this;
  }
  DualScalar& operator/=(const DualScalar& o) {
    const double inv = 1.0 / o.value;
    for (int i = 0; i < 3; ++i) d[i] = (d[i] - value * inv * o.d[i]) * inv;
    value *= inv;
    return *this;
  }
};

inline DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
inline DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
inline DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
inline DualScalar operator/(DualScalar a, const DualScalar& b) { return a /= b; }
inline DualScalar operator-(const DualScalar& a) {
  return {-a.value, {-a.d[0], -a.d[1], -a.d[2]}};
}

// f(a) with f'(a) given: chain rule.
inline DualScalar chain(const DualScalar& a, double f, double fprime) {
  return {f, {fprime * a.d[0], fprime * a.d[1], fprime * a.d[2]}};
}

inline double value_of(double v) { return v; }
inline double value_of(const DualScalar& v) { return v.value; }

inline DualScalar sin(const DualScalar& a) { return chain(a, std::sin(a.value), std::cos(a.value)); }
inline DualScalar cos(const DualScalar& a) { return chain(a, std::cos(a.value), -std::sin(a.value)); }
inline DualScalar tan(const DualScalar& a) {
  const double t = std::tan(a.value);
  return chain(a, t, 1.0 + t * t);
}
inline DualScalar exp(const DualScalar& a) {
  const double e = std::exp(a.value);
  return chain(a, e, e);
}
inline DualScalar log(const DualScalar& a) { return chain(a, std::log(a.value), 1.0 / a.value); }
inline DualScalar sinh(const DualScalar& a) { return chain(a, std::sinh(a.value), std::cosh(a.value)); }
inline DualScalar cosh(const DualScalar& a) { return chain(a, std::cosh(a.value), std::sinh(a.value)); }
inline DualScalar tanh(const DualScalar& a) {
  const double t = std::tanh(a.value);
  return chain(a, t, 1.0 - t * t);
}
inline DualScalar sqrt(const DualScalar& a) {
  const double s = std::sqrt(a.value);
  return chain(a, s, 0.5 / s);
}
inline DualScalar fabs(const DualScalar& a) {
  return a.value < 0 ? -a : a;
}
inline DualScalar atan2(const DualScalar& y, const DualScalar& x) {
  const double r2 = x.value * x.value + y.value * y.value;
  DualScalar r(std::atan2(y.value, x.value));
  for (int i = 0; i < 3; ++i) r.d[i] = (x.value * y.d[i] - y.value * x.d[i]) / r2;
  return r;
}
inline DualScalar pow(const DualScalar& a, double p) {
  const double v = std::pow(a.value, p);
  return chain(a, v, p * std::pow(a.value, p - 1.0));
}

}  // namespace sepweb
