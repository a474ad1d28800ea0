#include "sepweb/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sepweb/errors.hpp"

namespace sepweb {

namespace {

constexpr double kPoleTol = 1e-14;

void check_modulus(double k) {
  if (!(k >= 0.0 && k <= 1.0))
    throw Error(ErrorCode::ModulusOutOfRange, "modulus " + std::to_string(k));
}

}  // namespace

JacobiTriple jacobi_elliptic(double u, double k) {
  check_modulus(k);
  if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (k == 1.0) {
    const double s = 1.0 / std::cosh(u);
    return {std::tanh(u), s, s};
  }
  std::array<double, 32> a{};
  std::array<double, 32> c{};
  a[0] = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  c[0] = k;
  int n = 0;
  while (std::fabs(c[n]) > 1e-17 && n < 30) {
    const double an = a[n];
    a[n + 1] = 0.5 * (an + b);
    c[n + 1] = 0.5 * (an - b);
    b = std::sqrt(an * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i > 0; --i) phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  return {sn, cn, std::sqrt(1.0 - k * k * sn * sn)};
}

double elliptic_K(double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw Error(ErrorCode::ModulusOutOfRange, "K requires 0 <= k < 1, got " + std::to_string(k));
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  for (int i = 0; i < 40 && std::fabs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (a + b);
}

namespace {

struct NameEntry {
  const char* name;
  JacobiFn fn;
};

constexpr std::array<NameEntry, 12> kNames{{{"sn", JacobiFn::sn}, {"cn", JacobiFn::cn},
                                            {"dn", JacobiFn::dn}, {"sc", JacobiFn::sc},
                                            {"sd", JacobiFn::sd}, {"cs", JacobiFn::cs},
                                            {"cd", JacobiFn::cd}, {"ds", JacobiFn::ds},
                                            {"dc", JacobiFn::dc}, {"ns", JacobiFn::ns},
                                            {"nc", JacobiFn::nc}, {"nd", JacobiFn::nd}}};

// Letters p, q of pq(u) = p(u) / q(u), with n standing for 1.
double letter(char l, const JacobiTriple& j) {
  switch (l) {
    case 's': return j.sn;
    case 'c': return j.cn;
    case 'd': return j.dn;
    default: return 1.0;
  }
}

// d/du of the letter function.
double letter_prime(char l, const JacobiTriple& j, double k) {
  switch (l) {
    case 's': return j.cn * j.dn;
    case 'c': return -j.sn * j.dn;
    case 'd': return -k * k * j.sn * j.cn;
    default: return 0.0;
  }
}

}  // namespace

bool parse_jacobi_name(std::string_view name, JacobiFn& out) {
  for (const auto& e : kNames) {
    if (name == e.name) {
      out = e.fn;
      return true;
    }
  }
  return false;
}

const char* jacobi_name(JacobiFn f) {
  for (const auto& e : kNames)
    if (e.fn == f) return e.name;
  return "?";
}

DualScalar jacobi(JacobiFn f, const DualScalar& u, double k) {
  const JacobiTriple j = jacobi_elliptic(u.value, k);
  const char* nm = jacobi_name(f);
  const double num = letter(nm[0], j);
  const double den = letter(nm[1], j);
  if (std::fabs(den) < kPoleTol)
    throw Error(ErrorCode::PoleEncountered, std::string(nm) + " at u=" + std::to_string(u.value));
  const double dnum = letter_prime(nm[0], j, k);
  const double dden = letter_prime(nm[1], j, k);
  return chain(u, num / den, (dnum * den - num * dden) / (den * den));
}

double jacobi(JacobiFn f, double u, double k) { return jacobi(f, DualScalar(u), k).value; }

}  // namespace sepweb
