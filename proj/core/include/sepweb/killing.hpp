#pragma once

// Polynomial symmetric tensors on E^3_1, the Killing-Bertrand-Darboux tensor K1 and
// the Killing-Staeckel algebra (g, K1, K2) of a concircular tensor.

#include <array>

#include "sepweb/concircular.hpp"

namespace sepweb {

// Dense polynomial in (t, x, y) of total degree <= 4.
class Poly3 {
 public:
  static constexpr int kMaxDegree = 4;
  static constexpr int kTerms = 35;

  Poly3() = default;
  static Poly3 constant(double c);
  static Poly3 coordinate(int axis);  // 0 = t, 1 = x, 2 = y

  double coeff(int i, int j, int k) const;
  double& coeff(int i, int j, int k);
  const std::array<double, kTerms>& coeffs() const { return c_; }

  double operator()(const Vec3M& p) const;
  Poly3 partial(int axis) const;
  int degree() const;

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(double s);
  // Throws DegenerateSubspace if the product exceeds degree 4.
  friend Poly3 operator*(const Poly3& a, const Poly3& b);

  static int index(int i, int j, int k);

 private:
  std::array<double, kTerms> c_{};
};

Poly3 operator+(Poly3 a, const Poly3& b);
Poly3 operator-(Poly3 a, const Poly3& b);
Poly3 operator*(double s, Poly3 a);

// Covariant symmetric tensor with polynomial components.
struct PolySymTensor {
  std::array<Poly3, 6> c;  // (tt, tx, ty, xx, xy, yy)

  static int index(int i, int j);
  const Poly3& at(int i, int j) const { return c[static_cast<std::size_t>(index(i, j))]; }
  Poly3& at(int i, int j) { return c[static_cast<std::size_t>(index(i, j))]; }

  static PolySymTensor metric();
  SymBilinear evaluate(const Vec3M& p) const;
};

// Covariant components of L.
PolySymTensor ct_polynomial(const ConcircularTensor& l);

// K1 = tr(L) g - L.
PolySymTensor kbdt(const ConcircularTensor& l);

struct KSAlgebra {
  PolySymTensor g;
  PolySymTensor k1;
  PolySymTensor k2;
};

// K2 = (1/2) tr(K1 L) g - K1 L.
KSAlgebra ks_algebra(const ConcircularTensor& l);

// max |d_i K_jk + d_j K_ki + d_k K_ij| at p.
double killing_residual(const PolySymTensor& k, const Vec3M& p);

// Largest off-diagonal entry of J^T K(p) J relative to the summed magnitudes of its terms.
double pullback_offdiagonal(const SymBilinear& k, const std::array<std::array<double, 3>, 3>& jac);

// Smallest singular value of the row-normalized 3 x 210 coefficient matrix of (g, K1, K2).
double ks_independence(const KSAlgebra& ks);

// Largest relative deviation of K(v, v) from its value at s = 0 along x0 + s v,
// sampled at the given parameters.
double line_invariance(const PolySymTensor& k, const Vec3M& x0, const Vec3M& v,
                       const std::array<double, 5>& s);

}  // namespace sepweb
