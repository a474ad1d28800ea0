#pragma once

// Small dense kernels: characteristic cubics, cubic roots, symmetric eigensolve.

#include <array>
#include <complex>
#include <vector>

#include "sepweb/minkowski.hpp"

namespace sepweb {

// Monic cubic z^3 + c[2] z^2 + c[1] z + c[0].
struct Cubic {
  std::array<double, 3> c{};

  double operator()(double z) const { return ((z + c[2]) * z + c[1]) * z + c[0]; }
  std::complex<double> operator()(std::complex<double> z) const {
    return ((z + c[2]) * z + c[1]) * z + c[0];
  }
  double derivative(double z) const { return (3.0 * z + 2.0 * c[2]) * z + c[1]; }
};

// det(zI - A)
Cubic char_poly(const Operator3& a);

struct CubicRoots {
  int n_real = 0;                    // 3 or 1
  std::array<double, 3> real{};      // ascending when n_real == 3
  std::complex<double> pair{};       // root with positive imaginary part when n_real == 1
};

// Closed-form roots followed by a Newton polish of each real root.
CubicRoots cubic_roots(const Cubic& p);

struct SymEigen {
  std::array<double, 3> values{};  // ascending
  Operator3 vectors;               // columns are Euclidean-orthonormal eigenvectors
};

// Cyclic Jacobi iteration on a Euclidean-symmetric matrix.
SymEigen sym_eig3(const Operator3& s);

struct Singular3 {
  std::array<double, 3> sigma{};  // descending
  Operator3 right;                // columns: right singular vectors in the same order
};

// One-sided Jacobi, accurate for small singular values.
Singular3 singular_values3(const Operator3& a);

// Singular values (descending) of a tall matrix given by its rows, via one-sided Jacobi.
std::array<double, 3> singular_values_tall(std::vector<std::array<double, 3>> rows);

}  // namespace sepweb
