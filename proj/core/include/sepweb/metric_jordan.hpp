#pragma once

// Metric-Jordan canonical form of a self-adjoint operator on E^3_1.
//
// Jordan convention: A b1 = lambda b1, A b2 = lambda b2 + b1, A b3 = lambda b3 + b2.
// Block Gram matrices are eps*S_k (anti-diagonal). A conjugate pair alpha +- i beta
// (beta > 0) is realized on an orthonormal (e0 timelike, e1 spacelike) with
// A e0 = alpha e0 - beta e1 and A e1 = beta e0 + alpha e1.

#include <complex>
#include <cstdint>
#include <vector>

#include "sepweb/minkowski.hpp"

namespace sepweb {

struct JordanBlockSpec {
  int size = 1;                        // 1, 2 or 3
  int sign = 1;                        // eps
  std::complex<double> eigenvalue{};   // imaginary part nonzero only for a conjugate pair

  bool is_complex() const { return eigenvalue.imag() != 0.0; }
};

struct MetricJordanForm {
  std::vector<JordanBlockSpec> blocks;
  std::vector<Vec3M> basis;  // concatenated per-block bases, in block order
};

// Block order: a conjugate pair first, otherwise a 2- or 3-block first, otherwise the
// timelike 1-block first; remaining 1-blocks ascending by eigenvalue.
MetricJordanForm metric_jordan_form(const Operator3& a, double tol = 1e-10);

// Jordan matrix in block coordinates (columns follow form.basis order).
Operator3 jordan_matrix(const MetricJordanForm& form);

// Expected Gram matrix of the basis: eps*S_k per block, diag(-1,1) for a complex pair.
Operator3 target_gram(const MetricJordanForm& form);

// Fixed realization basis in (t,x,y) for the block pattern: three 1-blocks on
// (e_t,e_x,e_y) with the timelike block on e_t; a pair on (e_t,e_x); a 2-block on
// (d_xi, d_eta) (eps=+1) or (-d_xi, d_eta) (eps=-1); a 3-block on (d_xi, e_y, d_eta).
Operator3 standard_realization(const MetricJordanForm& form);

// q * (T J T^-1) * q^-1 with T the standard realization.
Operator3 synthesize_operator(const MetricJordanForm& form, const Operator3& q);

// Boost of the given rapidity in the t-x plane, then rotation in the x-y plane,
// then optional reflections of t and x.
Operator3 pseudo_orthogonal(double rapidity, double angle, bool flip_t, bool flip_x);
Operator3 random_pseudo_orthogonal(std::uint64_t seed);

}  // namespace sepweb
