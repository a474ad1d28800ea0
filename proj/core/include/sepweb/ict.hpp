#pragma once

// Separable coordinates of an irreducible concircular tensor: the map from the
// eigenvalue triple (u, v, w) to canonical coordinates, its metric, and the inverse.

#include <array>
#include <vector>

#include "sepweb/concircular.hpp"

namespace sepweb {

enum class ICTKind { Central, Axial };

struct CanonicalICTData {
  ICTKind kind = ICTKind::Central;
  int k = 0;     // central: size of the nilpotent block; axial: length of the axis sequence
  int eps0 = 1;  // central: sign of the nilpotent block; axial: sign of L
  int eps = 1;   // sign in the metric formula
  // Axial skew-normal sequence e_1..e_k carrying x^1..x^k.
  std::vector<Vec3M> axis;
  // Nilpotent block of A_c (if any): directions f_1..f_j and the block sign.
  std::vector<Vec3M> block;
  int block_sign = 1;
  // Diagonal remainder.
  std::vector<double> lambda;
  std::vector<int> eps_i;
  std::vector<Vec3M> dirs;
  // Optional conjugate pair alpha +- i beta on the orthonormal (pair_e0, pair_e1).
  bool has_pair = false;
  double alpha = 0.0;
  double beta = 0.0;
  Vec3M pair_e0;
  Vec3M pair_e1;
  // Char. polynomial of A_c on the complement, ascending coefficients.
  std::vector<double> B;
};

// Throws DegenerateSubspace for Cartesian or reducible tensors.
CanonicalICTData ict_data(const CanonicalCT& c);

struct SeparableTriple {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

// Canonical coordinates of the point with eigenvalues s. RangeViolation when a squared
// coordinate is negative, DegenerateTriple on collisions.
Vec3M central_forward(const CanonicalICTData& d, const SeparableTriple& s);
Vec3M axial_forward(const CanonicalICTData& d, const SeparableTriple& s);
Vec3M ict_forward(const CanonicalICTData& d, const SeparableTriple& s);

// Diagonal metric components in (u, v, w).
std::array<double, 3> ict_metric(const CanonicalICTData& d, const SeparableTriple& s);

// Eigenvalues of L at p + offset, descending. ComplexSpectrum or DegenerateSpectrum,
// the latter also when an eigenvalue sits on a root of B (a coordinate boundary).
SeparableTriple ict_invert(const ConcircularTensor& l, const Vec3M& p, const Vec3M& offset);

}  // namespace sepweb
