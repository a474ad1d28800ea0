#pragma once

// Concircular tensors L = A + 2 w.r + m r.r on E^3_1 and their canonical forms.

#include <array>
#include <string>
#include <vector>

#include "sepweb/linalg.hpp"
#include "sepweb/metric_jordan.hpp"
#include "sepweb/minkowski.hpp"

namespace sepweb {

struct ConcircularTensor {
  Operator3 A;  // mixed, self-adjoint
  Vec3M w;
  double m = 0.0;
};

// Mixed operator A + w (x) p-flat + p (x) w-flat + m p (x) p-flat.
Operator3 evaluate_ct(const ConcircularTensor& l, const Vec3M& p);

// The tensor p -> L(p + o), written again as (A, w, m).
ConcircularTensor translate(const ConcircularTensor& l, const Vec3M& o);

enum class CTKind { Cartesian, Central, NonNullAxial, NullAxial };

const char* kind_name(CTKind kind);

struct CTClass {
  CTKind kind = CTKind::Cartesian;
  int eps = 1;  // sign of L; meaningful for the axial classes
  int k = 0;    // 1 for non-null axial, 2 or 3 for null axial, 0 otherwise
};

// Canonical tensor Lc(q) = scale * F^-1 L(o + F q) F + metric_shift * I
//                          + complement_shift * P, P the g-projector onto D-perp.
struct CanonicalCT {
  CTClass cls;
  Operator3 canonical_A;
  Vec3M canonical_w;
  double canonical_m = 0.0;
  Vec3M origin_shift;        // o
  double scale = 1.0;
  double metric_shift = 0.0;
  double complement_shift = 0.0;
  Operator3 complement_projector;
  Operator3 frame = Operator3::identity();  // F, pseudo-orthogonal
  bool trivial = false;
  // Metric-Jordan form of A_c on D-perp in canonical coordinates.
  MetricJordanForm complement;
  // Skew-normal sequence e_1..e_k (axial) in canonical coordinates.
  std::vector<Vec3M> axis;
};

CanonicalCT classify_ct(const ConcircularTensor& l);

ConcircularTensor canonical_tensor(const CanonicalCT& c);

// Applies the recorded equivalence to l. Reproduces canonical_tensor(c) when c = classify_ct(l).
ConcircularTensor apply_equivalence(const ConcircularTensor& l, const CanonicalCT& c);

// Maps canonical coordinates back to the input coordinates: o + F q.
Vec3M from_canonical(const CanonicalCT& c, const Vec3M& q);
Vec3M to_canonical(const CanonicalCT& c, const Vec3M& p);

bool is_reducible(const ConcircularTensor& l);
bool is_reducible(const CanonicalCT& c);

struct CharPolySet {
  std::vector<double> B;  // ascending coefficients, monic, degree 3 - D_dim
  Cubic p_at_point;
  int D_dim = 0;
};

// p is given in canonical coordinates.
CharPolySet char_polys(const CanonicalCT& c, const Vec3M& p);

// Evaluates a polynomial with ascending coefficients.
double poly_eval(const std::vector<double>& coeffs, double z);

struct PointSpectrum {
  bool complex = false;
  std::array<double, 3> values{};  // descending u >= v >= w
};

// det(z - L(p)) from the structure of L, accurate far from the origin.
Cubic ct_char_poly(const ConcircularTensor& l, const Vec3M& p);

PointSpectrum point_eigenvalues(const ConcircularTensor& l, const Vec3M& p);

// Canonical fingerprint used to match a tensor against catalog generators modulo
// geometric equivalence.
std::string web_fingerprint(const CanonicalCT& c);

}  // namespace sepweb
