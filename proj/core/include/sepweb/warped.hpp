#pragma once

// Two-factor warped products N0 x_rho N1 -> E^3_1 and the decomposition of a
// reducible concircular tensor into one.

#include <array>
#include <vector>

#include "sepweb/concircular.hpp"
#include "sepweb/dual.hpp"

namespace sepweb {

enum class SphereKind { Flat, ConstCurv, Parabolic };

struct SphereSpec {
  SphereKind kind = SphereKind::Flat;
  Vec3M base;                // p-bar (Flat, Parabolic) or the center c (ConstCurv)
  Vec3M a;                   // mean curvature data; zero for Flat
  double curvature = 0.0;    // <a, a> for ConstCurv
  std::vector<Vec3M> basis;  // basis of V
};

// Throws DegenerateSubspace when V is degenerate.
SphereSpec sphere_from_triple(const Vec3M& pbar, const std::vector<Vec3M>& v, const Vec3M& a);

struct InitialData {
  Vec3M pbar;
  std::vector<Vec3M> v0;
  std::vector<Vec3M> v1;
  Vec3M a;  // zero for a Cartesian product
};

enum class MapForm { Cartesian, NonNull, Null };

struct WarpedProduct {
  Vec3M origin;  // canonical position of the tensor; psi is applied relative to it
  InitialData data;
  SphereSpec sphere;
  MapForm form = MapForm::Cartesian;
  Vec3M b;  // null form: lightlike partner of a with <a, b> = 1
  // True when N1 has two components and the image needs <a, P1 p> > 0.
  bool fiber_disconnected = false;

  int dim0() const { return static_cast<int>(data.v0.size()); }
  int dim1() const { return static_cast<int>(data.v1.size()); }
};

// Builds psi from initial data in canonical form.
WarpedProduct make_warped_product(const InitialData& data, const Vec3M& origin = {});

// rho(p0) = <a, p0>, or 1 for a Cartesian product. p0 is relative to the origin.
double warping(const WarpedProduct& wp, const Vec3M& p0);

// p0 in V0 (relative to the origin) and p1 on N1. OutsideGeodesicFactor if rho <= 0.
Vec3M wp_map(const WarpedProduct& wp, const Vec3M& p0, const Vec3M& p1);

bool wp_image_contains(const WarpedProduct& wp, const Vec3M& p);

// Local parametrization: the first dim0 coordinates are components along data.v0,
// the rest are fiber coordinates q along data.v1.
template <class T>
std::array<T, 3> sphere_point(const WarpedProduct& wp, const std::array<T, 3>& coords);
template <class T>
std::array<T, 3> wp_chart(const WarpedProduct& wp, const std::array<T, 3>& coords);

// True when the fiber coordinates lie in the domain of the parametrization and rho > 0.
bool wp_coords_valid(const WarpedProduct& wp, const std::array<double, 3>& coords);

struct Decomposition {
  WarpedProduct wp;
  ConcircularTensor restricted;  // L-tilde on N0, written in ambient coordinates relative to the origin
  ConcircularTensor source;
};

// Algorithm for reducible tensors. The hint picks the causal character of a
// (or its sign for a degenerate eigenspace). NotReducible, NoCanonicalPoint.
Decomposition decompose_reducible(const ConcircularTensor& l, const Vec3M& hint);

// max |J^T g J - blockdiag(g0, rho^2 g1)| / max(1, |expected|) at the given coordinates.
double wp_isometry_residual(const WarpedProduct& wp, const std::array<double, 3>& coords);

// Sphere tangent spaces must be invariant under L at psi(coords).
double wp_adaptedness_residual(const Decomposition& d, const std::array<double, 3>& coords);

// Eigenvalues of L-tilde at p0 must be eigenvalues of L at psi(p0, p1).
double wp_restriction_residual(const Decomposition& d, const std::array<double, 3>& coords);

}  // namespace sepweb
