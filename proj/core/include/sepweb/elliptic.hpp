#pragma once

// Jacobi elliptic functions sn, cn, dn with modulus k (not parameter m = k^2),
// the nine quotient functions and the complete integral K.

#include <string_view>

#include "sepweb/dual.hpp"

namespace sepweb {

struct JacobiTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

// Descending Landen / AGM scheme. k = 1 falls back to the hyperbolic limit.
// Throws ModulusOutOfRange outside [0, 1].
JacobiTriple jacobi_elliptic(double u, double k);

// Throws ModulusOutOfRange for k outside [0, 1).
double elliptic_K(double k);

enum class JacobiFn { sn, cn, dn, sc, sd, cs, cd, ds, dc, ns, nc, nd };

// Parses "sn", "cd", ...; returns false for anything else.
bool parse_jacobi_name(std::string_view name, JacobiFn& out);
const char* jacobi_name(JacobiFn f);

// Throws PoleEncountered when the denominator of a quotient vanishes.
double jacobi(JacobiFn f, double u, double k);
// Derivative with respect to u only; the modulus is a parameter.
DualScalar jacobi(JacobiFn f, const DualScalar& u, double k);

}  // namespace sepweb
