#pragma once

#include "apolar/poly.hpp"
#include "apolar/polytope.hpp"

namespace apolar {

struct ConvexIntegral {
    Rational value;
    bool degenerate = false;  // Delta(h) is lower-dimensional; value is 0
};

// Exact integral of the monomial lambda^mono (M-coordinates) over the convex
// polytope Delta(h). Faults when h is not convex.
ConvexIntegral integrate_convex(const VirtualPolytope& h, const Monomial& mono);

// Value at h of the unique polynomial extension of the convex integral to
// all virtual polytopes, computed by ample-shift Lagrange interpolation.
Rational integrate_virtual(const VirtualPolytope& h, const Monomial& mono);

// Ray-coordinate ring for symbolic polynomials on the space of virtual
// polytopes: one weight-1 variable per ray, named a, b, c, ...
Ring ray_ring(const Fan& fan);

// The homogeneous degree-(dim + |mono|) polynomial F in the ray variables
// with F(h) = integrate_virtual(h, mono), found by exact evaluation on an
// integer grid, homogeneous fit, and held-out verification.
Poly integral_polynomial(const FanPtr& fan, const Monomial& mono);

// integral_polynomial of the constant monomial: the volume polynomial.
Poly volume_polynomial(const FanPtr& fan);

}  // namespace apolar
