#pragma once

#include "apolar/integrate.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/toric.hpp"

namespace apolar {

// The base manifold enters only through its even-cohomology presentation
// data: generator ring (weights = halved cohomological degrees), potential,
// and socle degree.
struct BaseAlgebraData {
    Ring ring;
    Poly potential;
    int socle_degree = 0;
};

// Validates quasi-homogeneity of the potential at the stated socle degree and
// that its graded quotient has one-dimensional bottom and top.
BaseAlgebraData make_base_algebra(Ring ring, Poly potential, int socle_degree);

// Linear map from torus characters to weight-1 base classes: one image per
// lattice basis character.
struct ChernMap {
    int torus_rank = 0;
    std::vector<Poly> images;  // elements of the base ring, weight 1 or zero
};

ChernMap make_chern_map(const BaseAlgebraData& base, std::vector<Poly> images);

struct BundlePresentation {
    Ring ring;  // base generators first, then one weight-1 variable per ray
    Poly potential;
    GradedQuotient quotient;
    bool leray_hirsch = false;
};

// Combined polynomial ring for the bundle: base generators (input order,
// their weights), then the fan's ray variables (weight 1).
Ring combined_ring(const BaseAlgebraData& base, const Fan& fan);

// The (dim+i)-th horizontal part of the virtual polytope: the base class
// ((n+i)!/i!) * integral over Delta of c(lambda)^i. Homogeneous of weight i.
Poly horizontal_part(const VirtualPolytope& h, const ChernMap& chern,
                     const BaseAlgebraData& base, int i);

// The bundle potential: the integral over Delta of P_X(c(lambda) + gamma),
// assembled symbolically in the combined ring. Quasi-homogeneous of degree
// fan.dim + base.socle_degree.
Poly bundle_potential(const FanPtr& fan, const BaseAlgebraData& base, const ChernMap& chern);

// Even-cohomology presentation of the toric bundle: the graded quotient of
// the combined ring by the annihilator of the bundle potential, with the
// Leray-Hirsch certificate attached.
BundlePresentation bundle_cohomology(const FanPtr& fan, const BaseAlgebraData& base,
                                     const ChernMap& chern);

// True iff the presentation's Hilbert function equals the convolution of the
// base and fiber Hilbert functions. False signals a bug, not a fault.
bool leray_hirsch_check(const BundlePresentation& p, const BaseAlgebraData& base,
                        const FanPtr& fan);

}  // namespace apolar
