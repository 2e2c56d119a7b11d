#pragma once

#include "apolar/integrate.hpp"
#include "apolar/inverse_system.hpp"

namespace apolar {

// Even-degree cohomology presentation of the smooth projective toric variety
// of the fan: the graded quotient of the ray-variable ring (all weights 1)
// by the annihilator of the volume polynomial.
GradedQuotient toric_cohomology(const FanPtr& fan);

}  // namespace apolar
