#include "apolar/toric.hpp"

namespace apolar {

GradedQuotient toric_cohomology(const FanPtr& fan) {
    return ann_graded(volume_polynomial(fan));
}

}  // namespace apolar
