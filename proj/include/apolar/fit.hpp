#pragma once

#include "apolar/matrix.hpp"
#include "apolar/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace apolar {

// The unique homogeneous degree-d polynomial in the given ring interpolating
// all sample points, or nullopt when the sample set is too small,
// rank-deficient, or inconsistent (caller resamples).
std::optional<Poly> fit_homogeneous(
    const std::vector<std::pair<std::vector<Rational>, Rational>>& points, int degree, Ring ring);

}  // namespace apolar
