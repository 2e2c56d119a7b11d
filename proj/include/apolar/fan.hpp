#pragma once

#include "apolar/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace apolar {

// Complete smooth simplicial fan in N = Z^dim, given by its primitive ray
// generators and the ray-index sets of its maximal cones. Cones are stored
// sorted, and the cone list itself is sorted, so "first cone" is canonical.
struct Fan {
    int dim = 0;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<int>> max_cones;

    int num_rays() const { return static_cast<int>(rays.size()); }
};

using FanPtr = std::shared_ptr<const Fan>;

struct FanCertificate {
    int num_rays = 0;
    int num_cones = 0;
    int num_walls = 0;
};

// Canonicalizes (sorts cones) and validates; see validate_fan.
FanPtr make_fan(int dim, std::vector<std::vector<long long>> rays,
                std::vector<std::vector<int>> max_cones);

// Checks ray primitivity, per-cone unimodularity (|det| = 1), completeness
// (every wall shared by exactly two maximal cones) and connectivity of the
// wall-adjacency graph. Faults name the offending ray or cone. Projectivity
// is certified separately by find_ample.
FanCertificate validate_fan(const Fan& fan);

// All walls, as pairs of adjacent max-cone indices.
std::vector<std::pair<int, int>> fan_walls(const Fan& fan);

// Rational direction membership: index of a max cone whose nonnegative span
// contains u, or -1.
int cone_containing(const Fan& fan, const std::vector<Rational>& u);

}  // namespace apolar
