#pragma once

#include "apolar/bundle.hpp"
#include "apolar/functional.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/polytope.hpp"

#include <json.hpp>

#include <string>

namespace apolar {

// Key order in reports is fixed; outputs must be byte-stable across runs.
using OrderedJson = nlohmann::ordered_json;

// Accepts "p/q" strings and exact JSON integers. Floats are rejected: the
// toolkit is rational-only.
Rational rational_from_json(const OrderedJson& j);

Ring ring_from_json(const OrderedJson& j);
OrderedJson ring_to_json(const RingSpec& ring);

FanPtr fan_from_json(const OrderedJson& j);
OrderedJson fan_to_json(const Fan& fan);

VirtualPolytope polytope_from_json(const FanPtr& fan, const OrderedJson& j);
OrderedJson polytope_to_json(const VirtualPolytope& h);

LinearFunctional functional_from_json(const Ring& ring, const OrderedJson& j);
OrderedJson functional_to_json(const LinearFunctional& ell);

// hilbert / basis / relations / pairing fields of the quotient presentation
OrderedJson quotient_fields_json(const GradedQuotient& q);
OrderedJson local_fields_json(const LocalQuotient& q);

struct BundleInput {
    FanPtr fan;
    BaseAlgebraData base;
    ChernMap chern;
};
BundleInput bundle_input_from_json(const OrderedJson& j);

// Plain-text presentation: variables, weights, then relation polynomials one
// per line (comment lines start with '#').
std::string presentation_text(const GradedQuotient& q);
std::string presentation_text(const LocalQuotient& q);

}  // namespace apolar
