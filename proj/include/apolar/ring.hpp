#pragma once

#include <memory>
#include <string>
#include <vector>

namespace apolar {

// Exponent vector; length equals the ring's arity.
using Monomial = std::vector<int>;

// Ordered variables with positive integer weights. A variable of weight w
// contributes w per exponent unit to the weighted degree of a monomial.
struct RingSpec {
    std::vector<std::string> variables;
    std::vector<int> weights;

    int arity() const { return static_cast<int>(variables.size()); }
    int weighted_degree(const Monomial& m) const;
    int max_weight() const;

    bool operator==(const RingSpec& o) const {
        return variables == o.variables && weights == o.weights;
    }
};

using Ring = std::shared_ptr<const RingSpec>;

// Validates names (unique, identifier-shaped so printing round-trips) and
// weights (>= 1). Weights default to all 1.
Ring make_ring(std::vector<std::string> variables, std::vector<int> weights = {});

// Monomial order: graded-lexicographic by weighted degree, ties broken
// lexicographically on the exponent vector. All canonical enumerations and
// printed polynomials use this order (descending within listings).
bool grlex_less(const RingSpec& ring, const Monomial& a, const Monomial& b);

// Monomials of weighted degree exactly d, in descending lexicographic order.
std::vector<Monomial> monomials_of_weighted_degree(const RingSpec& ring, int d);

// Degrees 0..d ascending, descending lex within each degree.
std::vector<Monomial> monomials_up_to_weighted_degree(const RingSpec& ring, int d);

std::string monomial_to_string(const RingSpec& ring, const Monomial& m);

}  // namespace apolar
