#pragma once

#include "apolar/poly.hpp"

#include <map>

namespace apolar {

// Linear functional on the monomial basis of the ring, truncated at a
// weighted-degree bound. Absent monomials take the value 0; monomials above
// the bound are outside the represented window.
struct LinearFunctional {
    Ring ring;
    int bound = 0;
    std::map<Monomial, Rational> values;

    Rational value(const Monomial& m) const;
    // ell(P): sum of coeff * value over the terms of P.
    Rational operator()(const Poly& P) const;

    bool operator==(const LinearFunctional& o) const;
};

// The potential of ell: the polynomial with coefficient ell(x^a)/a! at x^a,
// over all monomials of weighted degree <= bound. Here a! is the product of
// ordinary factorials of the exponent entries, independent of weights.
Poly potential_from_functional(const LinearFunctional& ell);

// Inverse direction: ell(x^a) = a! * coeff_a(f) for weighted degree <= bound.
LinearFunctional functional_from_potential(const Poly& f, int bound);

}  // namespace apolar
