#include "apolar/functional.hpp"

#include "apolar/errors.hpp"

namespace apolar {

Rational LinearFunctional::value(const Monomial& m) const {
    auto it = values.find(m);
    return it == values.end() ? Rational(0) : it->second;
}

Rational LinearFunctional::operator()(const Poly& P) const {
    if (!(*P.ring() == *ring)) throw MathError("functional: polynomial in different ring");
    Rational acc = 0;
    for (const auto& [m, c] : P.terms()) acc += c * value(m);
    return acc;
}

bool LinearFunctional::operator==(const LinearFunctional& o) const {
    return *ring == *o.ring && bound == o.bound && values == o.values;
}

static Rational monomial_factorial(const Monomial& m) {
    Int acc = 1;
    for (int e : m) acc *= factorial(e);
    return Rational(acc);
}

Poly potential_from_functional(const LinearFunctional& ell) {
    Poly f(ell.ring);
    for (const auto& [m, v] : ell.values) {
        if (ell.ring->weighted_degree(m) > ell.bound)
            throw MathError("functional stores a value above its bound");
        f.add_term(m, v / monomial_factorial(m));
    }
    return f;
}

LinearFunctional functional_from_potential(const Poly& f, int bound) {
    LinearFunctional ell;
    ell.ring = f.ring();
    ell.bound = bound;
    for (const auto& [m, c] : f.terms()) {
        if (f.ring()->weighted_degree(m) > bound) continue;
        ell.values.emplace(m, c * monomial_factorial(m));
    }
    return ell;
}

}  // namespace apolar
