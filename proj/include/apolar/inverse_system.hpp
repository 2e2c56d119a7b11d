#pragma once

#include "apolar/functional.hpp"
#include "apolar/matrix.hpp"
#include "apolar/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace apolar {

// Presentation of the graded algebra Sym(V)/Ann(f) for a quasi-homogeneous
// potential f of weighted degree n (the socle degree). All data is indexed by
// weighted degree 0..n; monomials of degree > n are relations implicitly.
struct GradedQuotient {
    Ring ring;
    Poly potential;
    int socle_degree = 0;
    std::vector<int> hilbert;                   // h_0..h_n
    std::vector<std::vector<Monomial>> basis;   // per degree, canonical order
    std::vector<std::vector<Poly>> relations;   // per degree, canonical kernel basis
    std::vector<RatMatrix> pairing;             // pairing[d]: h_d x h_{n-d}, entry ell(b_i * m_j)
    // coordinates of the class of b1*b2 in basis[deg(b1)+deg(b2)]; empty
    // vector when the product degree exceeds the socle degree
    std::map<std::pair<Monomial, Monomial>, std::vector<Rational>> mult_table;
};

// Presentation of Sym(V)/Ann(f) for an arbitrary nonzero polynomial
// potential, filtered by weighted degree <= deg f.
struct LocalQuotient {
    Ring ring;
    Poly potential;
    int degree_bound = 0;  // weighted degree of the potential
    int dimension = 0;
    std::vector<Monomial> basis;  // degree-ascending
    std::vector<Poly> relations;  // spanning set of Ann(f) in degrees <= bound
    RatMatrix pairing;            // dimension x dimension, entry <b_i*b_j, f>
};

// Membership in Ann(f): true iff D_P f = 0.
bool ann_membership(const Poly& P, const Poly& f);

// Degreewise kernel computation of the catalecticant maps P -> D_P f.
// Requires f nonzero and quasi-homogeneous; faults otherwise (non-homogeneous
// potentials go through ann_local).
GradedQuotient ann_graded(const Poly& f);

// Same computation inside Sym_{<= deg f}; every monomial of higher weighted
// degree annihilates f, so this window surjects onto the quotient.
LocalQuotient ann_local(const Poly& f);

// Recomputes the per-degree pairing matrices and certifies each has full rank
// h_d; a deficiency faults (it would contradict Gorenstein duality and means
// an internal bug).
std::vector<RatMatrix> pairing_matrices(const GradedQuotient& q);

// Coordinates of the class of p in basis[deg p], via the nondegenerate
// pairing against the complementary-degree basis. p must be quasi-homogeneous
// (zero and degree > socle reduce to the empty/zero class).
std::vector<Rational> reduce(const GradedQuotient& q, const Poly& p);

}  // namespace apolar
