#pragma once

#include "apolar/fan.hpp"

#include <vector>

namespace apolar {

// Virtual polytope on a fan: one rational support value per ray. Any value
// vector is valid; convex ones correspond to honest polytopes
// Delta(h) = { m : <m, e_i> <= h_i for all rays }.
struct VirtualPolytope {
    FanPtr fan;
    std::vector<Rational> values;
};

VirtualPolytope make_polytope(FanPtr fan, std::vector<Rational> values);

VirtualPolytope operator+(const VirtualPolytope& a, const VirtualPolytope& b);
VirtualPolytope operator*(const Rational& s, const VirtualPolytope& h);

// One rational point per max cone: m_sigma solves <m, e_i> = h_i over the
// cone's rays (unimodularity makes the solution unique).
using VertexMap = std::vector<std::vector<Rational>>;
VertexMap vertices(const VirtualPolytope& h);

// Convexity of the support data: <m_sigma, e_j> <= h_j for every cone sigma
// and ray j; strict additionally requires < for rays outside sigma.
bool is_convex(const VirtualPolytope& h);
bool is_strictly_convex(const VirtualPolytope& h);

// An integer-valued strictly convex support vector, found by solving the
// wall inequalities with slack >= 1 via Fourier-Motzkin elimination. Faults
// with "fan not projective" when infeasible.
VirtualPolytope find_ample(const FanPtr& fan);

// Rational linear feasibility for rows a.x <= rhs; returns a feasible point
// or nullopt. Exposed for direct testing of the elimination core.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational rhs;
};
std::optional<std::vector<Rational>> fourier_motzkin_feasible(
    std::vector<LinearConstraint> system, int nvars);

}  // namespace apolar
