// Shared test utilities: deterministic random generators and independent
// oracles (iterated symbolic integration, fan h-vectors, derivative-span
// rank). Oracles deliberately avoid the code paths they check.
#pragma once

#include "apolar/fan.hpp"
#include "apolar/matrix.hpp"
#include "apolar/poly.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace testutil {

using namespace apolar;

inline Rational rand_rational(std::mt19937& rng, int max_num = 9, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational rand_nonzero_rational(std::mt19937& rng, int max_num = 9, int max_den = 4) {
    Rational r = 0;
    while (r == 0) r = rand_rational(rng, max_num, max_den);
    return r;
}

inline std::vector<Rational> rand_point(std::mt19937& rng, int n, int max_num = 9,
                                        int max_den = 4) {
    std::vector<Rational> p(n);
    for (auto& x : p) x = rand_rational(rng, max_num, max_den);
    return p;
}

// random polynomial with terms of weighted degree <= maxdeg
inline Poly rand_poly(std::mt19937& rng, const Ring& ring, int maxdeg, int nterms = 4) {
    auto monos = monomials_up_to_weighted_degree(*ring, maxdeg);
    std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
    Poly p(ring);
    for (int k = 0; k < nterms; ++k) p.add_term(monos[pick(rng)], rand_rational(rng));
    return p;
}

// random nonzero quasi-homogeneous polynomial of the given weighted degree;
// the degree must support at least one monomial
inline Poly rand_quasi_homogeneous(std::mt19937& rng, const Ring& ring, int degree) {
    auto monos = monomials_of_weighted_degree(*ring, degree);
    std::uniform_int_distribution<size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> extra(0, static_cast<int>(monos.size()) - 1);
    Poly p(ring);
    while (p.is_zero()) {
        p.add_term(monos[pick(rng)], rand_nonzero_rational(rng));
        int more = extra(rng);
        for (int k = 0; k < more; ++k) p.add_term(monos[pick(rng)], rand_rational(rng));
    }
    return p;
}

inline Poly poly_pow(const Poly& p, int k) {
    Poly acc = Poly::constant(p.ring(), 1);
    for (int i = 0; i < k; ++i) acc = acc * p;
    return acc;
}

// Independent oracle: integral of t^alpha over the standard simplex
// { t_i >= 0, sum t_i <= 1 } by iterated symbolic antidifferentiation.
inline Rational iterated_simplex_integral(const Monomial& alpha) {
    int n = static_cast<int>(alpha.size());
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
    Ring ring = make_ring(names);
    Poly p = Poly::monomial(ring, alpha);

    for (int level = n; level >= 1; --level) {
        // antidifferentiate in the last active variable
        Poly anti(p.ring());
        for (const auto& [m, c] : p.terms()) {
            Monomial up = m;
            up[level - 1] += 1;
            anti.add_term(up, c / up[level - 1]);
        }
        // evaluate at the upper limit 1 - t_0 - ... - t_{level-2}
        // (lower limit 0 contributes nothing)
        std::vector<std::string> rest;
        for (int i = 0; i + 1 < level; ++i) rest.push_back("t" + std::to_string(i));
        Ring smaller = make_ring(rest);
        std::vector<Poly> images;
        for (int i = 0; i + 1 < level; ++i) images.push_back(Poly::variable(smaller, i));
        Poly upper = Poly::constant(smaller, 1);
        for (int i = 0; i + 1 < level; ++i) upper = upper - Poly::variable(smaller, i);
        images.push_back(upper);
        p = substitute(anti, images, smaller);
    }
    return p.constant_term();
}

// Independent oracle: h-vector of a complete simplicial fan from its face
// counts, via sum_d f_d (t-1)^(n-d) = sum_i h_i t^(n-i).
inline std::vector<long long> h_vector(const Fan& fan) {
    int n = fan.dim;
    // count distinct cones of each dimension (subsets of max cones)
    std::vector<std::set<std::vector<int>>> faces(n + 1);
    for (const auto& cone : fan.max_cones) {
        int sz = static_cast<int>(cone.size());
        for (int mask = 0; mask < (1 << sz); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < sz; ++i) {
                if (mask & (1 << i)) face.push_back(cone[i]);
            }
            faces[face.size()].insert(face);
        }
    }
    // accumulate sum f_d (t-1)^(n-d) as integer coefficient vectors
    std::vector<long long> poly(n + 1, 0);  // poly[j] = coefficient of t^j
    for (int d = 0; d <= n; ++d) {
        long long fd = static_cast<long long>(faces[d].size());
        // (t-1)^(n-d), binomial expansion
        int e = n - d;
        long long binom = 1;
        for (int j = 0; j <= e; ++j) {
            long long sign = ((e - j) % 2 == 0) ? 1 : -1;
            poly[j] += fd * sign * binom;
            binom = binom * (e - j) / (j + 1);
        }
    }
    std::vector<long long> h(n + 1);
    for (int i = 0; i <= n; ++i) h[i] = poly[n - i];
    return h;
}

// Independent oracle for the quotient dimension: the rank of the span of all
// derivatives D_P f over monomials P of weighted degree <= bound.
inline int derivative_span_rank(const Poly& f, int bound) {
    auto sources = monomials_up_to_weighted_degree(*f.ring(), bound);
    auto targets = monomials_up_to_weighted_degree(*f.ring(), bound);
    std::map<Monomial, int> col_of;
    for (size_t i = 0; i < targets.size(); ++i) col_of[targets[i]] = static_cast<int>(i);
    RatMatrix m(static_cast<int>(sources.size()), static_cast<int>(targets.size()));
    for (size_t i = 0; i < sources.size(); ++i) {
        Poly d = apply_diffop(Poly::monomial(f.ring(), sources[i]), f);
        for (const auto& [mono, c] : d.terms()) m.at(static_cast<int>(i), col_of.at(mono)) = c;
    }
    return rank(m);
}

// Independent area oracle for 2-d fans: walk the wall-adjacency cycle of max
// cones and apply the shoelace formula to the vertex cycle.
inline Rational shoelace_area(const Fan& fan, const std::vector<std::vector<Rational>>& verts) {
    auto walls = fan_walls(fan);
    std::vector<std::vector<int>> adj(fan.max_cones.size());
    for (auto [a, b] : walls) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> cycle = {0, adj[0][0]};
    while (true) {
        int cur = cycle.back(), prev = cycle[cycle.size() - 2];
        int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        if (next == 0) break;
        cycle.push_back(next);
    }
    Rational twice = 0;
    for (size_t i = 0; i < cycle.size(); ++i) {
        const auto& p = verts[cycle[i]];
        const auto& q = verts[cycle[(i + 1) % cycle.size()]];
        twice += p[0] * q[1] - p[1] * q[0];
    }
    if (twice < 0) twice = -twice;
    return twice / 2;
}

// Standard fixture fans.
inline FanPtr fan_p1() {
    return make_fan(1, {{1}, {-1}}, {{0}, {1}});
}
inline FanPtr fan_p2() {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
}
inline FanPtr fan_p3() {
    return make_fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}
inline FanPtr fan_p1xp1() {
    return make_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}
inline FanPtr fan_hirzebruch(int k) {
    return make_fan(2, {{1, 0}, {0, 1}, {-1, k}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}
// reflected simplex fans: Delta(h) is the standard simplex for h = (0,..,0,1)
inline FanPtr fan_triangle() {
    return make_fan(2, {{-1, 0}, {0, -1}, {1, 1}}, {{0, 1}, {1, 2}, {0, 2}});
}
inline FanPtr fan_simplex3() {
    return make_fan(3, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 1, 1}},
                    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}
// the classical smooth complete non-projective fan: subdivide the three
// bottom edges of the projective-3-space fan and pick the diagonals in each
// side cone cyclically, so no support function can be strictly convex
inline FanPtr fan_nonprojective() {
    return make_fan(3,
                    {{1, 0, 0},
                     {0, 1, 0},
                     {0, 0, 1},
                     {-1, -1, -1},
                     {0, -1, -1},
                     {-1, 0, -1},
                     {-1, -1, 0}},
                    {{0, 1, 2},
                     {3, 4, 5},
                     {0, 4, 5},
                     {0, 1, 5},
                     {3, 4, 6},
                     {2, 4, 6},
                     {0, 2, 4},
                     {3, 5, 6},
                     {1, 5, 6},
                     {1, 2, 6}});
}

}  // namespace testutil
