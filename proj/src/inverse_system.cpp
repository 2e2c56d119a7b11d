#include "apolar/inverse_system.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <map>

namespace apolar {

bool ann_membership(const Poly& P, const Poly& f) {
    return apply_diffop(P, f).is_zero();
}

namespace {

// Matrix of the map P -> D_P f on given source monomials, rows indexed by the
// given image monomials.
RatMatrix catalecticant(const Poly& f, const std::vector<Monomial>& source,
                        const std::vector<Monomial>& image) {
    std::map<Monomial, int> row_of;
    for (size_t i = 0; i < image.size(); ++i) row_of.emplace(image[i], static_cast<int>(i));
    RatMatrix m(static_cast<int>(image.size()), static_cast<int>(source.size()));
    for (size_t j = 0; j < source.size(); ++j) {
        Poly img = apply_diffop(Poly::monomial(f.ring(), source[j]), f);
        for (const auto& [mono, c] : img.terms()) {
            auto it = row_of.find(mono);
            if (it == row_of.end()) throw MathError("catalecticant: image outside expected span");
            m.at(it->second, static_cast<int>(j)) = c;
        }
    }
    return m;
}

std::vector<Poly> kernel_polys(const Ring& ring, const std::vector<Monomial>& source,
                               const RatMatrix& m) {
    std::vector<Poly> rels;
    for (const auto& vec : kernel_basis(m)) {
        Poly rel(ring);
        for (size_t j = 0; j < source.size(); ++j) rel.add_term(source[j], vec[j]);
        rels.push_back(std::move(rel));
    }
    return rels;
}

}  // namespace

GradedQuotient ann_graded(const Poly& f) {
    if (f.is_zero()) throw MathError("ann_graded: zero potential");
    if (!f.is_quasi_homogeneous())
        throw MathError("ann_graded: potential is not quasi-homogeneous; use the local path");

    GradedQuotient q;
    q.ring = f.ring();
    q.potential = f;
    int n = f.weighted_degree();
    q.socle_degree = n;
    q.hilbert.resize(n + 1);
    q.basis.resize(n + 1);
    q.relations.resize(n + 1);
    q.pairing.resize(n + 1);

    for (int d = 0; d <= n; ++d) {
        auto source = monomials_of_weighted_degree(*q.ring, d);
        auto image = monomials_of_weighted_degree(*q.ring, n - d);
        RatMatrix m = catalecticant(f, source, image);
        RrefResult r = rref(m);
        q.hilbert[d] = r.rank;
        for (int c : r.pivot_cols) q.basis[d].push_back(source[c]);
        q.relations[d] = kernel_polys(q.ring, source, m);
    }

    q.pairing = pairing_matrices(q);

    // multiplication table on basis monomials
    for (int d1 = 0; d1 <= n; ++d1) {
        for (int d2 = 0; d2 <= n; ++d2) {
            for (const auto& b1 : q.basis[d1]) {
                for (const auto& b2 : q.basis[d2]) {
                    std::vector<Rational> coords;
                    if (d1 + d2 <= n) {
                        Monomial prod(b1.size());
                        for (size_t i = 0; i < b1.size(); ++i) prod[i] = b1[i] + b2[i];
                        coords = reduce(q, Poly::monomial(q.ring, prod));
                    }
                    q.mult_table.emplace(std::make_pair(b1, b2), std::move(coords));
                }
            }
        }
    }
    return q;
}

LocalQuotient ann_local(const Poly& f) {
    if (f.is_zero()) throw MathError("ann_local: zero potential");

    LocalQuotient q;
    q.ring = f.ring();
    q.potential = f;
    int bound = f.weighted_degree();
    q.degree_bound = bound;

    auto monos = monomials_up_to_weighted_degree(*q.ring, bound);
    RatMatrix m = catalecticant(f, monos, monos);
    RrefResult r = rref(m);
    q.dimension = r.rank;
    for (int c : r.pivot_cols) q.basis.push_back(monos[c]);
    q.relations = kernel_polys(q.ring, monos, m);

    q.pairing = RatMatrix(q.dimension, q.dimension);
    for (int i = 0; i < q.dimension; ++i) {
        Poly bi = Poly::monomial(q.ring, q.basis[i]);
        for (int j = 0; j < q.dimension; ++j) {
            q.pairing.at(i, j) = apolar_pairing(bi * Poly::monomial(q.ring, q.basis[j]), f);
        }
    }
    if (rank(q.pairing) != q.dimension)
        throw MathError("ann_local: degenerate pairing on the computed basis (internal bug)");
    return q;
}

std::vector<RatMatrix> pairing_matrices(const GradedQuotient& q) {
    int n = q.socle_degree;
    std::vector<RatMatrix> out(n + 1);
    for (int d = 0; d <= n; ++d) {
        int hd = static_cast<int>(q.basis[d].size());
        int hc = static_cast<int>(q.basis[n - d].size());
        RatMatrix m(hd, hc);
        for (int i = 0; i < hd; ++i) {
            Poly bi = Poly::monomial(q.ring, q.basis[d][i]);
            for (int j = 0; j < hc; ++j) {
                m.at(i, j) = apolar_pairing(bi * Poly::monomial(q.ring, q.basis[n - d][j]),
                                            q.potential);
            }
        }
        if (rank(m) != hd)
            throw MathError("pairing matrix rank deficient in degree " + std::to_string(d) +
                            " (internal bug: contradicts Gorenstein duality)");
        out[d] = std::move(m);
    }
    return out;
}

std::vector<Rational> reduce(const GradedQuotient& q, const Poly& p) {
    if (p.is_zero()) return {};
    if (!p.is_quasi_homogeneous())
        throw MathError("reduce: mixed-degree input; split via quasi_homogeneous_components");
    int d = p.weighted_degree();
    if (d > q.socle_degree) return {};  // class is zero above the socle

    // solve pairing[d]^T c = (<p*m_j, f>)_j over the complementary basis
    const auto& dual = q.basis[q.socle_degree - d];
    std::vector<Rational> rhs(dual.size());
    for (size_t j = 0; j < dual.size(); ++j) {
        rhs[j] = apolar_pairing(p * Poly::monomial(q.ring, dual[j]), q.potential);
    }
    auto c = solve(transpose(q.pairing[d]), rhs);
    if (!c) throw MathError("reduce: pairing system inconsistent (internal bug)");
    return *c;
}

}  // namespace apolar
