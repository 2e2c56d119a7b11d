#include "apolar/fit.hpp"

namespace apolar {

std::optional<Poly> fit_homogeneous(
    const std::vector<std::pair<std::vector<Rational>, Rational>>& points, int degree, Ring ring) {
    auto monos = monomials_of_weighted_degree(*ring, degree);
    int ncoeff = static_cast<int>(monos.size());
    int npts = static_cast<int>(points.size());
    if (npts < ncoeff) return std::nullopt;

    RatMatrix aug(npts, ncoeff + 1);
    for (int i = 0; i < npts; ++i) {
        const auto& [pt, val] = points[i];
        for (int j = 0; j < ncoeff; ++j) {
            Rational cell = 1;
            for (size_t k = 0; k < pt.size(); ++k) cell *= pow_rational(pt[k], monos[j][k]);
            aug.at(i, j) = cell;
        }
        aug.at(i, ncoeff) = val;
    }
    RrefResult r = rref(aug);
    for (int c : r.pivot_cols) {
        if (c == ncoeff) return std::nullopt;  // inconsistent
    }
    if (r.rank < ncoeff) return std::nullopt;  // rank-deficient sample set

    Poly out(ring);
    for (int j = 0; j < ncoeff; ++j) out.add_term(monos[j], r.mat.at(j, ncoeff));
    return out;
}

}  // namespace apolar
