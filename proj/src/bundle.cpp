#include "apolar/bundle.hpp"

#include "apolar/errors.hpp"

#include <map>

namespace apolar {

BaseAlgebraData make_base_algebra(Ring ring, Poly potential, int socle_degree) {
    if (!(*potential.ring() == *ring))
        throw MathError("base algebra: potential lives in a different ring");
    if (potential.is_zero() || !potential.is_quasi_homogeneous() ||
        potential.weighted_degree() != socle_degree)
        throw MathError("base algebra: potential must be quasi-homogeneous of the socle degree");
    GradedQuotient q = ann_graded(potential);
    if (q.hilbert.front() != 1 || q.hilbert.back() != 1)
        throw MathError("base algebra: quotient does not have one-dimensional ends");
    return BaseAlgebraData{std::move(ring), std::move(potential), socle_degree};
}

ChernMap make_chern_map(const BaseAlgebraData& base, std::vector<Poly> images) {
    for (const auto& img : images) {
        if (!(*img.ring() == *base.ring))
            throw MathError("chern map: image lives outside the base ring");
        if (!img.is_zero() && (!img.is_quasi_homogeneous() || img.weighted_degree() != 1))
            throw MathError("chern map: images must be homogeneous of weight 1");
    }
    ChernMap c;
    c.torus_rank = static_cast<int>(images.size());
    c.images = std::move(images);
    return c;
}

Ring combined_ring(const BaseAlgebraData& base, const Fan& fan) {
    Ring rays = ray_ring(fan);
    std::vector<std::string> names = base.ring->variables;
    names.insert(names.end(), rays->variables.begin(), rays->variables.end());
    std::vector<int> weights = base.ring->weights;
    weights.insert(weights.end(), rays->weights.begin(), rays->weights.end());
    try {
        return make_ring(std::move(names), std::move(weights));
    } catch (const ParseError&) {
        throw ParseError("bundle: a base generator name collides with a ray variable; "
                         "rename the base generators");
    }
}

namespace {

// scratch ring for expanding c(lambda): base generators then one weight-1
// variable per torus character
Ring lambda_ring(const BaseAlgebraData& base, int rank) {
    std::vector<std::string> names = base.ring->variables;
    std::vector<int> weights = base.ring->weights;
    for (int t = 0; t < rank; ++t) {
        names.push_back("_lambda" + std::to_string(t));
        weights.push_back(1);
    }
    return make_ring(std::move(names), std::move(weights));
}

Poly embed(const Poly& p, const Ring& target, int offset) {
    Poly out(target);
    int n = target->arity();
    for (const auto& [m, c] : p.terms()) {
        Monomial big(n, 0);
        for (size_t i = 0; i < m.size(); ++i) big[offset + static_cast<int>(i)] = m[i];
        out.add_term(big, c);
    }
    return out;
}

// c(lambda) as an element of the lambda ring: sum_t lambda_t * c_t
Poly chern_of_lambda(const ChernMap& chern, const Ring& lam_ring, int base_arity) {
    Poly acc(lam_ring);
    for (int t = 0; t < chern.torus_rank; ++t) {
        acc = acc + Poly::variable(lam_ring, base_arity + t) * embed(chern.images[t], lam_ring, 0);
    }
    return acc;
}

}  // namespace

Poly horizontal_part(const VirtualPolytope& h, const ChernMap& chern,
                     const BaseAlgebraData& base, int i) {
    const Fan& fan = *h.fan;
    int n = fan.dim;
    if (chern.torus_rank != n)
        throw MathError("horizontal_part: chern rank != fan dimension");
    if (i < 0) throw MathError("horizontal_part: negative fiber exponent");

    int m = base.ring->arity();
    Ring lam = lambda_ring(base, n);
    Poly cpow = Poly::constant(lam, 1);
    Poly clam = chern_of_lambda(chern, lam, m);
    for (int k = 0; k < i; ++k) cpow = cpow * clam;

    Poly out(base.ring);
    for (const auto& [expo, coeff] : cpow.terms()) {
        Monomial alpha(expo.begin(), expo.begin() + m);
        Monomial beta(expo.begin() + m, expo.end());
        out.add_term(alpha, coeff * integrate_virtual(h, beta));
    }
    Rational scale = Rational(factorial(n + i)) / Rational(factorial(i));
    return out * scale;
}

Poly bundle_potential(const FanPtr& fan, const BaseAlgebraData& base, const ChernMap& chern) {
    int n = fan->dim;
    if (chern.torus_rank != n)
        throw MathError("bundle_potential: chern rank != fan dimension");

    int m = base.ring->arity();
    int r = fan->num_rays();
    Ring lam = lambda_ring(base, n);
    Ring combined = combined_ring(base, *fan);

    // substitute g_j -> g_j + [coefficient of g_j in c(lambda)] into P_X
    Poly clam = chern_of_lambda(chern, lam, m);
    std::vector<Poly> images;
    for (int j = 0; j < m; ++j) {
        Poly img = Poly::variable(lam, j);
        if (base.ring->weights[j] == 1) {
            Monomial gj(base.ring->arity(), 0);
            gj[j] = 1;
            for (int t = 0; t < n; ++t) {
                Rational kappa = chern.images[t].coeff(gj);
                if (kappa != 0) img = img + Poly::variable(lam, m + t) * kappa;
            }
        }
        images.push_back(std::move(img));
    }
    Poly shifted = substitute(base.potential, images, lam);

    // integrate out lambda: each lambda-exponent beta contributes the
    // symbolic integral polynomial in the ray variables
    std::map<Monomial, Poly> integral_cache;
    Poly out(combined);
    for (const auto& [expo, coeff] : shifted.terms()) {
        Monomial alpha(expo.begin(), expo.begin() + m);
        Monomial beta(expo.begin() + m, expo.end());
        auto it = integral_cache.find(beta);
        if (it == integral_cache.end())
            it = integral_cache.emplace(beta, integral_polynomial(fan, beta)).first;
        for (const auto& [rho, fc] : it->second.terms()) {
            Monomial big(m + r, 0);
            for (int j = 0; j < m; ++j) big[j] = alpha[j];
            for (int j = 0; j < r; ++j) big[m + j] = rho[j];
            out.add_term(big, coeff * fc);
        }
    }
    return out;
}

BundlePresentation bundle_cohomology(const FanPtr& fan, const BaseAlgebraData& base,
                                     const ChernMap& chern) {
    BundlePresentation p;
    p.potential = bundle_potential(fan, base, chern);
    p.ring = p.potential.ring();
    p.quotient = ann_graded(p.potential);
    p.leray_hirsch = leray_hirsch_check(p, base, fan);
    return p;
}

bool leray_hirsch_check(const BundlePresentation& p, const BaseAlgebraData& base,
                        const FanPtr& fan) {
    std::vector<int> hx = ann_graded(base.potential).hilbert;
    std::vector<int> hy = toric_cohomology(fan).hilbert;
    std::vector<int> conv(hx.size() + hy.size() - 1, 0);
    for (size_t i = 0; i < hx.size(); ++i) {
        for (size_t j = 0; j < hy.size(); ++j) conv[i + j] += hx[i] * hy[j];
    }
    return p.quotient.hilbert == conv;
}

}  // namespace apolar
