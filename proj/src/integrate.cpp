#include "apolar/integrate.hpp"

#include "apolar/errors.hpp"
#include "apolar/fit.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace apolar {

namespace {

// Deterministic triangulation of Delta(h), read off the fan's face lattice:
// the codim-c faces of Delta correspond to c-element ray sets spanning a cone
// of the fan, with vertex set { m_sigma : sigma contains the set }. Pulling
// recursion: cone the first cone's vertex over the triangulated facets that
// avoid it. Degenerate (repeated-vertex) simplices are kept; they contribute
// zero volume.
class Triangulator {
public:
    Triangulator(const Fan& fan, const VertexMap& verts) : fan_(fan), verts_(verts) {}

    // simplices as lists of dim+1 vertex coordinates
    std::vector<std::vector<std::vector<Rational>>> run() {
        std::vector<std::vector<std::vector<Rational>>> out;
        for (auto& cones : faces(std::vector<int>{})) {
            std::vector<std::vector<Rational>> simplex;
            for (int c : cones) simplex.push_back(verts_[c]);
            out.push_back(std::move(simplex));
        }
        return out;
    }

private:
    const Fan& fan_;
    const VertexMap& verts_;

    std::vector<int> cones_containing(const std::vector<int>& rays) const {
        std::vector<int> out;
        for (size_t c = 0; c < fan_.max_cones.size(); ++c) {
            const auto& cone = fan_.max_cones[c];
            if (std::includes(cone.begin(), cone.end(), rays.begin(), rays.end()))
                out.push_back(static_cast<int>(c));
        }
        return out;
    }

    // triangulates the face spanned by `rays`, returning simplices as lists
    // of max-cone indices (each index names the vertex of that cone)
    std::vector<std::vector<int>> faces(const std::vector<int>& rays) const {
        auto cones = cones_containing(rays);
        int face_dim = fan_.dim - static_cast<int>(rays.size());
        if (face_dim == 1) {
            // a wall: exactly two cones
            return {{cones[0], cones[1]}};
        }
        int apex = cones[0];  // vertex of the canonically-first cone
        const auto& apex_cone = fan_.max_cones[apex];
        std::vector<std::vector<int>> out;
        std::set<int> extensions;
        for (int c : cones) {
            for (int ray : fan_.max_cones[c]) extensions.insert(ray);
        }
        for (int j : extensions) {
            if (std::find(rays.begin(), rays.end(), j) != rays.end()) continue;
            if (std::find(apex_cone.begin(), apex_cone.end(), j) != apex_cone.end())
                continue;  // subface contains the apex
            std::vector<int> sub = rays;
            sub.insert(std::lower_bound(sub.begin(), sub.end(), j), j);
            if (cones_containing(sub).empty()) continue;
            for (auto& simplex : faces(sub)) {
                simplex.push_back(apex);
                out.push_back(std::move(simplex));
            }
        }
        return out;
    }
};

// Dirichlet formula on the standard simplex: integral of t^alpha equals
// (prod alpha_i!) / (n + |alpha|)!.
Rational standard_simplex_integral(const Monomial& alpha, int n) {
    Int num = 1;
    int total = 0;
    for (int e : alpha) {
        num *= factorial(e);
        total += e;
    }
    return Rational(num) / Rational(factorial(n + total));
}

Rational simplex_monomial_integral(const std::vector<std::vector<Rational>>& simplex,
                                   const Monomial& mono, int n, const Ring& t_ring) {
    // affine map x = v0 + sum t_i (v_i - v0); expand x^mono in t, integrate
    // termwise with the Dirichlet formula, scale by |det|
    RatMatrix jac(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) jac.at(i, j) = simplex[i + 1][j] - simplex[0][j];
    }
    Rational det = determinant(jac);
    if (det == 0) return 0;
    if (det < 0) det = -det;

    Poly integrand = Poly::constant(t_ring, 1);
    for (int j = 0; j < n; ++j) {
        if (mono[j] == 0) continue;
        Poly coord = Poly::constant(t_ring, simplex[0][j]);
        for (int i = 0; i < n; ++i) {
            Monomial ti(n, 0);
            ti[i] = 1;
            coord = coord + Poly::monomial(t_ring, ti, jac.at(i, j));
        }
        for (int k = 0; k < mono[j]; ++k) integrand = integrand * coord;
    }

    Rational acc = 0;
    for (const auto& [alpha, c] : integrand.terms()) {
        acc += c * standard_simplex_integral(alpha, n);
    }
    return acc * det;
}

}  // namespace

ConvexIntegral integrate_convex(const VirtualPolytope& h, const Monomial& mono) {
    const Fan& fan = *h.fan;
    if (static_cast<int>(mono.size()) != fan.dim)
        throw MathError("integrate_convex: monomial arity != fan dimension");
    if (!is_convex(h)) throw MathError("integrate_convex: support data is not convex");

    VertexMap verts = vertices(h);
    auto simplices = Triangulator(fan, verts).run();

    std::vector<std::string> tvars;
    for (int i = 0; i < fan.dim; ++i) tvars.push_back("t" + std::to_string(i));
    Ring t_ring = make_ring(tvars);

    ConvexIntegral out;
    out.value = 0;
    Rational volume = 0;
    Monomial zero(fan.dim, 0);
    for (const auto& simplex : simplices) {
        out.value += simplex_monomial_integral(simplex, mono, fan.dim, t_ring);
        volume += simplex_monomial_integral(simplex, zero, fan.dim, t_ring);
    }
    out.degenerate = (volume == 0);
    return out;
}

Rational integrate_virtual(const VirtualPolytope& h, const Monomial& mono) {
    const Fan& fan = *h.fan;
    if (static_cast<int>(mono.size()) != fan.dim)
        throw MathError("integrate_virtual: monomial arity != fan dimension");
    VirtualPolytope ample = find_ample(h.fan);

    int t_min = 0;
    while (true) {
        VirtualPolytope shifted = h + Rational(t_min) * ample;
        if (is_strictly_convex(shifted)) break;
        ++t_min;
        if (t_min > 100000) throw MathError("integrate_virtual: ample shift failed to convexify");
    }

    int degree = fan.dim;
    for (int e : mono) degree += e;

    // G(t) = integral over Delta(h + t*ample) is a polynomial of degree <=
    // dim + |mono|; sample it at degree+1 consecutive integers and return G(0)
    std::vector<Rational> ts, ys;
    for (int k = 0; k <= degree; ++k) {
        Rational t = t_min + k;
        ts.push_back(t);
        ys.push_back(integrate_convex(h + t * ample, mono).value);
    }
    Rational result = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
        Rational term = ys[i];
        for (size_t j = 0; j < ts.size(); ++j) {
            if (j == i) continue;
            term *= (Rational(0) - ts[j]) / (ts[i] - ts[j]);
        }
        result += term;
    }
    return result;
}

Ring ray_ring(const Fan& fan) {
    std::vector<std::string> names;
    for (int i = 0; i < fan.num_rays(); ++i) {
        if (i < 26) {
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        } else {
            names.push_back("r" + std::to_string(i));
        }
    }
    return make_ring(std::move(names));
}

Poly integral_polynomial(const FanPtr& fan, const Monomial& mono) {
    Ring ring = ray_ring(*fan);
    int r = fan->num_rays();
    int degree = fan->dim;
    for (int e : mono) degree += e;

    size_t needed = monomials_of_weighted_degree(*ring, degree).size();

    std::mt19937 rng(20240917);  // fixed seed: output must be reproducible
    for (int attempt = 0; attempt < 3; ++attempt) {
        int spread = 3 << attempt;
        std::uniform_int_distribution<int> coord(-spread, spread);
        std::vector<std::pair<std::vector<Rational>, Rational>> samples, holdout;
        for (size_t k = 0; k < needed; ++k) {
            std::vector<Rational> pt(r);
            for (int i = 0; i < r; ++i) pt[i] = coord(rng);
            Rational val = integrate_virtual(make_polytope(fan, pt), mono);
            samples.emplace_back(std::move(pt), std::move(val));
        }
        auto fitted = fit_homogeneous(samples, degree, ring);
        if (!fitted) continue;  // rank-deficient grid: resample wider
        bool verified = true;
        for (int k = 0; k < 10 && verified; ++k) {
            std::vector<Rational> pt(r);
            for (int i = 0; i < r; ++i) pt[i] = coord(rng);
            if (fitted->evaluate(pt) != integrate_virtual(make_polytope(fan, pt), mono))
                verified = false;
        }
        if (verified) return *fitted;
    }
    throw MathError("integral_polynomial: homogeneous fit failed after resampling");
}

Poly volume_polynomial(const FanPtr& fan) {
    return integral_polynomial(fan, Monomial(fan->dim, 0));
}

}  // namespace apolar
