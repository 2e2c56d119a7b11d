#include "apolar/polytope.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <set>

namespace apolar {

VirtualPolytope make_polytope(FanPtr fan, std::vector<Rational> values) {
    if (static_cast<int>(values.size()) != fan->num_rays())
        throw MathError("polytope: one support value per ray required");
    return VirtualPolytope{std::move(fan), std::move(values)};
}

VirtualPolytope operator+(const VirtualPolytope& a, const VirtualPolytope& b) {
    if (a.fan != b.fan && !(a.fan->rays == b.fan->rays && a.fan->max_cones == b.fan->max_cones))
        throw MathError("polytope: sum across different fans");
    std::vector<Rational> v(a.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] + b.values[i];
    return VirtualPolytope{a.fan, std::move(v)};
}

VirtualPolytope operator*(const Rational& s, const VirtualPolytope& h) {
    std::vector<Rational> v(h.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = s * h.values[i];
    return VirtualPolytope{h.fan, std::move(v)};
}

VertexMap vertices(const VirtualPolytope& h) {
    const Fan& fan = *h.fan;
    VertexMap out;
    out.reserve(fan.max_cones.size());
    for (const auto& cone : fan.max_cones) {
        RatMatrix m(fan.dim, fan.dim);
        std::vector<Rational> rhs(fan.dim);
        for (int i = 0; i < fan.dim; ++i) {
            for (int j = 0; j < fan.dim; ++j) m.at(i, j) = fan.rays[cone[i]][j];
            rhs[i] = h.values[cone[i]];
        }
        auto v = solve(m, rhs);
        if (!v) throw MathError("vertices: singular cone system (fan not unimodular?)");
        out.push_back(std::move(*v));
    }
    return out;
}

namespace {

Rational pair_with_ray(const Fan& fan, const std::vector<Rational>& m, int ray) {
    Rational acc = 0;
    for (int j = 0; j < fan.dim; ++j) acc += m[j] * fan.rays[ray][j];
    return acc;
}

bool convexity_check(const VirtualPolytope& h, bool strict) {
    const Fan& fan = *h.fan;
    VertexMap verts = vertices(h);
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (int ray = 0; ray < fan.num_rays(); ++ray) {
            Rational val = pair_with_ray(fan, verts[c], ray);
            bool in_cone = std::find(cone.begin(), cone.end(), ray) != cone.end();
            if (in_cone) continue;  // equality holds on the cone's own rays
            if (strict ? !(val < h.values[ray]) : !(val <= h.values[ray])) return false;
        }
    }
    return true;
}

}  // namespace

bool is_convex(const VirtualPolytope& h) {
    return convexity_check(h, false);
}

bool is_strictly_convex(const VirtualPolytope& h) {
    return convexity_check(h, true);
}

std::optional<std::vector<Rational>> fourier_motzkin_feasible(
    std::vector<LinearConstraint> system, int nvars) {
    // bounds_at[v]: the constraints that involved variable v when it was
    // eliminated, kept for back-substitution
    std::vector<std::vector<LinearConstraint>> bounds_at(nvars);

    auto normalize_dedup = [](std::vector<LinearConstraint>& rows) {
        std::set<std::pair<std::vector<Rational>, Rational>> seen;
        std::vector<LinearConstraint> out;
        for (auto& r : rows) {
            if (seen.emplace(r.coeffs, r.rhs).second) out.push_back(std::move(r));
        }
        rows = std::move(out);
    };

    for (int v = nvars - 1; v >= 0; --v) {
        std::vector<LinearConstraint> lowers, uppers, rest;
        for (auto& row : system) {
            if (row.coeffs[v] > 0) {
                uppers.push_back(row);
            } else if (row.coeffs[v] < 0) {
                lowers.push_back(row);
            } else {
                rest.push_back(row);
            }
        }
        for (const auto& row : uppers) bounds_at[v].push_back(row);
        for (const auto& row : lowers) bounds_at[v].push_back(row);
        // combine each lower with each upper
        for (const auto& lo : lowers) {
            for (const auto& up : uppers) {
                LinearConstraint combo;
                combo.coeffs.assign(nvars, Rational(0));
                Rational a = up.coeffs[v], b = -lo.coeffs[v];
                for (int j = 0; j < v; ++j)
                    combo.coeffs[j] = b * up.coeffs[j] + a * lo.coeffs[j];
                combo.rhs = b * up.rhs + a * lo.rhs;
                rest.push_back(std::move(combo));
            }
        }
        normalize_dedup(rest);
        system = std::move(rest);
    }

    // only constant rows remain: 0 <= rhs must hold
    for (const auto& row : system) {
        if (row.rhs < 0) return std::nullopt;
    }

    // back-substitute from the first variable up
    std::vector<Rational> x(nvars, Rational(0));
    for (int v = 0; v < nvars; ++v) {
        bool has_lo = false, has_hi = false;
        Rational lo = 0, hi = 0;
        for (const auto& row : bounds_at[v]) {
            Rational rest = row.rhs;
            for (int j = 0; j < v; ++j) rest -= row.coeffs[j] * x[j];
            Rational bound = rest / row.coeffs[v];
            if (row.coeffs[v] > 0) {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            } else {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            }
        }
        if (has_lo && has_hi) {
            if (lo > hi) return std::nullopt;  // cannot happen after elimination
            Rational c = Rational(ceil_int(lo));
            x[v] = (c <= hi) ? c : (lo + hi) / 2;
        } else if (has_lo) {
            x[v] = Rational(ceil_int(lo));
        } else if (has_hi) {
            x[v] = Rational(floor_int(hi));
        }
    }
    return x;
}

VirtualPolytope find_ample(const FanPtr& fan) {
    int r = fan->num_rays();
    // strict convexity across each wall with slack >= 1:
    // <m_sigma(h), e_j> - h_j <= -1, where m_sigma depends linearly on h
    std::vector<LinearConstraint> system;
    auto walls = fan_walls(*fan);
    for (auto [ca, cb] : walls) {
        for (auto [from, to] : {std::pair{ca, cb}, std::pair{cb, ca}}) {
            const auto& cone = fan->max_cones[from];
            // the ray of `to` not shared with `from`
            int j = -1;
            for (int idx : fan->max_cones[to]) {
                if (std::find(cone.begin(), cone.end(), idx) == cone.end()) j = idx;
            }
            if (j < 0) continue;
            // m_sigma = R^{-1} h|_cone, so <m_sigma, e_j> = (R^{-T} e_j) . h|_cone
            RatMatrix m(fan->dim, fan->dim);
            std::vector<Rational> ej(fan->dim);
            for (int i = 0; i < fan->dim; ++i) {
                for (int k = 0; k < fan->dim; ++k) m.at(i, k) = fan->rays[cone[i]][k];
                ej[i] = fan->rays[j][i];
            }
            auto w = solve(transpose(m), ej);
            if (!w) throw MathError("find_ample: singular cone system");
            LinearConstraint row;
            row.coeffs.assign(r, Rational(0));
            for (int i = 0; i < fan->dim; ++i) row.coeffs[cone[i]] += (*w)[i];
            row.coeffs[j] -= 1;
            row.rhs = -1;
            system.push_back(std::move(row));
        }
    }

    auto sol = fourier_motzkin_feasible(std::move(system), r);
    if (!sol) throw MathError("find_ample: fan not projective");

    // scale to integers (scaling by >= 1 preserves the slack)
    Int lcm = 1;
    for (const auto& v : *sol) {
        Int den = denominator(v);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    std::vector<Rational> values(sol->size());
    for (size_t i = 0; i < sol->size(); ++i) values[i] = (*sol)[i] * Rational(lcm);

    VirtualPolytope h{fan, std::move(values)};
    if (!is_strictly_convex(h)) throw MathError("find_ample: certificate check failed (internal bug)");
    return h;
}

}  // namespace apolar
