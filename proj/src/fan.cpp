#include "apolar/fan.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace apolar {

namespace {

RatMatrix cone_matrix(const Fan& fan, const std::vector<int>& cone) {
    // rows are the cone's ray generators
    RatMatrix m(static_cast<int>(cone.size()), fan.dim);
    for (size_t i = 0; i < cone.size(); ++i) {
        for (int j = 0; j < fan.dim; ++j) m.at(static_cast<int>(i), j) = fan.rays[cone[i]][j];
    }
    return m;
}

std::map<std::vector<int>, std::vector<int>> wall_map(const Fan& fan) {
    // wall = (dim-1)-subset of a max cone -> list of cones containing it
    std::map<std::vector<int>, std::vector<int>> walls;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> wall;
            for (size_t i = 0; i < cone.size(); ++i) {
                if (i != drop) wall.push_back(cone[i]);
            }
            walls[wall].push_back(static_cast<int>(c));
        }
    }
    return walls;
}

}  // namespace

FanPtr make_fan(int dim, std::vector<std::vector<long long>> rays,
                std::vector<std::vector<int>> max_cones) {
    auto fan = std::make_shared<Fan>();
    fan->dim = dim;
    fan->rays = std::move(rays);
    for (auto& cone : max_cones) std::sort(cone.begin(), cone.end());
    std::sort(max_cones.begin(), max_cones.end());
    fan->max_cones = std::move(max_cones);
    validate_fan(*fan);
    return fan;
}

FanCertificate validate_fan(const Fan& fan) {
    if (fan.dim < 1) throw MathError("fan: dimension must be at least 1");
    std::set<std::vector<long long>> seen_rays;
    for (size_t r = 0; r < fan.rays.size(); ++r) {
        if (static_cast<int>(fan.rays[r].size()) != fan.dim)
            throw MathError("fan: ray " + std::to_string(r) + " has wrong dimension");
        long long g = 0;
        for (long long x : fan.rays[r]) g = std::gcd(g, x < 0 ? -x : x);
        if (g != 1)
            throw MathError("fan: ray " + std::to_string(r) + " is not primitive");
        if (!seen_rays.insert(fan.rays[r]).second)
            throw MathError("fan: ray " + std::to_string(r) + " is listed twice");
    }
    std::set<std::vector<int>> seen_cones;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        if (static_cast<int>(cone.size()) != fan.dim)
            throw MathError("fan: cone " + std::to_string(c) + " is not full-dimensional");
        for (int idx : cone) {
            if (idx < 0 || idx >= fan.num_rays())
                throw MathError("fan: cone " + std::to_string(c) + " references missing ray");
        }
        if (!seen_cones.insert(cone).second)
            throw MathError("fan: duplicate max cone " + std::to_string(c));
        Rational det = determinant(cone_matrix(fan, cone));
        if (det != 1 && det != -1)
            throw MathError("fan: cone " + std::to_string(c) +
                            " is not unimodular (|det| != 1); fan not smooth");
    }

    auto walls = wall_map(fan);
    for (const auto& [wall, cones] : walls) {
        if (cones.size() != 2) {
            std::string names;
            for (int idx : wall) names += " " + std::to_string(idx);
            throw MathError("fan: wall {" + names + " } lies in " +
                            std::to_string(cones.size()) + " max cones, expected 2; fan not complete");
        }
    }
    // wall-adjacency connectivity
    if (!fan.max_cones.empty()) {
        std::vector<std::vector<int>> adj(fan.max_cones.size());
        for (const auto& [wall, cones] : walls) {
            adj[cones[0]].push_back(cones[1]);
            adj[cones[1]].push_back(cones[0]);
        }
        std::vector<bool> seen(fan.max_cones.size(), false);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = true;
        int reached = 1;
        while (!bfs.empty()) {
            int c = bfs.front();
            bfs.pop();
            for (int nb : adj[c]) {
                if (!seen[nb]) {
                    seen[nb] = true;
                    ++reached;
                    bfs.push(nb);
                }
            }
        }
        if (reached != static_cast<int>(fan.max_cones.size()))
            throw MathError("fan: wall-adjacency graph is disconnected; fan not complete");
    } else {
        throw MathError("fan: no maximal cones");
    }

    FanCertificate cert;
    cert.num_rays = fan.num_rays();
    cert.num_cones = static_cast<int>(fan.max_cones.size());
    cert.num_walls = static_cast<int>(walls.size());
    return cert;
}

std::vector<std::pair<int, int>> fan_walls(const Fan& fan) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [wall, cones] : wall_map(fan)) {
        out.emplace_back(cones[0], cones[1]);
    }
    return out;
}

int cone_containing(const Fan& fan, const std::vector<Rational>& u) {
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        // solve u = sum coeff_i * e_i over the cone's rays; container iff all >= 0
        RatMatrix m = transpose(cone_matrix(fan, fan.max_cones[c]));
        auto coeffs = solve(m, u);
        if (!coeffs) continue;
        bool inside = true;
        for (const auto& x : *coeffs) {
            if (x < 0) {
                inside = false;
                break;
            }
        }
        if (inside) return static_cast<int>(c);
    }
    return -1;
}

}  // namespace apolar
