#include "apolar/ring.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace apolar {

int RingSpec::weighted_degree(const Monomial& m) const {
    int d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
    return d;
}

int RingSpec::max_weight() const {
    int w = 1;
    for (int x : weights) w = std::max(w, x);
    return w;
}

static bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

Ring make_ring(std::vector<std::string> variables, std::vector<int> weights) {
    if (weights.empty()) weights.assign(variables.size(), 1);
    if (weights.size() != variables.size())
        throw ParseError("ring: weight count does not match variable count");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!is_identifier(v))
            throw ParseError("ring: variable name '" + v + "' is not a valid identifier");
        if (!seen.insert(v).second)
            throw ParseError("ring: duplicate variable name '" + v + "'");
    }
    for (int w : weights) {
        if (w < 1) throw ParseError("ring: weights must be positive integers");
    }
    auto spec = std::make_shared<RingSpec>();
    spec->variables = std::move(variables);
    spec->weights = std::move(weights);
    return spec;
}

bool grlex_less(const RingSpec& ring, const Monomial& a, const Monomial& b) {
    int da = ring.weighted_degree(a), db = ring.weighted_degree(b);
    if (da != db) return da < db;
    return a < b;
}

static void enumerate_degree(const RingSpec& ring, int d, int var, Monomial& cur,
                             std::vector<Monomial>& out) {
    if (var == ring.arity()) {
        if (d == 0) out.push_back(cur);
        return;
    }
    int w = ring.weights[var];
    for (int e = d / w; e >= 0; --e) {
        cur[var] = e;
        enumerate_degree(ring, d - e * w, var + 1, cur, out);
    }
    cur[var] = 0;
}

std::vector<Monomial> monomials_of_weighted_degree(const RingSpec& ring, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur(ring.arity(), 0);
    enumerate_degree(ring, d, 0, cur, out);
    return out;
}

std::vector<Monomial> monomials_up_to_weighted_degree(const RingSpec& ring, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto layer = monomials_of_weighted_degree(ring, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string monomial_to_string(const RingSpec& ring, const Monomial& m) {
    std::string s;
    for (int i = 0; i < ring.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.variables[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace apolar
