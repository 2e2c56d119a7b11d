#include "apolar/json_io.hpp"

#include "apolar/errors.hpp"

#include <sstream>

namespace apolar {

Rational rational_from_json(const OrderedJson& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float())
        throw ParseError("floating-point numbers are rejected; give exact rationals as \"p/q\"");
    throw ParseError("expected a rational (string \"p/q\" or integer)");
}

Ring ring_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("variables"))
        throw ParseError("ring: expected object with \"variables\"");
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    std::vector<int> weights;
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<int>>();
    return make_ring(std::move(vars), std::move(weights));
}

OrderedJson ring_to_json(const RingSpec& ring) {
    OrderedJson j;
    j["variables"] = ring.variables;
    j["weights"] = ring.weights;
    return j;
}

FanPtr fan_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("rays") || !j.contains("max_cones"))
        throw ParseError("fan: expected object with \"rays\" and \"max_cones\"");
    auto rays = j.at("rays").get<std::vector<std::vector<long long>>>();
    auto cones = j.at("max_cones").get<std::vector<std::vector<int>>>();
    if (rays.empty()) throw ParseError("fan: no rays");
    int dim = static_cast<int>(rays.front().size());
    return make_fan(dim, std::move(rays), std::move(cones));
}

OrderedJson fan_to_json(const Fan& fan) {
    OrderedJson j;
    j["rays"] = fan.rays;
    j["max_cones"] = fan.max_cones;
    return j;
}

VirtualPolytope polytope_from_json(const FanPtr& fan, const OrderedJson& j) {
    if (!j.is_object() || !j.contains("values"))
        throw ParseError("polytope: expected object with \"values\"");
    std::vector<Rational> values;
    for (const auto& v : j.at("values")) values.push_back(rational_from_json(v));
    if (static_cast<int>(values.size()) != fan->num_rays())
        throw ParseError("polytope: expected one value per ray");
    return make_polytope(fan, std::move(values));
}

OrderedJson polytope_to_json(const VirtualPolytope& h) {
    OrderedJson vals = OrderedJson::array();
    for (const auto& v : h.values) vals.push_back(to_string(v));
    OrderedJson j;
    j["values"] = vals;
    return j;
}

LinearFunctional functional_from_json(const Ring& ring, const OrderedJson& j) {
    if (!j.is_object() || !j.contains("bound") || !j.contains("values"))
        throw ParseError("functional: expected object with \"bound\" and \"values\"");
    LinearFunctional ell;
    ell.ring = ring;
    ell.bound = j.at("bound").get<int>();
    if (ell.bound < 0) throw ParseError("functional: bound must be nonnegative");
    for (const auto& entry : j.at("values")) {
        if (!entry.is_array() || entry.size() != 2)
            throw ParseError("functional: each value is a [monomial, rational] pair");
        Poly mono = parse_poly(ring, entry.at(0).get<std::string>());
        if (mono.terms().size() != 1 || mono.terms().begin()->second != 1)
            throw ParseError("functional: '" + entry.at(0).get<std::string>() +
                             "' is not a monomial");
        const Monomial& m = mono.terms().begin()->first;
        if (ring->weighted_degree(m) > ell.bound)
            throw ParseError("functional: monomial above the stated bound");
        Rational v = rational_from_json(entry.at(1));
        if (v != 0) ell.values[m] = v;
    }
    return ell;
}

OrderedJson functional_to_json(const LinearFunctional& ell) {
    OrderedJson j;
    j["bound"] = ell.bound;
    OrderedJson vals = OrderedJson::array();
    for (const auto& [m, v] : ell.values) {
        vals.push_back(OrderedJson::array({monomial_to_string(*ell.ring, m), to_string(v)}));
    }
    j["values"] = vals;
    return j;
}

namespace {

OrderedJson matrix_to_json(const RatMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < m.rows; ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

OrderedJson quotient_fields_json(const GradedQuotient& q) {
    OrderedJson j;
    j["hilbert"] = q.hilbert;
    OrderedJson basis = OrderedJson::array();
    for (const auto& layer : q.basis) {
        OrderedJson row = OrderedJson::array();
        for (const auto& m : layer) row.push_back(monomial_to_string(*q.ring, m));
        basis.push_back(std::move(row));
    }
    j["basis"] = basis;
    OrderedJson rels = OrderedJson::array();
    for (const auto& layer : q.relations) {
        OrderedJson row = OrderedJson::array();
        for (const auto& p : layer) row.push_back(to_string(p));
        rels.push_back(std::move(row));
    }
    j["relations"] = rels;
    OrderedJson pairing = OrderedJson::array();
    for (const auto& m : q.pairing) pairing.push_back(matrix_to_json(m));
    j["pairing"] = pairing;
    return j;
}

OrderedJson local_fields_json(const LocalQuotient& q) {
    OrderedJson j;
    j["degree_bound"] = q.degree_bound;
    j["dimension"] = q.dimension;
    OrderedJson basis = OrderedJson::array();
    for (const auto& m : q.basis) basis.push_back(monomial_to_string(*q.ring, m));
    j["basis"] = basis;
    OrderedJson rels = OrderedJson::array();
    for (const auto& p : q.relations) rels.push_back(to_string(p));
    j["relations"] = rels;
    j["pairing"] = matrix_to_json(q.pairing);
    return j;
}

BundleInput bundle_input_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("fan") || !j.contains("base") || !j.contains("chern"))
        throw ParseError("bundle input: expected \"fan\", \"base\" and \"chern\"");
    BundleInput in;
    in.fan = fan_from_json(j.at("fan"));

    const auto& jb = j.at("base");
    if (!jb.contains("generators") || !jb.contains("potential") || !jb.contains("socle_degree"))
        throw ParseError("bundle base: expected \"generators\", \"potential\", \"socle_degree\"");
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& g : jb.at("generators")) {
        names.push_back(g.at("name").get<std::string>());
        weights.push_back(g.at("weight").get<int>());
    }
    Ring base_ring = make_ring(std::move(names), std::move(weights));
    Poly pot = parse_poly(base_ring, jb.at("potential").get<std::string>());
    in.base = make_base_algebra(base_ring, pot, jb.at("socle_degree").get<int>());

    const auto& jc = j.at("chern");
    if (!jc.is_array() || static_cast<int>(jc.size()) != in.fan->dim)
        throw ParseError("bundle chern: expected one image per lattice basis character (fan dimension " +
                         std::to_string(in.fan->dim) + ")");
    std::vector<Poly> images;
    for (const auto& s : jc) images.push_back(parse_poly(base_ring, s.get<std::string>()));
    in.chern = make_chern_map(in.base, std::move(images));
    return in;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

}  // namespace

std::string presentation_text(const GradedQuotient& q) {
    std::ostringstream os;
    os << "# variables:";
    for (const auto& v : q.ring->variables) os << " " << v;
    os << "\n# weights: " << join_ints(q.ring->weights);
    os << "\n# socle degree: " << q.socle_degree;
    os << "\n# hilbert: " << join_ints(q.hilbert);
    os << "\n# all monomials of weighted degree > " << q.socle_degree
       << " annihilate the potential\n";
    for (const auto& layer : q.relations) {
        for (const auto& p : layer) os << to_string(p) << "\n";
    }
    return os.str();
}

std::string presentation_text(const LocalQuotient& q) {
    std::ostringstream os;
    os << "# variables:";
    for (const auto& v : q.ring->variables) os << " " << v;
    os << "\n# weights: " << join_ints(q.ring->weights);
    os << "\n# degree bound: " << q.degree_bound;
    os << "\n# dimension: " << q.dimension;
    os << "\n# all monomials of weighted degree > " << q.degree_bound
       << " annihilate the potential\n";
    for (const auto& p : q.relations) os << to_string(p) << "\n";
    return os.str();
}

}  // namespace apolar
