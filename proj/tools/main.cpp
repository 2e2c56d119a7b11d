// apolar: exact Gorenstein-duality presentations from potentials, with toric
// and toric-bundle cohomology front ends.
//
// Exit codes: 0 success, 2 input/parse error, 3 mathematical fault.

#include "apolar/errors.hpp"
#include "apolar/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using apolar::OrderedJson;

OrderedJson load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw apolar::ParseError("cannot open input file '" + path + "'");
    try {
        return OrderedJson::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw apolar::ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw apolar::ParseError("cannot open output file '" + path + "'");
    out << content;
}

struct Options {
    std::string input;
    std::string format = "json";
    std::string export_plain;
    std::string polytope_path;
};

void emit(const OrderedJson& report, const std::string& text_form, const Options& opt) {
    if (opt.format == "text") {
        std::cout << text_form;
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

std::string quotient_text(const apolar::GradedQuotient& q) {
    std::ostringstream os;
    os << "ring:";
    for (int i = 0; i < q.ring->arity(); ++i)
        os << " " << q.ring->variables[i] << "(" << q.ring->weights[i] << ")";
    os << "\npotential: " << apolar::to_string(q.potential);
    os << "\nsocle degree: " << q.socle_degree << "\nhilbert:";
    for (int h : q.hilbert) os << " " << h;
    os << "\n";
    for (size_t d = 0; d < q.basis.size(); ++d) {
        os << "basis " << d << ":";
        for (const auto& m : q.basis[d]) os << " " << monomial_to_string(*q.ring, m);
        os << "\n";
    }
    for (size_t d = 0; d < q.relations.size(); ++d) {
        if (q.relations[d].empty()) continue;
        os << "relations " << d << ":";
        for (const auto& p : q.relations[d]) os << " " << apolar::to_string(p);
        os << "\n";
    }
    return os.str();
}

// parses {"ring":..., "potential": "..."} or {"ring":..., "functional": {...}}
apolar::Poly potential_from_input(const OrderedJson& j) {
    apolar::Ring ring = apolar::ring_from_json(j.at("ring"));
    if (j.contains("potential")) {
        return apolar::parse_poly(ring, j.at("potential").get<std::string>());
    }
    if (j.contains("functional")) {
        return apolar::potential_from_functional(
            apolar::functional_from_json(ring, j.at("functional")));
    }
    throw apolar::ParseError("input needs \"potential\" or \"functional\"");
}

int run_ann(const Options& opt) {
    OrderedJson in = load_json(opt.input);
    apolar::Poly f = potential_from_input(in);
    apolar::GradedQuotient q = apolar::ann_graded(f);

    OrderedJson report;
    report["command"] = "ann";
    report["ring"] = apolar::ring_to_json(*q.ring);
    report["potential"] = apolar::to_string(q.potential);
    report["socle_degree"] = q.socle_degree;
    report.update(apolar::quotient_fields_json(q));
    if (!opt.export_plain.empty()) write_file(opt.export_plain, apolar::presentation_text(q));
    emit(report, quotient_text(q), opt);
    return 0;
}

int run_local(const Options& opt) {
    OrderedJson in = load_json(opt.input);
    apolar::Poly f = potential_from_input(in);
    apolar::LocalQuotient q = apolar::ann_local(f);

    OrderedJson report;
    report["command"] = "local";
    report["ring"] = apolar::ring_to_json(*q.ring);
    report["potential"] = apolar::to_string(q.potential);
    report.update(apolar::local_fields_json(q));
    if (!opt.export_plain.empty()) write_file(opt.export_plain, apolar::presentation_text(q));

    std::ostringstream text;
    text << "dimension: " << q.dimension << "\nbasis:";
    for (const auto& m : q.basis) text << " " << monomial_to_string(*q.ring, m);
    text << "\nrelations:";
    for (const auto& p : q.relations) text << " " << apolar::to_string(p);
    text << "\n";
    emit(report, text.str(), opt);
    return 0;
}

int run_potential(const Options& opt) {
    OrderedJson in = load_json(opt.input);
    apolar::Ring ring = apolar::ring_from_json(in.at("ring"));
    OrderedJson report;
    report["command"] = "potential";
    std::string text;
    if (in.contains("functional")) {
        apolar::Poly f = apolar::potential_from_functional(
            apolar::functional_from_json(ring, in.at("functional")));
        report["potential"] = apolar::to_string(f);
        text = "potential: " + apolar::to_string(f) + "\n";
    } else if (in.contains("potential") && in.contains("bound")) {
        apolar::LinearFunctional ell = apolar::functional_from_potential(
            apolar::parse_poly(ring, in.at("potential").get<std::string>()),
            in.at("bound").get<int>());
        report["functional"] = apolar::functional_to_json(ell);
        text = "functional:\n" + report["functional"].dump(2) + "\n";
    } else {
        throw apolar::ParseError(
            "potential: give \"functional\" (to build the potential) or \"potential\" plus "
            "\"bound\" (to read off the functional)");
    }
    emit(report, text, opt);
    return 0;
}

int run_integrate(const Options& opt) {
    OrderedJson in = load_json(opt.input);
    apolar::FanPtr fan =
        in.contains("fan") ? apolar::fan_from_json(in.at("fan")) : apolar::fan_from_json(in);
    OrderedJson jpoly;
    if (!opt.polytope_path.empty()) {
        jpoly = load_json(opt.polytope_path);
    } else if (in.contains("polytope")) {
        jpoly = in.at("polytope");
    } else {
        throw apolar::ParseError("integrate: no polytope given (inline or --polytope)");
    }
    apolar::VirtualPolytope h = apolar::polytope_from_json(fan, jpoly);
    apolar::Monomial mono(fan->dim, 0);
    if (in.contains("monomial")) mono = in.at("monomial").get<apolar::Monomial>();
    if (static_cast<int>(mono.size()) != fan->dim)
        throw apolar::ParseError("integrate: monomial length must equal the fan dimension");
    for (int e : mono) {
        if (e < 0) throw apolar::ParseError("integrate: negative exponent");
    }

    OrderedJson report;
    report["command"] = "integrate";
    bool convex = apolar::is_convex(h);
    report["convex"] = convex;
    std::ostringstream text;
    if (convex) {
        apolar::ConvexIntegral r = apolar::integrate_convex(h, mono);
        report["method"] = "convex";
        report["integral"] = apolar::to_string(r.value);
        report["degenerate"] = r.degenerate;
        text << "integral: " << apolar::to_string(r.value)
             << (r.degenerate ? " (degenerate polytope)" : "") << "\n";
    } else {
        apolar::Rational v = apolar::integrate_virtual(h, mono);
        report["method"] = "virtual";
        report["integral"] = apolar::to_string(v);
        text << "integral: " << apolar::to_string(v) << " (virtual)\n";
    }
    emit(report, text.str(), opt);
    return 0;
}

int run_toric(const Options& opt) {
    OrderedJson in = load_json(opt.input);
    apolar::FanPtr fan =
        in.contains("fan") ? apolar::fan_from_json(in.at("fan")) : apolar::fan_from_json(in);
    apolar::GradedQuotient q = apolar::toric_cohomology(fan);

    OrderedJson report;
    report["command"] = "toric";
    report["ray_variables"] = q.ring->variables;
    report["potential"] = apolar::to_string(q.potential);
    report["socle_degree"] = q.socle_degree;
    report.update(apolar::quotient_fields_json(q));

    std::ostringstream text;
    text << quotient_text(q);
    if (!opt.polytope_path.empty()) {
        apolar::VirtualPolytope h =
            apolar::polytope_from_json(fan, load_json(opt.polytope_path));
        OrderedJson jp = apolar::polytope_to_json(h);
        jp["convex"] = apolar::is_convex(h);
        jp["strictly_convex"] = apolar::is_strictly_convex(h);
        OrderedJson verts = OrderedJson::array();
        for (const auto& v : apolar::vertices(h)) {
            OrderedJson row = OrderedJson::array();
            for (const auto& x : v) row.push_back(apolar::to_string(x));
            verts.push_back(std::move(row));
        }
        jp["vertices"] = verts;
        apolar::Rational vol = apolar::integrate_virtual(h, apolar::Monomial(fan->dim, 0));
        jp["volume"] = apolar::to_string(vol);
        report["polytope"] = jp;
        text << "polytope volume: " << apolar::to_string(vol) << "\n";
    }
    if (!opt.export_plain.empty()) write_file(opt.export_plain, apolar::presentation_text(q));
    emit(report, text.str(), opt);
    return 0;
}

int run_bundle(const Options& opt) {
    OrderedJson in = load_json(opt.input);
    apolar::BundleInput input = apolar::bundle_input_from_json(in);
    apolar::BundlePresentation p =
        apolar::bundle_cohomology(input.fan, input.base, input.chern);

    OrderedJson report;
    report["command"] = "bundle";
    report["ring"] = apolar::ring_to_json(*p.ring);
    report["potential"] = apolar::to_string(p.potential);
    report["socle_degree"] = p.quotient.socle_degree;
    report.update(apolar::quotient_fields_json(p.quotient));
    report["leray_hirsch"] = p.leray_hirsch;
    if (!opt.export_plain.empty())
        write_file(opt.export_plain, apolar::presentation_text(p.quotient));

    std::ostringstream text;
    text << quotient_text(p.quotient)
         << "leray_hirsch: " << (p.leray_hirsch ? "true" : "false") << "\n";
    emit(report, text.str(), opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Macaulay inverse systems, toric cohomology and toric-bundle potentials"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_plain, bool with_polytope) {
        sub->add_option("input", opt.input, "input JSON file")->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        if (with_plain)
            sub->add_option("--export-plain", opt.export_plain,
                            "write the plain-text presentation to this path");
        if (with_polytope)
            sub->add_option("--polytope", opt.polytope_path, "virtual polytope JSON file");
    };

    add_common(app.add_subcommand("ann", "graded quotient by the annihilator of a potential"),
               true, false);
    add_common(app.add_subcommand("local", "filtered quotient for a non-homogeneous potential"),
               true, false);
    add_common(app.add_subcommand("potential", "convert between functionals and potentials"),
               false, false);
    add_common(app.add_subcommand("integrate", "exact integral over a (virtual) polytope"),
               false, true);
    add_common(app.add_subcommand("toric", "cohomology presentation of a toric variety"), true,
               true);
    add_common(app.add_subcommand("bundle", "cohomology presentation of a toric bundle"), true,
               false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("ann")) return run_ann(opt);
        if (app.got_subcommand("local")) return run_local(opt);
        if (app.got_subcommand("potential")) return run_potential(opt);
        if (app.got_subcommand("integrate")) return run_integrate(opt);
        if (app.got_subcommand("toric")) return run_toric(opt);
        if (app.got_subcommand("bundle")) return run_bundle(opt);
    } catch (const apolar::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const apolar::MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
