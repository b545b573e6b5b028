#include "toric/cli.hpp"

#include "toric/betti.hpp"
#include "toric/complex.hpp"
#include "toric/gensets.hpp"
#include "toric/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

namespace toric::cli {

namespace {

struct Extras {
    std::string degree;
    bool dot = false;
    bool emit_edges = false;
    bool enumerate = false;
    std::optional<std::size_t> sample;
    std::string set_path;
};

AnalysisOptions analysis_options(const RunConfig& rc) {
    AnalysisOptions o;
    o.fiber_cap = rc.fiber_cap;
    o.spair_budget = rc.spair_budget;
    return o;
}

Json monomial_list(const std::vector<ExponentVector>& monomials, const VectorConfiguration& config) {
    Json out = Json::array();
    for (const auto& u : monomials)
        out.push_back(Json{{"monomial", to_json(u)}, {"degree", to_json(a_degree(u, config))}, {"text", format_monomial(u)}});
    return out;
}

Json betti_json(const std::vector<BettiRecord>& table) {
    Json out = Json::array();
    for (const auto& r : table) out.push_back(to_json(r));
    return out;
}

void print_binomials(std::ostream& out, const BinomialSet& set, const VectorConfiguration& config) {
    for (const auto& b : set.elements)
        out << "  " << std::left << std::setw(36) << format_binomial(b) << " degree (" << format_degree(degree_of(b, config))
            << ")\n";
}

void print_betti(std::ostream& out, const std::vector<BettiRecord>& table) {
    out << "degree                n_b  beta  minimal  sizes\n";
    for (const auto& r : table) {
        std::string sizes;
        for (std::size_t i = 0; i < r.sizes.size(); ++i) sizes += (i ? "," : "") + std::to_string(r.sizes[i]);
        out << std::left << std::setw(22) << ("(" + format_degree(r.degree) + ")") << std::setw(5) << r.components
            << std::setw(6) << r.beta << std::setw(9) << (r.is_minimal_degree ? "yes" : "no") << sizes << "\n";
    }
}

void print_complex(std::ostream& out, const IndispensableComplex& complex) {
    out << "vertices (" << complex.vertices.size() << "):\n";
    for (std::size_t i = 0; i < complex.vertices.size(); ++i)
        out << "  [" << i << "] " << format_monomial(complex.vertices[i]) << "  degree ("
            << format_degree(complex.vertex_degrees[i]) << ")\n";
    out << "facets (" << complex.facets.size() << "):\n";
    for (const auto& f : complex.facets) {
        out << "  dim " << f.dimension() << "  degree (" << format_degree(f.degree) << ")  {";
        for (std::size_t i = 0; i < f.members.size(); ++i)
            out << (i ? ", " : "") << format_monomial(complex.vertices[f.members[i]]);
        out << "}\n";
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int dispatch(const RunConfig& rc, const Extras& extras, std::ostream& out) {
    const ToricIdeal ideal(read_configuration_file(rc.input), analysis_options(rc));
    const auto& config = ideal.config();
    const bool table = rc.format == Format::Table;

    if (rc.command == "analyze") {
        auto betti = betti_table(ideal, rc.paranoid);
        NuResult n = nu(ideal);
        auto corollary = corollary_product_check(ideal);
        IndispensableComplex complex = build_complex(ideal);
        std::vector<Binomial> indispensable = indispensable_binomials(ideal);
        const bool by_indispensables = generated_by_indispensables(ideal);
        const bool necessary = check_necessary_condition(ideal);
        const bool generic = is_generic(ideal);
        const bool principal = is_principal(ideal);
        if (table) {
            out << "configuration: " << (config.name().empty() ? rc.input : config.name()) << " (m=" << config.size()
                << ", n=" << config.dimension() << ")\n";
            out << "minimal generating set (" << ideal.minimal_generators().size() << "):\n";
            print_binomials(out, ideal.minimal_generators(), config);
            print_betti(out, betti);
            out << "nu = " << n.value << "\n";
            print_complex(out, complex);
            out << "indispensable binomials (" << indispensable.size() << "):\n";
            for (const auto& b : indispensable) out << "  " << format_binomial(b) << "\n";
            out << "generated by indispensables: " << (by_indispensables ? "yes" : "no") << "\n"
                << "all facets 1-simplices: " << (necessary ? "yes" : "no") << "\n"
                << "generic: " << (generic ? "yes" : "no") << "\n"
                << "principal: " << (principal ? "yes" : "no") << "\n";
            return kSuccess;
        }
        Json grading = Json::array();
        for (const auto& q : config.grading()) grading.push_back(toric::to_string(q));
        Json vectors = Json::array();
        for (const auto& a : config.vectors()) vectors.push_back(to_json(a));
        Json factors = Json::array();
        for (const auto& f : n.factors) factors.push_back(Json{{"degree", to_json(f.degree)}, {"factor", f.factor.str()}});
        Json ind = Json::array();
        for (const auto& b : indispensable) ind.push_back(to_json(b, config));
        Json minimal_degrees = Json::array();
        for (const auto& d : minimal_binomial_degrees(ideal)) minimal_degrees.push_back(to_json(d));
        emit(out, Json{{"name", config.name()},
                       {"configuration", Json{{"vectors", vectors}, {"grading", grading}}},
                       {"generators", to_json(ideal.minimal_generators(), config)},
                       {"saturated_size", ideal.generators().size()},
                       {"betti", betti_json(betti)},
                       {"minimal_degrees", minimal_degrees},
                       {"nu", n.value.str()},
                       {"nu_factors", factors},
                       {"nu_corollary", corollary ? Json(corollary->str()) : Json(nullptr)},
                       {"indispensable_monomials", monomial_list(complex.vertices, config)},
                       {"indispensable_binomials", ind},
                       {"complex", to_json(complex)},
                       {"generated_by_indispensables", by_indispensables},
                       {"necessary_condition", necessary},
                       {"generic", generic},
                       {"principal", principal}});
        return kSuccess;
    }

    if (rc.command == "generators") {
        if (table) {
            out << "saturated generating set (" << ideal.generators().size() << "):\n";
            print_binomials(out, ideal.generators(), config);
            out << "minimal generating set (" << ideal.minimal_generators().size() << "):\n";
            print_binomials(out, ideal.minimal_generators(), config);
            return kSuccess;
        }
        emit(out, Json{{"saturated", to_json(ideal.generators(), config)},
                       {"minimal", to_json(ideal.minimal_generators(), config)}});
        return kSuccess;
    }

    if (rc.command == "betti") {
        auto betti = betti_table(ideal, rc.paranoid);
        NuResult n = nu(ideal);
        if (table) {
            print_betti(out, betti);
            out << "nu = " << n.value << "\n";
            return kSuccess;
        }
        emit(out, Json{{"betti", betti_json(betti)}, {"nu", n.value.str()}});
        return kSuccess;
    }

    if (rc.command == "nu") {
        if (rc.paranoid) betti_table(ideal, true);
        NuResult n = nu(ideal);
        if (table) {
            out << n.value << "\n";
            return kSuccess;
        }
        Json factors = Json::array();
        for (const auto& f : n.factors) factors.push_back(Json{{"degree", to_json(f.degree)}, {"factor", f.factor.str()}});
        emit(out, Json{{"nu", n.value.str()}, {"factors", factors}});
        return kSuccess;
    }

    if (rc.command == "fiber") {
        ADegree b = parse_degree(extras.degree);
        if (b.size() != config.dimension())
            throw MalformedInput("degree has " + std::to_string(b.size()) + " entries, expected " +
                                 std::to_string(config.dimension()));
        auto graph = ideal.graph(b);
        if (extras.dot) {
            out << to_dot(*graph, extras.emit_edges);
            return kSuccess;
        }
        if (table) {
            out << "fiber of degree (" << format_degree(b) << "): " << graph->fiber->size() << " members, "
                << graph->component_count() << " components\n";
            for (std::size_t i = 0; i < graph->fiber->size(); ++i)
                out << "  " << std::left << std::setw(30) << format_monomial(graph->fiber->members[i]) << " component "
                    << graph->component[i] << "\n";
            return kSuccess;
        }
        Json members = Json::array();
        for (std::size_t i = 0; i < graph->fiber->size(); ++i)
            members.push_back(Json{{"monomial", to_json(graph->fiber->members[i])},
                                   {"text", format_monomial(graph->fiber->members[i])},
                                   {"component", graph->component[i]}});
        emit(out, Json{{"degree", to_json(b)},
                       {"size", graph->fiber->size()},
                       {"components", graph->component_count()},
                       {"members", members}});
        return kSuccess;
    }

    if (rc.command == "gensets") {
        std::vector<BinomialSet> sets;
        if (extras.sample) {
            if (!rc.seed) throw MalformedInput("--sample requires --seed");
            for (std::size_t k = 0; k < *extras.sample; ++k) sets.push_back(sample_minimal_genset(ideal, *rc.seed + k));
        } else {
            sets = enumerate_minimal_gensets(ideal, rc.max_enumeration.value_or(static_cast<std::size_t>(-1)));
        }
        if (table) {
            for (std::size_t k = 0; k < sets.size(); ++k) {
                out << "set " << k + 1 << ":\n";
                print_binomials(out, sets[k], config);
            }
            return kSuccess;
        }
        Json arr = Json::array();
        for (const auto& s : sets) arr.push_back(to_json(s, config));
        emit(out, arr);
        return kSuccess;
    }

    if (rc.command == "indispensable") {
        auto monomials = indispensable_monomials(ideal);
        auto binomials = indispensable_binomials(ideal);
        if (table) {
            out << "indispensable monomials (" << monomials.size() << "):\n";
            for (const auto& u : monomials) out << "  " << format_monomial(u) << "\n";
            out << "indispensable binomials (" << binomials.size() << "):\n";
            for (const auto& b : binomials) out << "  " << format_binomial(b) << "\n";
            return kSuccess;
        }
        Json bins = Json::array();
        for (const auto& b : binomials) bins.push_back(to_json(b, config));
        emit(out, Json{{"monomials", monomial_list(monomials, config)}, {"binomials", bins}});
        return kSuccess;
    }

    if (rc.command == "complex") {
        IndispensableComplex complex = build_complex(ideal);
        if (table) print_complex(out, complex);
        else emit(out, to_json(complex));
        return kSuccess;
    }

    if (rc.command == "generic-check") {
        const bool generic = is_generic(ideal);
        NuResult n = nu(ideal);
        const bool by_indispensables = generated_by_indispensables(ideal);
        if (table) {
            out << "generic: " << (generic ? "yes" : "no") << "\nnu = " << n.value
                << "\ngenerated by indispensables: " << (by_indispensables ? "yes" : "no") << "\n";
            return kSuccess;
        }
        emit(out, Json{{"generic", generic}, {"nu", n.value.str()}, {"generated_by_indispensables", by_indispensables}});
        return kSuccess;
    }

    if (rc.command == "check") {
        std::ifstream in(extras.set_path);
        if (!in) throw MalformedInput("cannot open " + extras.set_path);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw MalformedInput(extras.set_path + ": " + e.what());
        }
        BinomialSet g = binomial_set_from_json(doc, config);
        const bool generating = is_generating_set(g, ideal.generators(), ideal.fibers());
        const bool minimal = generating && is_minimal_generating_set(g, ideal.generators(), ideal.fibers());
        if (table) {
            out << "binomials: " << g.size() << "\ngenerating: " << (generating ? "yes" : "no")
                << "\nminimal: " << (minimal ? "yes" : "no") << "\n";
            return kSuccess;
        }
        emit(out, Json{{"size", g.size()}, {"generating", generating}, {"minimal", minimal}});
        return kSuccess;
    }

    throw MalformedInput("unknown command " + rc.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    Extras extras;
    std::string format = "json";

    CLI::App app{"Minimal binomial generating sets, Betti degrees and the indispensable complex of a toric ideal"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--fiber-cap", rc.fiber_cap, "Maximum fiber size")->envname("TORIC_FIBER_CAP")->check(CLI::PositiveNumber);
    app.add_option("--spair-budget", rc.spair_budget, "S-pair budget per saturation round")
        ->envname("TORIC_SPAIR_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_flag("--paranoid", rc.paranoid, "Verify G(b) connectivity at every non-candidate degree");

    auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", rc.input, "Configuration JSON file")->required();
        return sub;
    };
    add("analyze", "Full report");
    add("generators", "Saturated and minimal generating sets");
    add("betti", "Betti A-degrees and nu");
    add("nu", "Number of minimal generating sets");
    auto* fiber = add("fiber", "Fiber members and components of G(b)");
    fiber->add_option("--degree", extras.degree, "Degree as comma-separated integers")->required();
    fiber->add_flag("--dot", extras.dot, "Emit Graphviz instead");
    fiber->add_flag("--emit-edges", extras.emit_edges, "Include representative edges in the Graphviz output");
    auto* gensets = add("gensets", "Enumerate or sample minimal generating sets");
    auto* enumerate = gensets->add_flag("--enumerate", extras.enumerate, "Enumerate in canonical order");
    gensets->add_option("--max", rc.max_enumeration, "Stop after this many sets")->check(CLI::PositiveNumber);
    auto* sample = gensets->add_option("--sample", extras.sample, "Number of samples")->check(CLI::PositiveNumber);
    gensets->add_option("--seed", rc.seed, "Seed for --sample");
    enumerate->excludes(sample);
    add("indispensable", "Indispensable monomials and binomials");
    add("complex", "The indispensable complex");
    add("generic-check", "Genericity and nu");
    auto* check = add("check", "Validate a binomial set for generation and minimality");
    check->add_option("--set", extras.set_path, "Binomial set JSON file")->required()->check(CLI::ExistingFile);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kMalformedInput;
    }
    rc.command = app.get_subcommands().front()->get_name();
    rc.format = format == "table" ? Format::Table : Format::Json;

    try {
        return dispatch(rc, extras, out);
    } catch (const ToricError& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::MalformedInput:
            case ErrorKind::DegreeMismatch:
            case ErrorKind::ZeroBinomial: return kMalformedInput;
            case ErrorKind::NotPointed: return kNotPointed;
            case ErrorKind::BudgetExceeded:
            case ErrorKind::FiberTooLarge: return kResourceCap;
            default: return kFailure;
        }
    }
}

}  // namespace toric::cli
