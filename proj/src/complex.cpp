#include "toric/complex.hpp"

#include "toric/betti.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

std::vector<ExponentVector> indispensable_monomials(const ToricIdeal& ideal) {
    const auto& config = ideal.config();
    std::set<ExponentVector> collected;
    for (const auto& b : ideal.generators().elements) {
        collected.insert(b.lhs);
        collected.insert(b.rhs);
    }
    std::vector<ExponentVector> minimal;
    for (const auto& u : collected) {
        bool redundant = std::any_of(collected.begin(), collected.end(),
                                     [&](const ExponentVector& v) { return v != u && divides(v, u); });
        if (!redundant) minimal.push_back(u);
    }
    std::sort(minimal.begin(), minimal.end(), CanonicalOrder{&config});
    return minimal;
}

IndispensableComplex build_complex(const ToricIdeal& ideal) {
    const auto& config = ideal.config();
    IndispensableComplex complex;
    complex.vertices = indispensable_monomials(ideal);
    std::map<ADegree, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
        complex.vertex_degrees.push_back(a_degree(complex.vertices[i], config));
        classes[complex.vertex_degrees.back()].push_back(i);
    }
    for (auto& [degree, members] : classes) complex.facets.push_back(Facet{std::move(members), degree});
    std::sort(complex.facets.begin(), complex.facets.end(), [&](const Facet& a, const Facet& b) {
        return degree_less_for_report(config, a.degree, b.degree);
    });
    return complex;
}

std::vector<Binomial> indispensable_binomials(const ToricIdeal& ideal) {
    const auto& config = ideal.config();
    IndispensableComplex complex = build_complex(ideal);
    std::vector<Binomial> out;
    for (const auto& facet : complex.facets) {
        if (facet.members.size() != 2) continue;
        auto graph = ideal.graph(facet.degree);
        bool minimal = graph->component_count() >= 2 &&
                       std::all_of(graph->component_sizes.begin(), graph->component_sizes.end(),
                                   [](std::size_t t) { return t == 1; });
        if (!minimal) continue;
        Binomial b = normalize_binomial(complex.vertices[facet.members[0]], complex.vertices[facet.members[1]], config);
#ifndef NDEBUG
        if (!is_indispensable_binomial(b, ideal))
            throw InternalInconsistency("facet criterion and component criterion disagree on " + format_binomial(b));
#endif
        out.push_back(std::move(b));
    }
    return out;
}

bool is_principal(const ToricIdeal& ideal) {
    IndispensableComplex complex = build_complex(ideal);
    return complex.facets.size() == 1 && complex.facets.front().members.size() == 2;
}

bool check_necessary_condition(const ToricIdeal& ideal) {
    IndispensableComplex complex = build_complex(ideal);
    return std::all_of(complex.facets.begin(), complex.facets.end(),
                       [](const Facet& f) { return f.members.size() == 2; });
}

bool is_minimal_degree_by_vertices(const ADegree& b, const IndispensableComplex& complex,
                                   const VectorConfiguration& config) {
    for (const auto& d : complex.vertex_degrees)
        if (degree_less(d, b, config)) return false;
    return true;
}

}  // namespace toric
