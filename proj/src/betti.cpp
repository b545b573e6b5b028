#include "toric/betti.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toric {

namespace {

BettiRecord make_record(const FiberGraph& graph) {
    ComponentSummary s = summarize(graph);
    BettiRecord r;
    r.degree = graph.degree;
    r.components = s.count;
    r.sizes = s.sizes;
    r.beta = s.count - 1;
    r.is_minimal_degree = std::all_of(s.sizes.begin(), s.sizes.end(), [](std::size_t t) { return t == 1; });
    return r;
}

// Every exponent vector of weight at most `limit`.
void each_monomial_up_to(const VectorConfiguration& config, const Integer& limit,
                         const std::function<void(const ExponentVector&)>& visit) {
    ExponentVector u(config.size(), Integer(0));
    std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t i, const Integer& left) {
        if (i == u.size()) {
            visit(u);
            return;
        }
        for (Integer k = 0; k * config.weights()[i] <= left; ++k) {
            u[i] = k;
            rec(i + 1, left - k * config.weights()[i]);
        }
        u[i] = 0;
    };
    rec(0, limit);
}

void verify_candidates_complete(const ToricIdeal& ideal, const std::set<ADegree>& candidates) {
    const auto& config = ideal.config();
    Integer limit = 0;
    for (const auto& d : candidates) limit = std::max(limit, config.degree_weight(d));
    std::set<ADegree> seen;
    each_monomial_up_to(config, limit, [&](const ExponentVector& u) {
        ADegree d = a_degree(u, config);
        if (candidates.count(d) || !seen.insert(d).second) return;
        if (ideal.fibers().get(d)->size() < 2) return;
        if (!build_fiber_graph(d, ideal.generators(), ideal.fibers()).connected())
            throw InternalInconsistency("G(" + format_degree(d) +
                                        ") is disconnected but is not a degree of the generating set");
    });
}

}  // namespace

std::vector<BettiRecord> betti_table(const ToricIdeal& ideal, bool paranoid) {
    const auto& config = ideal.config();
    std::set<ADegree> candidates;
    for (const auto& b : ideal.generators().elements) candidates.insert(degree_of(b, config));
    if (paranoid) verify_candidates_complete(ideal, candidates);

    std::vector<BettiRecord> table;
    for (const auto& d : candidates) {
        auto graph = ideal.graph(d);
        if (!graph->connected()) table.push_back(make_record(*graph));
    }
    std::sort(table.begin(), table.end(), [&](const BettiRecord& a, const BettiRecord& b) {
        return degree_less_for_report(config, a.degree, b.degree);
    });
    return table;
}

std::vector<ADegree> minimal_binomial_degrees(const ToricIdeal& ideal) {
    std::vector<ADegree> out;
    for (const auto& r : betti_table(ideal))
        if (r.is_minimal_degree) out.push_back(r.degree);
    return out;
}

Integer nu_factor(const std::vector<std::size_t>& sizes) {
    Integer product = 1, total = 0;
    for (std::size_t t : sizes) {
        product *= t;
        total += t;
    }
    // n_b >= 2 at Betti degrees; n_b == 1 would contribute t / t = 1
    if (sizes.size() < 2) return 1;
    return product * boost::multiprecision::pow(total, static_cast<unsigned>(sizes.size() - 2));
}

NuResult nu(const ToricIdeal& ideal) {
    NuResult result;
    for (const auto& r : betti_table(ideal)) {
        Integer f = nu_factor(r.sizes);
        result.value *= f;
        result.factors.push_back({r.degree, f});
    }
    return result;
}

bool is_indispensable_binomial(const Binomial& b, const ToricIdeal& ideal) {
    const auto& config = ideal.config();
    Binomial nb = normalize_binomial(b.lhs, b.rhs, config);
    auto graph = ideal.graph(degree_of(nb, config));
    return graph->component_count() == 2 && graph->fiber->size() == 2;
}

bool generated_by_indispensables(const ToricIdeal& ideal) {
    for (const auto& r : betti_table(ideal))
        if (!r.is_minimal_degree || r.beta != 1) return false;
    return true;
}

std::optional<Integer> corollary_product_check(const ToricIdeal& ideal) {
    Integer product = 1;
    for (const auto& r : betti_table(ideal)) {
        if (!r.is_minimal_degree) return std::nullopt;
        if (r.beta > 1) product *= boost::multiprecision::pow(Integer(r.beta + 1), static_cast<unsigned>(r.beta - 1));
    }
    return product;
}

bool is_generic(const ToricIdeal& ideal) {
    if (!generated_by_indispensables(ideal)) return false;
    for (const auto& r : betti_table(ideal)) {
        // generated by indispensables: the fiber is exactly {lhs, rhs}
        const auto& members = ideal.graph(r.degree)->fiber->members;
        for (std::size_t i = 0; i < ideal.config().size(); ++i)
            if (members[0][i] == 0 && members[1][i] == 0) return false;
    }
    return true;
}

}  // namespace toric
