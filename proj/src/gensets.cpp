#include "toric/gensets.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace toric {

std::vector<TreeEdge> prufer_decode(const std::vector<std::size_t>& sequence, std::size_t n) {
    std::vector<TreeEdge> edges;
    if (n < 2) return edges;
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : sequence) ++degree[x];
    std::set<std::size_t> leaves;
    for (std::size_t i = 0; i < n; ++i)
        if (degree[i] == 1) leaves.insert(i);
    for (std::size_t x : sequence) {
        std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--degree[x] == 1) leaves.insert(x);
    }
    std::size_t a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::size_t> prufer_encode(std::vector<TreeEdge> edges, std::size_t n) {
    std::vector<std::set<std::size_t>> adjacent(n);
    for (const auto& [a, b] : edges) {
        adjacent[a].insert(b);
        adjacent[b].insert(a);
    }
    std::set<std::size_t> leaves;
    for (std::size_t i = 0; i < n; ++i)
        if (adjacent[i].size() == 1) leaves.insert(i);
    std::vector<std::size_t> sequence;
    while (sequence.size() + 2 < n) {
        std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        std::size_t parent = *adjacent[leaf].begin();
        sequence.push_back(parent);
        adjacent[parent].erase(leaf);
        adjacent[leaf].clear();
        if (adjacent[parent].size() == 1) leaves.insert(parent);
    }
    return sequence;
}

namespace {

std::vector<std::vector<ExponentVector>> components_of(const FiberGraph& graph) {
    std::vector<std::vector<ExponentVector>> out(graph.component_count());
    for (std::size_t i = 0; i < graph.component.size(); ++i) out[graph.component[i]].push_back(graph.fiber->members[i]);
    return out;
}

}  // namespace

BinomialSet realize(const std::vector<TreeChoice>& choices, const ToricIdeal& ideal) {
    const auto& config = ideal.config();
    std::set<ADegree> betti;
    for (const auto& r : betti_table(ideal)) betti.insert(r.degree);

    std::set<ADegree> covered;
    std::vector<Binomial> out;
    for (const auto& choice : choices) {
        const std::string where = "degree (" + format_degree(choice.degree) + ")";
        if (!betti.count(choice.degree)) throw InvalidChoice(where + " is not a Betti degree");
        if (!covered.insert(choice.degree).second) throw InvalidChoice(where + " is chosen twice");
        if (choice.edges.size() != choice.monomials.size())
            throw InvalidChoice(where + ": edges and monomial choices differ in number");

        auto graph = ideal.graph(choice.degree);
        const std::size_t n = graph->component_count();
        if (choice.edges.size() + 1 != n)
            throw InvalidChoice(where + ": a spanning tree on " + std::to_string(n) + " components needs " +
                                std::to_string(n - 1) + " edges");
        DisjointSets tree(n);
        for (std::size_t e = 0; e < choice.edges.size(); ++e) {
            auto [i, j] = choice.edges[e];
            if (i >= n || j >= n || !tree.unite(i, j)) throw InvalidChoice(where + ": edges do not form a tree");
            const auto& [u, v] = choice.monomials[e];
            std::size_t iu = graph->fiber->index_of(u, config), iv = graph->fiber->index_of(v, config);
            if (iu == graph->fiber->size() || graph->component[iu] != i)
                throw InvalidChoice(where + ": " + format_monomial(u) + " is not in component " + std::to_string(i));
            if (iv == graph->fiber->size() || graph->component[iv] != j)
                throw InvalidChoice(where + ": " + format_monomial(v) + " is not in component " + std::to_string(j));
            out.push_back(normalize_binomial(u, v, config));
        }
    }
    if (covered.size() != betti.size()) throw InvalidChoice("some Betti degree has no tree choice");

    BinomialSet result = make_binomial_set(out, Provenance::Minimalized, config);
#ifndef NDEBUG
    if (!is_minimal_generating_set(result, ideal.generators(), ideal.fibers()))
        throw InternalInconsistency("realized tree choices are not a minimal generating set");
#endif
    return result;
}

void MinimalGensetEnumerator::DegreeState::reset_tree() {
    edges = prufer_decode(prufer, components.size());
    choice.assign(2 * edges.size(), 0);
}

bool MinimalGensetEnumerator::DegreeState::advance() {
    for (std::size_t d = choice.size(); d-- > 0;) {
        const auto& edge = edges[d / 2];
        std::size_t radix = components[d % 2 == 0 ? edge.first : edge.second].size();
        if (++choice[d] < radix) return true;
        choice[d] = 0;
    }
    const std::size_t n = components.size();
    for (std::size_t d = prufer.size(); d-- > 0;) {
        if (++prufer[d] < n) {
            reset_tree();
            return true;
        }
        prufer[d] = 0;
    }
    reset_tree();
    return false;
}

TreeChoice MinimalGensetEnumerator::DegreeState::current() const {
    TreeChoice t{degree, edges, {}};
    for (std::size_t e = 0; e < edges.size(); ++e)
        t.monomials.emplace_back(components[edges[e].first][choice[2 * e]],
                                 components[edges[e].second][choice[2 * e + 1]]);
    return t;
}

MinimalGensetEnumerator::MinimalGensetEnumerator(const ToricIdeal& ideal) : ideal_(&ideal) {
    for (const auto& r : betti_table(ideal)) {
        DegreeState s;
        s.degree = r.degree;
        s.components = components_of(*ideal.graph(r.degree));
        s.prufer.assign(s.components.size() - 2, 0);
        s.reset_tree();
        states_.push_back(std::move(s));
    }
}

std::optional<BinomialSet> MinimalGensetEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (started_) {
        std::size_t d = states_.size();
        while (d-- > 0)
            if (states_[d].advance()) break;
        if (d == static_cast<std::size_t>(-1)) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    std::vector<Binomial> out;
    for (const auto& s : states_) {
        TreeChoice t = s.current();
        for (const auto& [u, v] : t.monomials) out.push_back(normalize_binomial(u, v, ideal_->config()));
    }
    return make_binomial_set(out, Provenance::Minimalized, ideal_->config());
}

std::vector<BinomialSet> enumerate_minimal_gensets(const ToricIdeal& ideal, std::size_t cap) {
    std::vector<BinomialSet> out;
    MinimalGensetEnumerator it(ideal);
    while (out.size() < cap) {
        auto next = it.next();
        if (!next) break;
        out.push_back(std::move(*next));
    }
    return out;
}

BinomialSet sample_minimal_genset(const ToricIdeal& ideal, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    std::vector<TreeChoice> choices;
    for (const auto& r : betti_table(ideal)) {
        auto graph = ideal.graph(r.degree);
        auto components = components_of(*graph);
        std::vector<std::size_t> prufer;
        for (std::size_t k = 0; k + 2 < components.size(); ++k)
            prufer.push_back(graph->component[uniform(graph->fiber->size())]);
        TreeChoice t{r.degree, prufer_decode(prufer, components.size()), {}};
        for (const auto& [i, j] : t.edges) {
            const auto& ci = components[i];
            const auto& cj = components[j];
            const ExponentVector& u = ci[uniform(ci.size())];
            const ExponentVector& v = cj[uniform(cj.size())];
            t.monomials.emplace_back(u, v);
        }
        choices.push_back(std::move(t));
    }
    std::vector<Binomial> out;
    for (const auto& t : choices)
        for (const auto& [u, v] : t.monomials) out.push_back(normalize_binomial(u, v, ideal.config()));
    return make_binomial_set(out, Provenance::Minimalized, ideal.config());
}

std::vector<TreeChoice> spanning_tree_of(const BinomialSet& g, const ToricIdeal& ideal) {
    const auto& config = ideal.config();
    if (!is_minimal_generating_set(g, ideal.generators(), ideal.fibers()))
        throw NotMinimal("binomial set is not a minimal generating set");
    std::vector<TreeChoice> out;
    for (const auto& [degree, elements] : group_by_degree(g, config)) {
        auto graph = ideal.graph(degree);
        TreeChoice t{degree, {}, {}};
        for (const auto& e : elements) {
            std::size_t i = graph->component[graph->fiber->index_of(e.lhs, config)];
            std::size_t j = graph->component[graph->fiber->index_of(e.rhs, config)];
            t.edges.emplace_back(i, j);
            t.monomials.emplace_back(e.lhs, e.rhs);
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace toric
