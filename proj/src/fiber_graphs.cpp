#include "toric/fiber_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
}

std::vector<ExponentVector> FiberGraph::members_of(std::size_t c) const {
    std::vector<ExponentVector> out;
    for (std::size_t i = 0; i < component.size(); ++i)
        if (component[i] == c) out.push_back(fiber->members[i]);
    return out;
}

ComponentSummary summarize(const FiberGraph& graph) {
    ComponentSummary s{graph.degree, graph.component_count(), graph.component_sizes};
    std::sort(s.sizes.begin(), s.sizes.end(), std::greater<>());
    return s;
}

namespace {

FiberGraph connect_by_moves(const ADegree& b, const BinomialSet& generators, FiberCache& fibers,
                            bool allow_unit_multiplier) {
    const auto& config = fibers.config();
    FiberGraph graph;
    graph.degree = b;
    graph.fiber = fibers.get(b);
    const auto& members = graph.fiber->members;
    DisjointSets sets(members.size());

    const Integer bound = config.degree_weight(b);
    std::vector<std::pair<const ExponentVector*, const ExponentVector*>> moves;
    for (const auto& g : generators.elements) {
        Integer w = config.weight(g.lhs);
        if (w > bound || (w == bound && !allow_unit_multiplier)) continue;
        moves.emplace_back(&g.lhs, &g.rhs);
        moves.emplace_back(&g.rhs, &g.lhs);
    }

    ExponentVector target;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& u = members[i];
        for (const auto& [from, to] : moves) {
            if (!divides(*from, u)) continue;
            if (!allow_unit_multiplier && *from == u) continue;
            target = u;
            for (std::size_t k = 0; k < u.size(); ++k) target[k] += (*to)[k] - (*from)[k];
            std::size_t j = graph.fiber->index_of(target, config);
            if (j == members.size())
                throw InternalInconsistency("move by " + format_monomial(*from) + " - " + format_monomial(*to) +
                                            " leaves the fiber of degree (" + format_degree(b) + ")");
            if (sets.unite(i, j)) graph.representative_edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }

    std::vector<std::size_t> label(members.size(), members.size());
    graph.component.resize(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::size_t root = sets.find(i);
        if (label[root] == members.size()) {
            label[root] = graph.component_sizes.size();
            graph.component_sizes.push_back(0);
        }
        graph.component[i] = label[root];
        ++graph.component_sizes[label[root]];
    }
    return graph;
}

}  // namespace

FiberGraph build_fiber_graph(const ADegree& b, const BinomialSet& generators, FiberCache& fibers) {
    return connect_by_moves(b, generators, fibers, false);
}

bool gamma_connected(const ADegree& b, const BinomialSet& g, FiberCache& fibers) {
    return connect_by_moves(b, g, fibers, true).connected();
}

bool is_generating_set(const BinomialSet& g, const BinomialSet& reference, FiberCache& fibers) {
    const auto& config = fibers.config();
    std::set<ADegree> degrees;
    for (const auto& b : reference.elements) degrees.insert(degree_of(b, config));
    for (const auto& b : g.elements) degrees.insert(degree_of(b, config));
    for (const auto& d : degrees)
        if (!gamma_connected(d, g, fibers)) return false;
    return true;
}

bool is_minimal_generating_set(const BinomialSet& g, const BinomialSet& reference, FiberCache& fibers) {
    const auto& config = fibers.config();
    if (g.empty()) return reference.empty();
    if (!is_generating_set(g, reference, fibers)) return false;
    for (const auto& [degree, elements] : group_by_degree(g, config)) {
        FiberGraph graph = build_fiber_graph(degree, reference, fibers);
        if (elements.size() + 1 != graph.component_count()) return false;
        DisjointSets tree(graph.component_count());
        for (const auto& e : elements) {
            std::size_t i = graph.fiber->index_of(e.lhs, config);
            std::size_t j = graph.fiber->index_of(e.rhs, config);
            if (!tree.unite(graph.component[i], graph.component[j])) return false;
        }
    }
    return true;
}

std::string to_dot(const FiberGraph& graph, bool emit_edges) {
    std::ostringstream out;
    out << "graph \"G(" << format_degree(graph.degree) << ")\" {\n";
    for (std::size_t c = 0; c < graph.component_count(); ++c) {
        out << "  subgraph cluster_" << c << " {\n    label=\"component " << c << "\";\n";
        for (std::size_t i = 0; i < graph.component.size(); ++i)
            if (graph.component[i] == c)
                out << "    m" << i << " [label=\"" << format_monomial(graph.fiber->members[i]) << "\"];\n";
        out << "  }\n";
    }
    if (emit_edges)
        for (const auto& [i, j] : graph.representative_edges) out << "  m" << i << " -- m" << j << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace toric
