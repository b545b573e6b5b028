#include "toric/fiber_graphs.hpp"
#include "toric/ideal_gen.hpp"

namespace toric {

BinomialSet minimalize(const BinomialSet& generators, FiberCache& fibers) {
    const auto& config = fibers.config();
    std::vector<Binomial> kept;
    for (const auto& [degree, elements] : group_by_degree(generators, config)) {
        FiberGraph graph = build_fiber_graph(degree, generators, fibers);
        DisjointSets tree(graph.component_count());
        std::size_t edges = 0;
        for (const auto& e : elements) {
            std::size_t i = graph.fiber->index_of(e.lhs, config);
            std::size_t j = graph.fiber->index_of(e.rhs, config);
            if (tree.unite(graph.component[i], graph.component[j])) {
                kept.push_back(e);
                ++edges;
            }
        }
        if (edges + 1 != graph.component_count())
            throw InternalInconsistency("degree (" + format_degree(degree) + ") elements connect " +
                                        std::to_string(edges + 1) + " of " +
                                        std::to_string(graph.component_count()) + " components of G(b)");
    }
    return make_binomial_set(kept, Provenance::Minimalized, config);
}

}  // namespace toric
