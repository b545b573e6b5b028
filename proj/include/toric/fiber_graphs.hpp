#pragma once

#include "toric/fibers.hpp"
#include "toric/ideal_gen.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace toric {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t x);
    /// Returns false when x and y were already joined.
    bool unite(std::size_t x, std::size_t y);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

/// Connected components of G(b). Components are numbered in order of their
/// first member in the canonical fiber order.
struct FiberGraph {
    ADegree degree;
    std::shared_ptr<const Fiber> fiber;
    std::vector<std::size_t> component;     // per fiber member
    std::vector<std::size_t> component_sizes;
    std::vector<std::pair<std::size_t, std::size_t>> representative_edges;  // spanning forest

    std::size_t component_count() const { return component_sizes.size(); }
    std::vector<ExponentVector> members_of(std::size_t c) const;
    bool connected() const { return component_sizes.size() <= 1; }
};

struct ComponentSummary {
    ADegree degree;
    std::size_t count = 0;
    std::vector<std::size_t> sizes;  // descending
};

ComponentSummary summarize(const FiberGraph& graph);

/// G(b) from a generating set: each member u is joined to u - l + r whenever
/// x^l properly divides x^u for a generator x^l - x^r (either orientation).
/// Proper multiples of generators span I_{A,b}, so this is exactly G(b).
FiberGraph build_fiber_graph(const ADegree& b, const BinomialSet& generators, FiberCache& fibers);

/// Gamma(b)_g: like G(b) but moves may also use generators of degree b
/// itself (unit multiplier).
bool gamma_connected(const ADegree& b, const BinomialSet& g, FiberCache& fibers);

/// Generation criterion checked at the degrees of `reference` and of `g`.
/// A lowest degree where Gamma(b)_g fails to be connected must be a Betti
/// degree, and every Betti degree occurs in any generating set, so these
/// degrees suffice. `reference` must generate I_A.
bool is_generating_set(const BinomialSet& g, const BinomialSet& reference, FiberCache& fibers);

/// g generates and, at every degree b it uses, its degree-b elements cross
/// distinct components of G(b) and form a spanning tree on them.
bool is_minimal_generating_set(const BinomialSet& g, const BinomialSet& reference, FiberCache& fibers);

/// Graphviz rendering: one cluster per component. Representative edges are
/// drawn only when `emit_edges` is set.
std::string to_dot(const FiberGraph& graph, bool emit_edges = false);

}  // namespace toric
