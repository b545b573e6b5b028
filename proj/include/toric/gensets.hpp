#pragma once

#include "toric/betti.hpp"
#include "toric/toric_ideal.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace toric {

using TreeEdge = std::pair<std::size_t, std::size_t>;

/// Spanning tree on the components of G(b) together with the monomial chosen
/// from each endpoint component of every edge. Component indices follow the
/// FiberGraph numbering.
struct TreeChoice {
    ADegree degree;
    std::vector<TreeEdge> edges;
    std::vector<std::pair<ExponentVector, ExponentVector>> monomials;  // parallel to edges
};

/// Labeled tree on {0, ..., n-1} encoded by a Pruefer sequence of length
/// n - 2; edges come back sorted with first < second.
std::vector<TreeEdge> prufer_decode(const std::vector<std::size_t>& sequence, std::size_t n);
std::vector<std::size_t> prufer_encode(std::vector<TreeEdge> edges, std::size_t n);

/// The set F = union of F_{T_b}; one choice per Betti degree. Throws
/// InvalidChoice on a missing or duplicated degree, a non-spanning tree, or a
/// monomial outside its declared component.
BinomialSet realize(const std::vector<TreeChoice>& choices, const ToricIdeal& ideal);

/// Walks all minimal generating sets: per Betti degree, trees in
/// lexicographic Pruefer order and, per tree, endpoint monomials in canonical
/// fiber order; across degrees, the Cartesian product with the last degree
/// varying fastest.
class MinimalGensetEnumerator {
public:
    explicit MinimalGensetEnumerator(const ToricIdeal& ideal);

    std::optional<BinomialSet> next();

private:
    struct DegreeState {
        ADegree degree;
        std::vector<std::vector<ExponentVector>> components;
        std::vector<std::size_t> prufer;
        std::vector<TreeEdge> edges;
        std::vector<std::size_t> choice;  // two digits per edge

        void reset_tree();
        bool advance();
        TreeChoice current() const;
    };

    const ToricIdeal* ideal_;
    std::vector<DegreeState> states_;
    bool started_ = false;
    bool exhausted_ = false;
};

std::vector<BinomialSet> enumerate_minimal_gensets(const ToricIdeal& ideal,
                                                   std::size_t cap = static_cast<std::size_t>(-1));

/// Uniform over all minimal generating sets. Pruefer entries are drawn by
/// picking a uniform fiber member and taking its component, which weights
/// each tree by the number of endpoint choices it admits; endpoints are then
/// uniform within their components.
BinomialSet sample_minimal_genset(const ToricIdeal& ideal, std::uint64_t seed);

/// Tree choices recovered from a minimal generating set. Throws NotMinimal.
std::vector<TreeChoice> spanning_tree_of(const BinomialSet& g, const ToricIdeal& ideal);

}  // namespace toric
