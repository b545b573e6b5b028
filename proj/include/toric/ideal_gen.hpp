#pragma once

#include "toric/config.hpp"
#include "toric/lattice.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace toric {

class FiberCache;

enum class Provenance { Raw, Saturated, Minimalized };

const char* to_string(Provenance p);

/// Sign-normalized, duplicate-free binomials, ordered by A-degree (report
/// order) and then canonically.
struct BinomialSet {
    std::vector<Binomial> elements;
    Provenance provenance = Provenance::Raw;

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
};

/// Normalizes, sorts and deduplicates. Every element must lie in I_A.
BinomialSet make_binomial_set(const std::vector<Binomial>& elements, Provenance provenance,
                              const VectorConfiguration& config);

/// Elements grouped by A-degree, in report order.
std::vector<std::pair<ADegree, std::vector<Binomial>>> group_by_degree(const BinomialSet& set,
                                                                       const VectorConfiguration& config);

struct GenerationOptions {
    std::size_t spair_budget = 1'000'000;  // per saturation round
};

/// x^{z+} - x^{z-} for every basis vector z.
BinomialSet seed_from_lattice(const LatticeBasis& lattice, const VectorConfiguration& config);

/// Binomial generating set of I_A: the lattice seed saturated by each
/// variable in turn. Each saturation is a reduced Groebner basis under a
/// w-graded reverse lexicographic order with the saturating variable last,
/// followed by division by the largest power of that variable.
/// Throws BudgetExceeded when a completion processes too many S-pairs.
BinomialSet toric_generating_set(const VectorConfiguration& config, const GenerationOptions& options = {});

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// saturation order for `last_variable`. Exposed for testing.
std::vector<Binomial> reduced_groebner_basis(const std::vector<Binomial>& generators,
                                             const VectorConfiguration& config, std::size_t last_variable,
                                             const GenerationOptions& options = {});

/// Keeps, per A-degree, a subset of the degree-b elements whose crossings of
/// the components of G(b) form a spanning tree. Elements joining two monomials
/// of the same component are redundant and dropped.
/// Requires a generating set; throws InternalInconsistency if the crossing
/// elements of some degree fail to connect G(b).
BinomialSet minimalize(const BinomialSet& generators, FiberCache& fibers);

}  // namespace toric
