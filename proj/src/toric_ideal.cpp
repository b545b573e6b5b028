#include "toric/toric_ideal.hpp"

namespace toric {

ToricIdeal::ToricIdeal(VectorConfiguration config, AnalysisOptions options)
    : config_(std::move(config)), options_(options), fibers_(config_, options.fiber_cap, options.cache_capacity) {}

const BinomialSet& ToricIdeal::generators() const {
    std::lock_guard lock(mutex_);
    if (!generators_) generators_ = toric_generating_set(config_, GenerationOptions{options_.spair_budget});
    return *generators_;
}

const BinomialSet& ToricIdeal::minimal_generators() const {
    const BinomialSet& gens = generators();
    std::lock_guard lock(mutex_);
    if (!minimal_) minimal_ = minimalize(gens, fibers_);
    return *minimal_;
}

std::shared_ptr<const FiberGraph> ToricIdeal::graph(const ADegree& b) const {
    const BinomialSet& gens = generators();
    {
        std::lock_guard lock(mutex_);
        if (auto it = graphs_.find(b); it != graphs_.end()) return it->second;
    }
    auto built = std::make_shared<const FiberGraph>(build_fiber_graph(b, gens, fibers_));
    std::lock_guard lock(mutex_);
    return graphs_.emplace(b, std::move(built)).first->second;
}

}  // namespace toric
