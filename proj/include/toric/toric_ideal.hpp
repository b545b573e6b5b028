#pragma once

#include "toric/fiber_graphs.hpp"
#include "toric/fibers.hpp"
#include "toric/ideal_gen.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace toric {

struct AnalysisOptions {
    std::size_t fiber_cap = kDefaultFiberCap;
    std::size_t cache_capacity = kDefaultCacheCapacity;
    std::size_t spair_budget = GenerationOptions{}.spair_budget;
};

/// Analysis context for one configuration: owns the fiber cache and memoizes
/// the saturated and minimal generating sets and the graphs G(b) built from
/// them. Neither copyable nor movable since the cache refers to the
/// configuration by address.
class ToricIdeal {
public:
    explicit ToricIdeal(VectorConfiguration config, AnalysisOptions options = {});
    ToricIdeal(const ToricIdeal&) = delete;
    ToricIdeal& operator=(const ToricIdeal&) = delete;

    const VectorConfiguration& config() const { return config_; }
    const AnalysisOptions& options() const { return options_; }
    FiberCache& fibers() const { return fibers_; }

    /// Saturated generating set of I_A (provenance saturated).
    const BinomialSet& generators() const;
    /// One minimal generating set, obtained by minimalizing generators().
    const BinomialSet& minimal_generators() const;

    /// G(b), built from generators().
    std::shared_ptr<const FiberGraph> graph(const ADegree& b) const;

    Fiber fiber(const ADegree& b) const { return *fibers_.get(b); }

private:
    VectorConfiguration config_;
    AnalysisOptions options_;
    mutable FiberCache fibers_;

    mutable std::mutex mutex_;
    mutable std::optional<BinomialSet> generators_;
    mutable std::optional<BinomialSet> minimal_;
    mutable std::map<ADegree, std::shared_ptr<const FiberGraph>> graphs_;
};

}  // namespace toric
