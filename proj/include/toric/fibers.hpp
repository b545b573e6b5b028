#pragma once

#include "toric/config.hpp"

#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>

namespace toric {

inline constexpr std::size_t kDefaultFiberCap = 1'000'000;
inline constexpr std::size_t kDefaultCacheCapacity = 10'000'000;

/// deg_A^{-1}(b), members listed in canonical monomial order.
struct Fiber {
    ADegree degree;
    std::vector<ExponentVector> members;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    /// Position of u in members, or size() if absent.
    std::size_t index_of(const ExponentVector& u, const VectorConfiguration& config) const;
};

/// Complete fiber by backtracking over the variables in order of decreasing
/// weight with the bound u_i <= remaining weight / weight_i. Throws
/// FiberTooLarge once more than `cap` members are found; never truncates.
Fiber enumerate_fiber(const ADegree& b, const VectorConfiguration& config, std::size_t cap = kDefaultFiberCap);

/// b in NA. Stops at the first solution, so no cap applies.
bool semigroup_member(const ADegree& d, const VectorConfiguration& config);

/// d strictly below b in the semigroup order: b - d in NA and b != d.
bool degree_less(const ADegree& d, const ADegree& b, const VectorConfiguration& config);

/// Memoizing fiber source. Evicts least recently used fibers once the total
/// number of stored exponent vectors exceeds the capacity. Lookups are
/// serialized by an internal mutex.
class FiberCache {
public:
    explicit FiberCache(const VectorConfiguration& config, std::size_t fiber_cap = kDefaultFiberCap,
                        std::size_t capacity = kDefaultCacheCapacity);

    const VectorConfiguration& config() const { return *config_; }
    std::size_t fiber_cap() const { return fiber_cap_; }

    std::shared_ptr<const Fiber> get(const ADegree& b);

    std::size_t stored_vectors() const;

private:
    struct Entry {
        std::shared_ptr<const Fiber> fiber;
        std::list<ADegree>::iterator recency;
    };

    const VectorConfiguration* config_;
    std::size_t fiber_cap_;
    std::size_t capacity_;
    mutable std::mutex mutex_;
    std::map<ADegree, Entry> entries_;
    std::list<ADegree> recency_;  // front = most recent
    std::size_t stored_ = 0;
};

}  // namespace toric
