#include "toric/fibers.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

namespace {

class FiberSearch {
public:
    FiberSearch(const ADegree& b, const VectorConfiguration& config, std::size_t cap, bool first_only)
        : config_(config), cap_(cap), first_only_(first_only), degree_(b), residual_(b),
          u_(config.size(), Integer(0)) {
        order_.resize(config.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        const auto& w = config.weights();
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) { return w[x] > w[y]; });
    }

    void run() {
        Integer total = config_.degree_weight(residual_);
        if (total < 0) return;
        search(0, total);
    }

    std::vector<ExponentVector> take() { return std::move(found_); }
    bool found_any() const { return !found_.empty(); }

private:
    bool done() const { return first_only_ && !found_.empty(); }

    void search(std::size_t depth, const Integer& remaining) {
        if (done()) return;
        if (depth == order_.size()) {
            if (remaining == 0 && std::all_of(residual_.begin(), residual_.end(), [](const Integer& x) { return x == 0; })) {
                found_.push_back(u_);
                if (found_.size() > cap_)
                    throw FiberTooLarge("fiber of degree (" + format_degree(degree_) +
                                        ") has more than " + std::to_string(cap_) + " members");
            }
            return;
        }
        const std::size_t var = order_[depth];
        const Integer& wt = config_.weights()[var];
        const auto& a = config_.vector(var);
        if (depth + 1 == order_.size()) {
            // last variable is determined by the remaining weight
            if (remaining % wt != 0) return;
            Integer k = remaining / wt;
            apply(a, k);
            u_[var] = k;
            search(depth + 1, 0);
            u_[var] = 0;
            apply(a, -k);
            return;
        }
        Integer bound = remaining / wt;
        // try larger exponents first so members come out near canonical order
        apply(a, bound);
        for (Integer k = bound;; --k) {
            u_[var] = k;
            search(depth + 1, remaining - k * wt);
            if (k == 0 || done()) {
                apply(a, -k);
                break;
            }
            apply(a, -1);
        }
        u_[var] = 0;
    }

    void apply(const IntVector& a, const Integer& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < residual_.size(); ++j) residual_[j] -= k * a[j];
    }

    const VectorConfiguration& config_;
    std::size_t cap_;
    bool first_only_;
    ADegree degree_;
    ADegree residual_;
    ExponentVector u_;
    std::vector<std::size_t> order_;
    std::vector<ExponentVector> found_;
};

void check_degree(const ADegree& b, const VectorConfiguration& config) {
    if (b.size() != config.dimension())
        throw MalformedInput("degree has length " + std::to_string(b.size()) + ", expected " +
                             std::to_string(config.dimension()));
}

}  // namespace

std::size_t Fiber::index_of(const ExponentVector& u, const VectorConfiguration& config) const {
    auto it = std::lower_bound(members.begin(), members.end(), u, CanonicalOrder{&config});
    if (it != members.end() && *it == u) return static_cast<std::size_t>(it - members.begin());
    return members.size();
}

Fiber enumerate_fiber(const ADegree& b, const VectorConfiguration& config, std::size_t cap) {
    check_degree(b, config);
    FiberSearch search(b, config, cap, false);
    search.run();
    Fiber fiber{b, search.take()};
    std::sort(fiber.members.begin(), fiber.members.end(), CanonicalOrder{&config});
    return fiber;
}

bool semigroup_member(const ADegree& d, const VectorConfiguration& config) {
    check_degree(d, config);
    FiberSearch search(d, config, 1, true);
    search.run();
    return search.found_any();
}

bool degree_less(const ADegree& d, const ADegree& b, const VectorConfiguration& config) {
    check_degree(d, config);
    check_degree(b, config);
    if (d == b) return false;
    ADegree diff(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) diff[j] = b[j] - d[j];
    return semigroup_member(diff, config);
}

FiberCache::FiberCache(const VectorConfiguration& config, std::size_t fiber_cap, std::size_t capacity)
    : config_(&config), fiber_cap_(fiber_cap), capacity_(capacity) {}

std::shared_ptr<const Fiber> FiberCache::get(const ADegree& b) {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(b); it != entries_.end()) {
        recency_.splice(recency_.begin(), recency_, it->second.recency);
        return it->second.fiber;
    }
    auto fiber = std::make_shared<const Fiber>(enumerate_fiber(b, *config_, fiber_cap_));
    recency_.push_front(b);
    entries_.emplace(b, Entry{fiber, recency_.begin()});
    stored_ += fiber->size();
    while (stored_ > capacity_ && recency_.size() > 1) {
        auto victim = entries_.find(recency_.back());
        stored_ -= victim->second.fiber->size();
        entries_.erase(victim);
        recency_.pop_back();
    }
    return fiber;
}

std::size_t FiberCache::stored_vectors() const {
    std::lock_guard lock(mutex_);
    return stored_;
}

}  // namespace toric
