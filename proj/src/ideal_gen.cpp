#include "toric/ideal_gen.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace toric {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Raw: return "raw";
        case Provenance::Saturated: return "saturated";
        case Provenance::Minimalized: return "minimalized";
    }
    return "raw";
}

BinomialSet make_binomial_set(const std::vector<Binomial>& elements, Provenance provenance,
                              const VectorConfiguration& config) {
    struct Keyed {
        ADegree degree;
        Binomial b;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(elements.size());
    for (const auto& e : elements) {
        Binomial b = normalize_binomial(e.lhs, e.rhs, config);
        keyed.push_back({degree_of(b, config), std::move(b)});
    }
    std::sort(keyed.begin(), keyed.end(), [&](const Keyed& x, const Keyed& y) {
        if (x.degree != y.degree) return degree_less_for_report(config, x.degree, y.degree);
        if (x.b.lhs != y.b.lhs) return precedes(config, x.b.lhs, y.b.lhs);
        return precedes(config, x.b.rhs, y.b.rhs);
    });
    BinomialSet out;
    out.provenance = provenance;
    for (auto& k : keyed)
        if (out.elements.empty() || !(out.elements.back() == k.b)) out.elements.push_back(std::move(k.b));
    return out;
}

std::vector<std::pair<ADegree, std::vector<Binomial>>> group_by_degree(const BinomialSet& set,
                                                                       const VectorConfiguration& config) {
    std::vector<std::pair<ADegree, std::vector<Binomial>>> groups;
    for (const auto& b : set.elements) {
        ADegree d = degree_of(b, config);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == d; });
        if (it == groups.end()) groups.emplace_back(std::move(d), std::vector<Binomial>{b});
        else it->second.push_back(b);
    }
    std::sort(groups.begin(), groups.end(),
              [&](const auto& x, const auto& y) { return degree_less_for_report(config, x.first, y.first); });
    return groups;
}

BinomialSet seed_from_lattice(const LatticeBasis& lattice, const VectorConfiguration& config) {
    std::vector<Binomial> out;
    for (const auto& z : lattice.basis) {
        ExponentVector pos(z.size(), Integer(0)), neg(z.size(), Integer(0));
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i] > 0) pos[i] = z[i];
            else neg[i] = -z[i];
        }
        out.push_back(Binomial{pos, neg});
    }
    return make_binomial_set(out, Provenance::Raw, config);
}

namespace {

// w-graded reverse lexicographic order in which `last` is the smallest
// variable. All binomials here are homogeneous, so x_last dividing the leading
// term of an element forces it to divide the trailing term too.
class SaturationOrder {
public:
    SaturationOrder(const VectorConfiguration& config, std::size_t last) : config_(&config) {
        for (std::size_t i = config.size(); i-- > 0;)
            if (i != last) revlex_.push_back(i);
        revlex_.insert(revlex_.begin(), last);
    }

    bool greater(const ExponentVector& u, const ExponentVector& v) const {
        Integer wu = config_->weight(u), wv = config_->weight(v);
        if (wu != wv) return wu > wv;
        for (std::size_t i : revlex_)
            if (u[i] != v[i]) return u[i] < v[i];
        return false;
    }

private:
    const VectorConfiguration* config_;
    std::vector<std::size_t> revlex_;
};

struct Element {
    ExponentVector lead;
    ExponentVector trail;
};

class Completion {
public:
    Completion(const VectorConfiguration& config, std::size_t last, std::size_t budget)
        : config_(config), order_(config, last), budget_(budget) {}

    std::vector<Element> run(const std::vector<Binomial>& generators) {
        for (const auto& g : generators) {
            if (auto e = reduce(g.lhs, g.rhs)) add(std::move(*e));
        }
        while (!pairs_.empty()) {
            auto [w, i, j] = pairs_.top();
            pairs_.pop();
            if (++processed_ > budget_)
                throw BudgetExceeded("Buchberger completion exceeded the S-pair budget of " +
                                     std::to_string(budget_));
            const Element& a = basis_[i];
            const Element& b = basis_[j];
            ExponentVector lcm(a.lead.size());
            for (std::size_t k = 0; k < lcm.size(); ++k) lcm[k] = std::max(a.lead[k], b.lead[k]);
            ExponentVector s1 = lcm, s2 = lcm;
            for (std::size_t k = 0; k < lcm.size(); ++k) {
                s1[k] += a.trail[k] - a.lead[k];
                s2[k] += b.trail[k] - b.lead[k];
            }
            if (auto e = reduce(s1, s2)) add(std::move(*e));
        }
        return interreduce();
    }

private:
    ExponentVector normal_form(ExponentVector u) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : basis_) {
                if (divides(e.lead, u)) {
                    for (std::size_t k = 0; k < u.size(); ++k) u[k] += e.trail[k] - e.lead[k];
                    changed = true;
                    break;
                }
            }
        }
        return u;
    }

    std::optional<Element> reduce(const ExponentVector& u, const ExponentVector& v) const {
        ExponentVector a = normal_form(u), b = normal_form(v);
        if (a == b) return std::nullopt;
        if (order_.greater(a, b)) return Element{std::move(a), std::move(b)};
        return Element{std::move(b), std::move(a)};
    }

    void add(Element e) {
        const std::size_t j = basis_.size();
        for (std::size_t i = 0; i < j; ++i) {
            const auto& lead = basis_[i].lead;
            bool coprime = true;
            ExponentVector lcm(lead.size());
            for (std::size_t k = 0; k < lead.size(); ++k) {
                if (lead[k] != 0 && e.lead[k] != 0) coprime = false;
                lcm[k] = std::max(lead[k], e.lead[k]);
            }
            if (coprime) continue;
            pairs_.push({config_.weight(lcm), i, j});
        }
        basis_.push_back(std::move(e));
    }

    std::vector<Element> interreduce() {
        std::vector<Element> minimal;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j || !divides(basis_[j].lead, basis_[i].lead)) continue;
                // equal leading terms: keep the first occurrence
                redundant = basis_[j].lead != basis_[i].lead || j < i;
            }
            if (!redundant) minimal.push_back(basis_[i]);
        }
        basis_ = std::move(minimal);
        for (auto& e : basis_) e.trail = normal_form(e.trail);
        return basis_;
    }

    using Pair = std::tuple<Integer, std::size_t, std::size_t>;
    struct PairLater {
        bool operator()(const Pair& x, const Pair& y) const { return x > y; }
    };

    const VectorConfiguration& config_;
    SaturationOrder order_;
    std::size_t budget_;
    std::size_t processed_ = 0;
    std::vector<Element> basis_;
    std::priority_queue<Pair, std::vector<Pair>, PairLater> pairs_;
};

}  // namespace

std::vector<Binomial> reduced_groebner_basis(const std::vector<Binomial>& generators,
                                             const VectorConfiguration& config, std::size_t last_variable,
                                             const GenerationOptions& options) {
    Completion completion(config, last_variable, options.spair_budget);
    std::vector<Binomial> out;
    for (auto& e : completion.run(generators)) out.push_back(Binomial{std::move(e.lead), std::move(e.trail)});
    return out;
}

BinomialSet toric_generating_set(const VectorConfiguration& config, const GenerationOptions& options) {
    std::vector<Binomial> current = seed_from_lattice(kernel_basis(config), config).elements;
    for (std::size_t var = 0; var < config.size() && !current.empty(); ++var) {
        std::vector<Binomial> next;
        for (auto& b : reduced_groebner_basis(current, config, var, options)) {
            Integer common = std::min(b.lhs[var], b.rhs[var]);
            b.lhs[var] -= common;
            b.rhs[var] -= common;
            next.push_back(std::move(b));
        }
        current = make_binomial_set(next, Provenance::Raw, config).elements;
    }
    return make_binomial_set(current, Provenance::Saturated, config);
}

}  // namespace toric
