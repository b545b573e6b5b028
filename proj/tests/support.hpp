#pragma once

// Shared configurations and brute-force oracles for the unit and acceptance
// tests. The oracles deliberately avoid the library's algorithms: fibers come
// from a plain box scan, components of G(b) from the common-variable graph,
// spanning trees from edge-subset enumeration.

#include "toric/betti.hpp"
#include "toric/complex.hpp"
#include "toric/config.hpp"
#include "toric/fiber_graphs.hpp"
#include "toric/fibers.hpp"
#include "toric/gensets.hpp"
#include "toric/ideal_gen.hpp"
#include "toric/serialize.hpp"
#include "toric/toric_ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace support {

using toric::Binomial;
using toric::BinomialSet;
using toric::ExponentVector;
using toric::Integer;
using toric::IntVector;
using toric::VectorConfiguration;

inline IntVector iv(std::initializer_list<long long> xs) {
    IntVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

inline VectorConfiguration make(std::vector<std::vector<long long>> rows, std::string name = {}) {
    std::vector<IntVector> raw;
    for (const auto& r : rows) {
        IntVector v;
        for (auto x : r) v.emplace_back(x);
        raw.push_back(std::move(v));
    }
    return toric::load_configuration(std::move(raw), std::nullopt, std::move(name));
}

inline VectorConfiguration ex23() {
    return make({{2, 2, 2, 0, 0}, {2, -2, -2, 0, 0}, {2, 2, -2, 0, 0}, {2, -2, 2, 0, 0},
                 {3, 0, 0, 3, 3}, {3, 0, 0, -3, -3}, {3, 0, 0, 3, -3}, {3, 0, 0, -3, 3}},
                "ex23");
}

inline VectorConfiguration ex32() { return make({{20}, {24}, {25}, {31}}, "ex32"); }

inline VectorConfiguration ex44() {
    return make({{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}}, "ex44");
}

// {k, 1, ..., 1} with n ones; x1 plays the role of x_0.
inline VectorConfiguration ex210(int n, int k) {
    std::vector<std::vector<long long>> rows{{k}};
    for (int i = 0; i < n; ++i) rows.push_back({1});
    return make(rows, "ex210");
}

inline ExponentVector mono(const std::string& text, const VectorConfiguration& c) {
    return toric::parse_monomial(text, c.size());
}

inline Binomial bin(const std::string& lhs, const std::string& rhs, const VectorConfiguration& c) {
    return toric::normalize_binomial(mono(lhs, c), mono(rhs, c), c);
}

inline BinomialSet binomials(const std::vector<std::string>& texts, const VectorConfiguration& c) {
    toric::Json doc = toric::Json::array();
    for (const auto& t : texts) doc.push_back(t);
    return toric::binomial_set_from_json(doc, c);
}

inline const std::vector<std::string>& ex23_generators() {
    static const std::vector<std::string> g{"x1*x2 - x3*x4", "x5*x6 - x7*x8", "x1^3*x2^3 - x5^2*x6^2"};
    return g;
}

inline const std::vector<std::string>& ex32_generators() {
    static const std::vector<std::string> g{
        "x3^3 - x1*x2*x4",         "x1^4 - x2*x3*x4",         "x4^3 - x1*x2^2*x3",
        "x2^4 - x1^2*x3*x4",       "x1^3*x3^2 - x2^2*x4^2",   "x1^2*x2^3 - x3^2*x4^2",
        "x1^3*x4^2 - x2^3*x3^2"};
    return g;
}

inline const std::vector<std::string>& ex44_generators() {
    static const std::vector<std::string> g{
        "x1*x6 - x2*x4",       "x1*x6 - x3*x5",       "x2^2*x3 - x1^2*x5",
        "x2*x3^2 - x1^2*x4",   "x1*x5^2 - x2^2*x6",   "x1*x4^2 - x3^2*x6",
        "x4^2*x5 - x3*x6^2",   "x1*x4*x5 - x2*x3*x6", "x4*x5^2 - x2*x6^2"};
    return g;
}

inline Integer binomial_coefficient(long long n, long long k) {
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Integer power(Integer base, long long e) {
    Integer r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// Fiber oracle: scan the whole box of exponent vectors with w-degree at most
// `bound` and bucket them by A-degree. Works in 64-bit arithmetic.

using Small = std::vector<std::int64_t>;

struct BoxScan {
    std::map<Small, std::vector<Small>> fibers;  // A-degree -> members
};

inline std::int64_t small(const Integer& x) { return static_cast<std::int64_t>(x); }

inline Small to_small(const IntVector& v) {
    Small s;
    for (const auto& x : v) s.push_back(small(x));
    return s;
}

inline IntVector to_big(const Small& v) {
    IntVector s;
    for (auto x : v) s.emplace_back(x);
    return s;
}

inline BoxScan box_scan(const VectorConfiguration& c, long long bound) {
    const std::size_t m = c.size(), n = c.dimension();
    // w-degree of each variable as a fraction num_i / den with a common den
    Integer den = 1;
    for (const auto& q : c.grading()) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    Small num(m);
    for (std::size_t i = 0; i < m; ++i) {
        toric::Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += c.grading()[j] * toric::Rational(c.vector(i)[j]);
        num[i] = small(boost::multiprecision::numerator(toric::Rational(s * den)));
    }
    const std::int64_t limit = bound * small(den);
    Small box(m);
    for (std::size_t i = 0; i < m; ++i) box[i] = limit / num[i];

    std::vector<Small> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = to_small(c.vector(i));

    BoxScan out;
    Small u(m, 0);
    while (true) {
        std::int64_t w = 0;
        for (std::size_t i = 0; i < m; ++i) w += u[i] * num[i];
        if (w <= limit) {
            Small b(n, 0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) b[j] += u[i] * a[i][j];
            out.fibers[b].push_back(u);
        }
        std::size_t i = 0;
        while (i < m && u[i] == box[i]) u[i++] = 0;
        if (i == m) break;
        ++u[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// G(b) oracle. An edge {u, v} of G(b) is a binomial x^u - x^v in the ideal
// generated by binomials of strictly smaller degree. If x^c = gcd(x^u, x^v) is
// not 1 then x^u - x^v = x^c (x^{u-c} - x^{v-c}) is such a binomial; every
// element of I_{A,b} is a combination of such multiples, so components of
// G(b) are the components of the "shares a variable" graph on the fiber.

inline std::vector<std::size_t> gcd_partition(const std::vector<ExponentVector>& members) {
    const std::size_t k = members.size();
    std::vector<std::size_t> label(k, k);
    std::size_t next = 0;
    for (std::size_t s = 0; s < k; ++s) {
        if (label[s] != k) continue;
        std::vector<std::size_t> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y = 0; y < k; ++y) {
                if (label[y] != k) continue;
                bool share = false;
                for (std::size_t i = 0; i < members[x].size() && !share; ++i)
                    share = members[x][i] > 0 && members[y][i] > 0;
                if (share) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return label;
}

inline bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Spanning trees of K_n counted by testing every (n-1)-subset of edges.

inline std::size_t count_spanning_trees_by_subsets(std::size_t n) {
    if (n <= 1) return 1;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    const std::size_t e = edges.size();
    std::vector<bool> pick(e, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
    std::size_t count = 0;
    do {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = root(parent[x]);
        };
        bool acyclic = true;
        for (std::size_t k = 0; k < e && acyclic; ++k) {
            if (!pick[k]) continue;
            auto r1 = root(edges[k].first), r2 = root(edges[k].second);
            if (r1 == r2) acyclic = false;
            else parent[r1] = r2;
        }
        if (acyclic) ++count;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return count;
}

// ---------------------------------------------------------------------------
// Random pointed configurations: m <= 5 vectors in Z^n, n <= 3, entries of
// absolute value at most 4. Three draws in four use nonnegative entries, which
// keeps the w-degrees small and the fibers nontrivial; the rest mix signs.
// Candidates without a positive grading are redrawn.

inline VectorConfiguration random_configuration(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 3), count(2, 5), mixed(-4, 4), nonnegative(0, 4), kind(0, 3);
    while (true) {
        const int n = dim(rng), m = count(rng);
        const bool signs = kind(rng) == 0;
        std::vector<std::vector<long long>> rows;
        for (int i = 0; i < m; ++i) {
            std::vector<long long> r;
            for (int j = 0; j < n; ++j) r.push_back(signs ? mixed(rng) : nonnegative(rng));
            rows.push_back(r);
        }
        try {
            return make(rows, "random");
        } catch (const toric::NotPointed&) {
        }
    }
}

inline std::set<std::vector<Binomial>> as_set(const std::vector<BinomialSet>& sets) {
    std::set<std::vector<Binomial>> out;
    for (const auto& s : sets) out.insert(s.elements);
    return out;
}

}  // namespace support
