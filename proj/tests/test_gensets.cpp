#include "support.hpp"

#include <doctest.h>

using namespace toric;

namespace {

std::vector<std::vector<std::size_t>> all_sequences(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n < 2) return {{}};
    std::vector<std::size_t> s(n - 2, 0);
    while (true) {
        out.push_back(s);
        std::size_t i = s.size();
        while (i > 0 && s[i - 1] == n - 1) s[--i] = 0;
        if (i == 0) break;
        ++s[i - 1];
    }
    return out;
}

VectorConfiguration ones(int m) {
    std::vector<std::vector<long long>> rows(m, std::vector<long long>{1});
    return support::make(rows);
}

}  // namespace

TEST_SUITE("gensets") {

TEST_CASE("Pruefer codes are a bijection onto labeled trees") {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::set<std::vector<TreeEdge>> trees;
        for (const auto& s : all_sequences(n)) {
            auto edges = prufer_decode(s, n);
            CHECK(edges.size() == n - 1);
            CHECK(prufer_encode(edges, n) == s);
            trees.insert(edges);
        }
        CHECK(trees.size() == support::count_spanning_trees_by_subsets(n));
    }
}

TEST_CASE("Cayley count through the enumerator") {
    for (int m = 2; m <= 6; ++m) {
        ToricIdeal ideal(ones(m));
        auto sets = enumerate_minimal_gensets(ideal);
        CHECK(sets.size() == support::count_spanning_trees_by_subsets(m));
        CHECK(support::as_set(sets).size() == sets.size());
        CHECK(Integer(sets.size()) == nu(ideal).value);
    }
}

TEST_CASE("enumeration on the reference configurations") {
    struct Case {
        VectorConfiguration c;
        std::size_t count;
    };
    std::vector<Case> cases{{support::ex23(), 12}, {support::ex32(), 1}, {support::ex44(), 3},
                            {support::ex210(2, 2), 3}, {support::ex210(3, 2), 18}, {support::ex210(3, 3), 30}};
    for (const auto& k : cases) {
        ToricIdeal ideal(k.c);
        auto sets = enumerate_minimal_gensets(ideal);
        CHECK(sets.size() == k.count);
        CHECK(Integer(sets.size()) == nu(ideal).value);
        CHECK(support::as_set(sets).size() == sets.size());
        for (const auto& g : sets) {
            CHECK(is_minimal_generating_set(g, ideal.generators(), ideal.fibers()));
            CHECK(realize(spanning_tree_of(g, ideal), ideal).elements == g.elements);
        }
        CHECK(enumerate_minimal_gensets(ideal, 2).size() == std::min<std::size_t>(2, k.count));
    }
}

TEST_CASE("enumeration order is stable") {
    ToricIdeal a(support::ex23()), b(support::ex23());
    auto x = enumerate_minimal_gensets(a), y = enumerate_minimal_gensets(b);
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i].elements == y[i].elements);
}

TEST_CASE("sampler") {
    ToricIdeal ideal(support::ex44());
    auto all = support::as_set(enumerate_minimal_gensets(ideal));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = sample_minimal_genset(ideal, seed);
        CHECK(all.count(g.elements) == 1);
        CHECK(sample_minimal_genset(ideal, seed).elements == g.elements);
    }
}

TEST_CASE("invalid choices") {
    ToricIdeal ideal(support::ex23());
    auto choices = spanning_tree_of(ideal.minimal_generators(), ideal);
    REQUIRE(choices.size() == 3);
    auto missing = choices;
    missing.pop_back();
    CHECK_THROWS_AS(realize(missing, ideal), InvalidChoice);
    auto doubled = choices;
    doubled.push_back(choices.front());
    CHECK_THROWS_AS(realize(doubled, ideal), InvalidChoice);
    auto wrong = choices;
    std::swap(wrong[2].monomials[0].first, wrong[2].monomials[0].second);
    CHECK_THROWS_AS(realize(wrong, ideal), InvalidChoice);
    auto loop = choices;
    loop[2].edges[0] = {0, 0};
    CHECK_THROWS_AS(realize(loop, ideal), InvalidChoice);
}

TEST_CASE("spanning_tree_of rejects non-minimal sets") {
    ToricIdeal ideal(support::ex44());
    auto c = ideal.config();
    auto more = ideal.minimal_generators().elements;
    more.push_back(support::bin("x1^2*x6", "x1*x2*x4", c));
    CHECK_THROWS_AS(spanning_tree_of(make_binomial_set(more, Provenance::Raw, c), ideal), NotMinimal);
    auto fewer = ideal.minimal_generators();
    fewer.elements.pop_back();
    CHECK_THROWS_AS(spanning_tree_of(fewer, ideal), NotMinimal);
}


TEST_CASE("realize with explicit choices") {
    ToricIdeal ideal(support::ex23());
    const auto& c = ideal.config();
    auto choices = spanning_tree_of(support::binomials(support::ex23_generators(), c), ideal);
    REQUIRE(choices.size() == 3);
    CHECK(realize(choices, ideal).elements == support::binomials(support::ex23_generators(), c).elements);

    // another pair of endpoints at (12,0,0,0,0)
    auto& top = choices[2];
    REQUIRE(top.edges.size() == 1);
    auto g = ideal.graph(top.degree);
    auto a = support::mono("x1*x2*x3^2*x4^2", c), b = support::mono("x5*x6*x7*x8", c);
    auto ca = g->component[g->fiber->index_of(a, c)], cb = g->component[g->fiber->index_of(b, c)];
    top.edges[0] = {std::min(ca, cb), std::max(ca, cb)};
    top.monomials[0] = ca < cb ? std::make_pair(a, b) : std::make_pair(b, a);
    auto other = realize(choices, ideal);
    CHECK(is_minimal_generating_set(other, ideal.generators(), ideal.fibers()));
    CHECK(other.elements != support::binomials(support::ex23_generators(), c).elements);

    ToricIdeal zero(support::make({{1, 0}, {0, 1}}));
    CHECK(realize({}, zero).empty());
    CHECK(enumerate_minimal_gensets(zero).size() == 1);
    CHECK(sample_minimal_genset(zero, 4).empty());
}

TEST_CASE("recovered trees") {
    ToricIdeal ideal(support::ex44());
    auto choices = spanning_tree_of(ideal.minimal_generators(), ideal);
    REQUIRE(choices.size() == 8);
    for (const auto& t : choices) CHECK(t.edges.size() == (t.degree == support::iv({2, 2, 2}) ? 2u : 1u));

    ToricIdeal curve(support::ex32());
    auto unique = curve.minimal_generators();
    for (const auto& t : spanning_tree_of(unique, curve)) CHECK(t.edges.size() == 1);
    for (std::uint64_t seed : {0u, 1u, 99u}) CHECK(sample_minimal_genset(curve, seed).elements == unique.elements);
}

}
