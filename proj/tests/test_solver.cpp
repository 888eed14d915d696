#include <algorithm>
#include <random>

#include "doctest.h"
#include "esdom/esd_check.hpp"
#include "esdom/graph.hpp"
#include "esdom/solver.hpp"

using namespace esdom;

namespace {

VertexSet vs(std::initializer_list<int> xs) {
    VertexSet s;
    for (int x : xs) s.add(x);
    return s;
}

Graph gen(const std::string& spec) { return generate(parse_family_spec(spec)); }

Graph from_mask(int n, unsigned long long mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

bool satisfies(const Graph& g, const VertexSet& s, Mode mode) {
    switch (mode) {
        case Mode::DOM: return is_dominating(g, s);
        case Mode::SUPER: return is_super_dominating(g, s);
        default: return check_esd(g, s).has_value();
    }
}

}  // namespace

TEST_CASE("solver matches the unpruned oracle on every graph of order <= 5") {
    for (int n = 1; n <= 5; ++n) {
        unsigned long long masks = 1ull << (n * (n - 1) / 2);
        for (unsigned long long mask = 0; mask < masks; ++mask) {
            Graph g = from_mask(n, mask);
            for (Mode mode : {Mode::DOM, Mode::SUPER, Mode::ESD}) {
                SolveResult got = solve(g, mode);
                SolveResult want = brute_force_oracle(g, mode);
                REQUIRE(got.value == want.value);
                // both claim the lexicographically smallest optimum
                REQUIRE(got.witness_set == want.witness_set);
                REQUIRE(satisfies(g, got.witness_set, mode));
            }
        }
    }
}

TEST_CASE("enumeration matches the unpruned oracle on every graph of order 4") {
    for (unsigned long long mask = 0; mask < (1ull << 6); ++mask) {
        Graph g = from_mask(4, mask);
        EnumerationResult got = enumerate_minimum_esd(g, true, {});
        EnumerationResult want = brute_force_enumerate(g);
        REQUIRE(got.value == want.value);
        REQUIRE(got.count == want.count);
        REQUIRE(*got.sets == *want.sets);
    }
}

TEST_CASE("solver matches the oracle on random graphs up to order 10") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + trial % 5;
        double p = trial % 2 ? 0.3 : 0.6;
        Graph g = random_graph(n, p, rng);
        for (Mode mode : {Mode::DOM, Mode::SUPER, Mode::ESD})
            REQUIRE(solve(g, mode).value == brute_force_oracle(g, mode).value);
        EnumerationResult got = enumerate_minimum_esd(g, true, {});
        EnumerationResult want = brute_force_enumerate(g);
        REQUIRE(got.count == want.count);
        REQUIRE(*got.sets == *want.sets);
    }
}

TEST_CASE("known values") {
    CHECK(solve(gen("cycle:8"), Mode::DOM).value == 3);
    CHECK(solve(gen("cycle:8"), Mode::SUPER).value == 4);
    CHECK(solve(gen("cycle:8"), Mode::ESD).value == 4);
    CHECK(solve(gen("path:2"), Mode::ESD).value == 2);
    CHECK(solve(gen("complete:1"), Mode::ESD).value == 1);
    CHECK(solve(gen("star:7"), Mode::ESD).value == 6);
    CHECK(solve(gen("star:7"), Mode::ESD).witness_set == vs({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("minimum degree >= 2 collapses the super and end-super values") {
    std::mt19937 rng(7);
    int seen = 0;
    while (seen < 25) {
        Graph g = random_graph(7, 0.5, rng);
        if (degree_profile(g).first < 2) continue;
        ++seen;
        CHECK(solve(g, Mode::SUPER).value == solve(g, Mode::ESD).value);
    }
}

TEST_CASE("vertices of degree <= 1 sit in every minimum esd-set") {
    // pendant chain hanging off a triangle
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    EnumerationResult all = enumerate_minimum_esd(g, true, {});
    for (const VertexSet& s : *all.sets) CHECK(s.contains(5));
    SolveResult r = solve(g, Mode::ESD);
    CHECK(r.witness_set.contains(5));
    CHECK(check_esd(g, r.witness_set).has_value());
}

TEST_CASE("certificates come back valid from the solver") {
    Graph g = gen("cycle:9");
    SolveResult r = solve(g, Mode::ESD);
    REQUIRE(r.certificate.has_value());
    VertexSet outside = g.vertices() - r.witness_set;
    CHECK(static_cast<int>(r.certificate->witness.size()) == outside.count());
    for (const auto& [u, v] : r.certificate->witness) {
        CHECK(outside.contains(u));
        CHECK(r.witness_set.contains(v));
        CHECK((g.neighbors(v) & outside) == vs({u}));
    }
}

TEST_CASE("values add up over components") {
    Graph g(9);  // path:4 + cycle:4 + isolated vertex
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(7, 4);
    CHECK(solve(g, Mode::ESD).value == 2 + 2 + 1);
    CHECK(solve(g, Mode::ESD).witness_set.contains(8));
    // counts multiply: one optimum for the path piece, four for the cycle piece
    EnumerationResult r = enumerate_minimum_esd(g, true, {});
    CHECK(r.count == 1 * 4 * 1);
    CHECK(std::is_sorted(r.sets->begin(), r.sets->end(), lex_less));
}

TEST_CASE("the cap guards components, not the whole graph") {
    SolveOptions small;
    small.cap = 12;
    Graph g(26);  // two paths of order 13
    for (int i = 0; i < 12; ++i) {
        g.add_edge(i, i + 1);
        g.add_edge(13 + i, 13 + i + 1);
    }
    CHECK_THROWS_AS(solve(g, Mode::ESD, small), CapExceededError);
    small.cap = 13;
    CHECK(solve(g, Mode::ESD, small).value == 2 * solve(gen("path:13"), Mode::ESD).value);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(solve(Graph(0), Mode::ESD), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_oracle(Graph(0), Mode::ESD), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_oracle(Graph(17), Mode::ESD), std::invalid_argument);
    Graph lonely(1);
    CHECK(solve(lonely, Mode::DOM).value == 1);
    CHECK(solve(lonely, Mode::ESD).value == 1);
    Graph edgeless(4);
    CHECK(solve(edgeless, Mode::ESD).value == 4);
    CHECK(enumerate_minimum_esd(edgeless, false, {}).count == 1);
}

TEST_CASE("enumeration without materialization still counts") {
    EnumerationResult counted = enumerate_minimum_esd(gen("cycle:10"), false, {});
    CHECK_FALSE(counted.sets.has_value());
    CHECK(counted.value == 6);
    CHECK(counted.count == 5 * 10 * 8 / 8);  // 5n(n-2)/8 pattern for this residue
    EnumerationResult full = enumerate_minimum_esd(gen("cycle:10"), true, {});
    CHECK(full.count == counted.count);
    CHECK(full.sets->size() == counted.count);
}
