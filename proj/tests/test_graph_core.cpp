#include "doctest.h"
#include "esdom/graph.hpp"

using namespace esdom;

namespace {

VertexSet vs(std::initializer_list<int> xs) {
    VertexSet s;
    for (int x : xs) s.add(x);
    return s;
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.first() == -1);
    s.add(5);
    s.add(70);  // second word
    s.add(0);
    CHECK(s.count() == 3);
    CHECK(s.contains(70));
    CHECK_FALSE(s.contains(1));
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 5);
    CHECK(s.next(5) == 70);
    CHECK(s.next(70) == -1);
    s.remove(5);
    CHECK(s.count() == 2);
    CHECK(vs({0, 1}).is_subset_of(vs({0, 1, 2})));
    CHECK_FALSE(vs({0, 3}).is_subset_of(vs({0, 1, 2})));
    CHECK((vs({0, 1}) | vs({1, 2})) == vs({0, 1, 2}));
    CHECK((vs({0, 1}) & vs({1, 2})) == vs({1}));
    CHECK((vs({0, 1, 2}) - vs({1})) == vs({0, 2}));
    CHECK(VertexSet::full(3) == vs({0, 1, 2}));
    CHECK(VertexSet::full(128).count() == 128);
}

TEST_CASE("lexicographic order compares the first differing vertex") {
    CHECK(lex_less(vs({0, 3}), vs({1, 2})));
    CHECK(lex_less(vs({0, 1, 4}), vs({0, 2, 3})));
    CHECK_FALSE(lex_less(vs({0, 2}), vs({0, 2})));
    CHECK(lex_less(vs({0, 2, 64}), vs({0, 2, 65})));  // difference in the high word
    CHECK_FALSE(lex_less(vs({1, 2}), vs({0, 3})));
}

TEST_CASE("vertex set parsing and printing") {
    CHECK(to_string(vs({0, 3, 17})) == "0,3,17");
    CHECK(to_string(VertexSet{}) == "");
    CHECK(parse_vertex_set("0,3,17") == vs({0, 3, 17}));
    CHECK(parse_vertex_set("") == VertexSet{});
    CHECK(parse_vertex_set("7,7") == vs({7}));
    CHECK_THROWS_AS(parse_vertex_set("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex_set("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex_set("128"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex_set("1,"), std::invalid_argument);
}

TEST_CASE("graph construction") {
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.size() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // idempotent
    g.add_edge(2, 3);
    CHECK(g.size() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 1);
    CHECK(g.neighbors(0) == vs({1}));
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Graph(129), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("components and connectivity") {
    Graph g(6);
    g.add_edge(0, 2);
    g.add_edge(2, 4);
    g.add_edge(1, 5);
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == vs({0, 2, 4}));
    CHECK(comps[1] == vs({1, 5}));
    CHECK(comps[2] == vs({3}));
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(generate(parse_family_spec("path:6"))));
    auto [lo, hi] = degree_profile(g);
    CHECK(lo == 0);
    CHECK(hi == 2);
}

TEST_CASE("bipartition") {
    auto even = bipartition(generate(parse_family_spec("path:4")));
    REQUIRE(even.has_value());
    CHECK(*even == std::vector<int>{0, 1, 0, 1});
    CHECK_FALSE(bipartition(generate(parse_family_spec("cycle:5"))).has_value());
    Graph two(4);  // two components, color 0 restarts at each smallest vertex
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(*bipartition(two) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("universal vertex") {
    CHECK(has_universal_vertex(generate(parse_family_spec("star:5"))) == 0);
    CHECK(has_universal_vertex(generate(parse_family_spec("complete:4"))) == 0);
    CHECK_FALSE(has_universal_vertex(generate(parse_family_spec("cycle:4"))).has_value());
    CHECK(has_universal_vertex(generate(parse_family_spec("complete:1"))) == 0);
}

TEST_CASE("induced path/cycle detection") {
    SUBCASE("path of four vertices") {
        auto hit = find_induced_p4_or_c4(generate(parse_family_spec("path:4")));
        REQUIRE(hit.has_value());
        CHECK(hit->kind == InducedPattern::P4);
    }
    SUBCASE("four-cycle") {
        auto hit = find_induced_p4_or_c4(generate(parse_family_spec("cycle:4")));
        REQUIRE(hit.has_value());
        CHECK(hit->kind == InducedPattern::C4);
    }
    SUBCASE("free graphs") {
        CHECK_FALSE(find_induced_p4_or_c4(generate(parse_family_spec("complete:5"))).has_value());
        CHECK_FALSE(find_induced_p4_or_c4(generate(parse_family_spec("star:6"))).has_value());
        Graph paw(4);  // triangle plus a pendant
        paw.add_edge(0, 1);
        paw.add_edge(0, 2);
        paw.add_edge(1, 2);
        paw.add_edge(0, 3);
        CHECK_FALSE(find_induced_p4_or_c4(paw).has_value());
    }
    SUBCASE("reported vertices induce the pattern") {
        Graph g = generate(parse_family_spec("cycle:6"));
        auto hit = find_induced_p4_or_c4(g);
        REQUIRE(hit.has_value());
        REQUIRE(hit->kind == InducedPattern::P4);
        auto& v = hit->v;
        CHECK(g.has_edge(v[0], v[1]));
        CHECK(g.has_edge(v[1], v[2]));
        CHECK(g.has_edge(v[2], v[3]));
        CHECK_FALSE(g.has_edge(v[0], v[2]));
        CHECK_FALSE(g.has_edge(v[1], v[3]));
        CHECK_FALSE(g.has_edge(v[0], v[3]));
    }
}

TEST_CASE("edge removal") {
    Graph g = generate(parse_family_spec("cycle:4"));
    Graph h = remove_edge(g, 0, 1);
    CHECK(h.size() == 3);
    CHECK_FALSE(h.has_edge(0, 1));
    CHECK(g.has_edge(0, 1));  // input untouched
    CHECK_THROWS_AS(remove_edge(h, 0, 1), std::invalid_argument);
}

TEST_CASE("edge contraction") {
    SUBCASE("path shrinks to a shorter path") {
        Graph h = contract_edge(generate(parse_family_spec("path:4")), 1, 2);
        CHECK(h.order() == 3);
        CHECK(h.size() == 2);
        CHECK(h.has_edge(0, 1));
        CHECK(h.has_edge(1, 2));
    }
    SUBCASE("rerouted edge may land below the merged slot") {
        Graph g(3);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        Graph h = contract_edge(g, 1, 2);
        CHECK(h.order() == 2);
        CHECK(h.size() == 1);
        CHECK(h.has_edge(0, 1));
    }
    SUBCASE("triangle loses its loop edge") {
        Graph h = contract_edge(generate(parse_family_spec("complete:3")), 0, 1);
        CHECK(h.order() == 2);
        CHECK(h.size() == 1);
    }
    CHECK_THROWS_AS(contract_edge(generate(parse_family_spec("path:3")), 0, 2),
                    std::invalid_argument);
}

TEST_CASE("vertex removal") {
    Graph h = remove_vertex(generate(parse_family_spec("cycle:5")), 2);
    CHECK(h.order() == 4);
    CHECK(h.size() == 3);  // path 1-0-3-2 after relabeling
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(0, 3));
    CHECK(h.has_edge(2, 3));
    CHECK_THROWS_AS(remove_vertex(h, 7), std::invalid_argument);
}

TEST_CASE("complement") {
    Graph c5 = generate(parse_family_spec("cycle:5"));
    Graph co = complement(c5);
    CHECK(co.order() == 5);
    CHECK(co.size() == 5);  // self-complementary
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(c5.has_edge(u, v) != co.has_edge(u, v));
    CHECK(complement(generate(parse_family_spec("complete:4"))).size() == 0);
}

TEST_CASE("family specs parse and print") {
    CHECK(to_string(parse_family_spec("path:7")) == "path:7");
    CHECK(to_string(parse_family_spec("kbip:3,4")) == "kbip:3,4");
    CHECK(to_string(parse_family_spec("extremal:10,7")) == "extremal:10,7");
    CHECK_THROWS_AS(parse_family_spec("path"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("blob:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("path:3,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("kbip:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("path:x"), std::invalid_argument);
}

TEST_CASE("family generators") {
    SUBCASE("orders and sizes") {
        CHECK(generate(parse_family_spec("path:7")).size() == 6);
        CHECK(generate(parse_family_spec("cycle:7")).size() == 7);
        CHECK(generate(parse_family_spec("complete:6")).size() == 15);
        CHECK(generate(parse_family_spec("kbip:3,4")).size() == 12);
        CHECK(generate(parse_family_spec("star:9")).size() == 8);
        CHECK(generate(parse_family_spec("star:9")).degree(0) == 8);
    }
    SUBCASE("size extremal graph drops a balanced biclique except a matching") {
        Graph g = generate(parse_family_spec("extremal:8,6"));
        int t = 8 - 6;
        CHECK(g.order() == 8);
        CHECK(g.size() == 8 * 7 / 2 - t * (t - 1));
        // U = {0,1}, W = {2,3}: only the matched pairs (0,2) and (1,3) survive
        CHECK(g.has_edge(0, 2));
        CHECK(g.has_edge(1, 3));
        CHECK_FALSE(g.has_edge(0, 3));
        CHECK_FALSE(g.has_edge(1, 2));
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(4, 5));
    }
    SUBCASE("subdivided star") {
        Graph g = generate(parse_family_spec("substar:3"));
        CHECK(g.order() == 7);
        CHECK(g.size() == 6);
        CHECK(g.degree(0) == 3);
        for (int arm = 0; arm < 3; ++arm) {
            CHECK(g.has_edge(0, 2 * arm + 1));
            CHECK(g.has_edge(2 * arm + 1, 2 * arm + 2));
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(generate(parse_family_spec("path:0")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_family_spec("cycle:2")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_family_spec("kbip:0,3")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_family_spec("star:1")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_family_spec("extremal:8,3")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_family_spec("extremal:8,8")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_family_spec("path:129")), std::invalid_argument);
    }
}

TEST_CASE("edge list round trip") {
    Graph g = generate(parse_family_spec("kbip:2,3"));
    Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back.order() == g.order());
    CHECK(back.size() == g.size());
    for (int u = 0; u < g.order(); ++u) CHECK(back.neighbors(u) == g.neighbors(u));
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("# a comment\n3 2\n0 1\n1 2   # trailing comment\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(parse_edge_list("1 0\n").order() == 1);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);       // count mismatch
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), std::invalid_argument);       // out of range
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), std::invalid_argument);       // loop
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 9\n"), std::invalid_argument);     // junk
    CHECK_THROWS_AS(parse_edge_list("3\n"), std::invalid_argument);
}
