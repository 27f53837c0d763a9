#include "coreset/graph.hpp"

#include "test_util.hpp"

#include "doctest.h"

#include <algorithm>

using namespace coreset;

TEST_CASE("parse_graph reads header and edges") {
    Graph g = parse_graph("4 2\n0 1\n2 3\n");
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{2, 3});
    CHECK_FALSE(g.is_bipartite());
}

TEST_CASE("parse_graph rejects a self-loop with its line number") {
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0\n"), doctest::Contains("line 2"),
                         std::runtime_error);
}

TEST_CASE("parse_graph rejects an edge inside one side of a bipartition") {
    // L = {0,1}, R = {2,3}; edge 0-1 stays on the left side.
    CHECK_THROWS_AS(parse_graph("4 1 bip 2 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("parse_graph accepts comments, bip and multi markers") {
    Graph g = parse_graph("# instance\n4 3 bip 2 2 multi\n0 2\n0 2\n1 3\n");
    CHECK(g.is_multigraph());
    REQUIRE(g.is_bipartite());
    CHECK(g.bipartition()->left_count == 2);
    CHECK(g.degree(0) == 2); // parallel edges count with multiplicity
    CHECK(g.degree(2) == 2);
}

TEST_CASE("duplicate edges are rejected unless multigraph") {
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n1 0\n"), std::invalid_argument);
    CHECK_NOTHROW(parse_graph("3 2 multi\n0 1\n1 0\n"));
}

TEST_CASE("parse_graph rejects out-of-range ids and bad counts") {
    CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph("4 3\n0 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph(""), std::runtime_error);
}

TEST_CASE("degree counts incident edge occurrences") {
    Graph tri = testutil::triangle();
    CHECK(tri.degree(0) == 2);
    CHECK(tri.degree(1) == 2);

    Graph isolated(3, {Edge{0, 1}});
    CHECK(isolated.degree(2) == 0);
    CHECK_THROWS_AS(isolated.degree(7), std::invalid_argument);
}

TEST_CASE("sum of degrees is twice the edge count") {
    StreamRng rng(RngSeed{7}, "degree-sum");
    for (int it = 0; it < 50; ++it) {
        Graph g = testutil::random_graph(10, 20, rng);
        std::uint64_t total = 0;
        for (VertexId v = 0; v < g.num_vertices(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.num_edges());
    }
}

TEST_CASE("induced_degree_one_matching picks exactly the degree-one pairs") {
    SUBCASE("two disjoint edges") {
        Graph g(4, {Edge{0, 1}, Edge{2, 3}});
        CHECK(induced_degree_one_matching(g).size() == 2);
    }
    SUBCASE("path of two edges has none") {
        Graph g = testutil::path_graph(3);
        CHECK(induced_degree_one_matching(g).empty());
    }
    SUBCASE("triangle plus pendant pair") {
        Graph g(5, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{3, 4}});
        Matching m = induced_degree_one_matching(g);
        REQUIRE(m.size() == 1);
        CHECK(m.edges()[0] == Edge{3, 4});
    }
}

TEST_CASE("every maximal matching contains each induced degree-one edge") {
    // Both endpoints have no other incident edges, so any maximal matching
    // must include the edge; checked by brute force over random graphs.
    StreamRng rng(RngSeed{11}, "induced-subset");
    for (int it = 0; it < 200; ++it) {
        Graph g = testutil::random_graph(8, 12, rng);
        Matching forced = induced_degree_one_matching(g);
        std::vector<std::size_t> order(g.num_edges());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        shuffle(order, rng);
        // any greedy maximal matching, arbitrary order
        std::vector<bool> used(g.num_vertices(), false);
        std::vector<Edge> maximal;
        for (std::size_t idx : order) {
            const Edge& e = g.edge(idx);
            if (!used[e.u] && !used[e.v]) {
                used[e.u] = used[e.v] = true;
                maximal.push_back(e);
            }
        }
        for (const Edge& e : forced.edges()) {
            bool found = std::find(maximal.begin(), maximal.end(), e) != maximal.end() ||
                         std::find(maximal.begin(), maximal.end(), Edge{e.v, e.u}) != maximal.end();
            CHECK(found);
        }
    }
}

TEST_CASE("serialization round-trips bit-exactly") {
    StreamRng rng(RngSeed{3}, "roundtrip");
    for (int it = 0; it < 20; ++it) {
        Graph g = testutil::random_bipartite_graph(5, 6, 15, rng);
        std::string text = serialize_graph(g);
        Graph g2 = parse_graph(text);
        CHECK(serialize_graph(g2) == text);
    }
}

TEST_CASE("VertexSet keeps sorted unique ids") {
    VertexSet s({5, 1, 5, 3});
    CHECK(s.size() == 3);
    CHECK(s.contains(1));
    CHECK(s.contains(3));
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(2));
    s.insert(2);
    s.insert(2);
    CHECK(s.size() == 4);
    VertexSet t({2, 9});
    VertexSet u = VertexSet::set_union(s, t);
    CHECK(u.size() == 5);
}

TEST_CASE("is_valid_matching enforces disjointness and membership") {
    Graph g = testutil::path_graph(4);
    CHECK(is_valid_matching(g, Matching({Edge{0, 1}, Edge{2, 3}})));
    CHECK_FALSE(is_valid_matching(g, Matching({Edge{0, 1}, Edge{1, 2}})));
    CHECK_FALSE(is_valid_matching(g, Matching({Edge{0, 2}}))); // not a graph edge
}
