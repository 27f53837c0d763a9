#include "coreset/vertex_cover.hpp"

#include "coreset/matching.hpp"
#include "test_util.hpp"

#include "doctest.h"

using namespace coreset;

TEST_CASE("is_vertex_cover") {
    Graph tri = testutil::triangle();
    CHECK(is_vertex_cover(tri, VertexSet({0, 1})));
    CHECK_FALSE(is_vertex_cover(tri, VertexSet({0})));
    CHECK(is_vertex_cover(Graph(3, {}), VertexSet()));
    CHECK_THROWS_AS(is_vertex_cover(tri, VertexSet({9})), std::invalid_argument);
}

TEST_CASE("two_approx_vc covers and stays within factor two") {
    SUBCASE("star") {
        Graph star(5, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{0, 4}});
        VertexSet cover = two_approx_vc(star);
        CHECK(cover == VertexSet({0, 1}));
    }
    SUBCASE("triangle") {
        CHECK(two_approx_vc(testutil::triangle()).size() == 2);
    }
    SUBCASE("path 0-1-2-3") {
        VertexSet cover = two_approx_vc(testutil::path_graph(4));
        CHECK(cover == VertexSet({0, 1, 2, 3}));
        CHECK(brute_force_vc(testutil::path_graph(4)) == 2);
    }
}

TEST_CASE("exact_vc_bipartite equals Koenig dual of the maximum matching") {
    SUBCASE("complete bipartite 3x3") {
        std::vector<Edge> edges;
        for (VertexId l = 0; l < 3; ++l)
            for (VertexId r = 3; r < 6; ++r) edges.push_back(Edge{l, r});
        Graph g(6, std::move(edges), Bipartition{3, 3});
        CHECK(exact_vc_bipartite(g).size() == 3);
    }
    SUBCASE("three-edge instance") {
        Graph g(4, {Edge{0, 2}, Edge{0, 3}, Edge{1, 2}}, Bipartition{2, 2});
        VertexSet cover = exact_vc_bipartite(g);
        CHECK(cover.size() == 2);
        CHECK(is_vertex_cover(g, cover));
    }
    SUBCASE("empty edge set") {
        CHECK(exact_vc_bipartite(Graph(4, {}, Bipartition{2, 2})).empty());
    }
    CHECK_THROWS_AS(exact_vc_bipartite(testutil::triangle()), std::invalid_argument);
}

TEST_CASE("brute_force_vc on tiny graphs") {
    CHECK(brute_force_vc(Graph(2, {Edge{0, 1}})) == 1);
    std::vector<Edge> c5;
    for (VertexId i = 0; i < 5; ++i) c5.push_back(Edge{i, (i + 1) % 5});
    CHECK(brute_force_vc(Graph(5, std::move(c5))) == 3);
    CHECK(brute_force_vc(Graph(4, {Edge{0, 1}, Edge{2, 3}})) == 2);
    CHECK_THROWS_AS(brute_force_vc(Graph(30, {})), std::invalid_argument);
}

TEST_CASE("Koenig duality and oracle agreement on random bipartite graphs") {
    StreamRng rng(RngSeed{17}, "koenig");
    for (int it = 0; it < 300; ++it) {
        Graph g = testutil::random_bipartite_graph(6, 6, 18, rng);
        VertexSet cover = exact_vc_bipartite(g);
        CHECK(is_vertex_cover(g, cover));
        CHECK(cover.size() == maximum_matching_bipartite(g).size());
        CHECK(cover.size() == brute_force_vc(g));
    }
}

TEST_CASE("two_approx_vc is a cover of size at most twice optimal") {
    StreamRng rng(RngSeed{18}, "two-approx");
    for (int it = 0; it < 200; ++it) {
        Graph g = testutil::random_graph(10, 20, rng);
        VertexSet cover = two_approx_vc(g);
        CHECK(is_vertex_cover(g, cover));
        CHECK(cover.size() <= 2 * brute_force_vc(g));
    }
}
