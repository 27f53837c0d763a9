#pragma once

#include "coreset/graph.hpp"
#include "coreset/rng.hpp"

#include <cstdint>
#include <string>

namespace coreset {

// Hard matching instance: a dense random block E_AB between small random sets
// A x B (each of size n/alpha) hiding a planted perfect matching between the
// complements. Any large matching must recover planted edges.
struct HardMatchingInstance {
    Graph graph; // bipartite, n per side
    VertexSet a, b;
    std::vector<Edge> e_ab;
    Matching planted; // perfect matching on (L \ A) x (R \ B)
    std::uint32_t n = 0;
    double alpha = 1;
    std::uint32_t k = 1;
};

// Hard vertex cover instance: random edges from a small random A x R block
// plus one extra edge at a uniformly random vertex outside A. The cover
// A + {v*} has size n/alpha + 1.
struct HardVcInstance {
    Graph graph; // bipartite, n per side
    VertexSet a;
    Edge e_star{};
    VertexId v_star = 0;
    std::uint32_t n = 0;
    double alpha = 1;
    std::uint32_t k = 1;
};

// Degree-exactly-one statistics of a bipartite graph. l1 is the set of left
// vertices of degree one, r1 their neighbor set; t_size counts right vertices
// with no edges to L \ l1.
struct DegreeOneStats {
    VertexSet l1;
    VertexSet r1;
    std::size_t s_size = 0;
    std::size_t t_size = 0;
};

HardMatchingInstance gen_hard_matching(std::uint32_t n, double alpha, std::uint32_t k,
                                       RngSeed seed);

HardVcInstance gen_hard_vc(std::uint32_t n, double alpha, std::uint32_t k, RngSeed seed);

// G(n, n, p): each of the n^2 side-crossing edges present independently with
// probability p. Sparse regimes use geometric skip sampling, so cost is
// O(edges), not O(n^2).
Graph gen_random_bipartite(std::uint32_t n, double p, RngSeed seed);

// Witness that per-shard *maximal* (rather than maximum) matchings merge
// badly: a planted perfect matching plus a complete bipartite block to the
// first n/k right vertices ("hubs"). A maximal matching that prefers hub
// edges can block nearly all of its shard's planted edges.
Graph gen_maximal_trap(std::uint32_t n, std::uint32_t k);

DegreeOneStats degree_one_stats(const Graph& g);

// Adversarial edge order for a trap shard: for each planted edge present in
// the shard, first a hub edge pairing its left endpoint with a distinct hub
// (a maximum matching between those left endpoints and the hubs), then the
// remaining hub edges, then planted edges last. A greedy maximal matching in
// this order blocks nearly every planted edge the shard received.
std::vector<std::size_t> trap_hub_first_order(const Graph& shard, std::uint32_t hub_count);

// Sidecar metadata (JSON) recording the planted structure and seed.
std::string hard_matching_metadata(const HardMatchingInstance& inst, RngSeed seed);
std::string hard_vc_metadata(const HardVcInstance& inst, RngSeed seed);

} // namespace coreset
