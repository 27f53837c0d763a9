#pragma once

#include "coreset/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace coreset {

// Greedy scan in the given edge order; result is maximal. `order` must be a
// permutation of edge indices. The overload without an order uses container order.
Matching maximal_matching(const Graph& g, std::span<const std::size_t> order);
Matching maximal_matching(const Graph& g);

// Maximum-cardinality matching of a bipartite graph via Hopcroft-Karp style
// layered augmenting phases. Deterministic: vertices scanned in id order,
// adjacency sorted by neighbor id. Parallel edges collapse to one candidate.
Matching maximum_matching_bipartite(const Graph& g);

// Maximum-cardinality matching of an arbitrary graph via augmenting-path
// search with blossom contraction. Intended for small graphs; the shard
// pipelines use the bipartite fast path.
Matching maximum_matching_general(const Graph& g);

// Exact maximum matching size by take/skip recursion over edges with a
// cardinality bound. Parallel edges collapse first; requires at most 24
// distinct edges.
std::size_t brute_force_max_matching(const Graph& g);

namespace detail {
// Left/right mate arrays in side-local ids (kNone = unmatched); used by the
// König cover extraction.
void bipartite_match_arrays(const Graph& g, std::vector<VertexId>& match_l,
                            std::vector<VertexId>& match_r);
} // namespace detail

} // namespace coreset
