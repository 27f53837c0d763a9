#pragma once

#include "coreset/graph.hpp"
#include "coreset/message.hpp"
#include "coreset/partition.hpp"
#include "coreset/rng.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace coreset {

// Intermediate matchings of the sequential merge: M(0) = empty, M(i) extends
// M(i-1) with the i-th coreset's non-conflicting edges.
struct MergeTrace {
    std::vector<std::size_t> sizes;      // |M(0)| .. |M(k)|
    std::vector<std::size_t> increments; // per-round gains, length k

    std::size_t rounds() const { return increments.size(); }
};

// The matching coreset of one shard: any maximum matching. Bipartite shards
// take the Hopcroft-Karp fast path, general shards the blossom search. Any
// exact maximum-matching algorithm is admissible here; machines need no
// coordination or shared tie-breaking.
Matching matching_coreset(const Graph& shard);

// Sequential greedy merge in coreset order: fold each coreset's edges into
// the growing matching, keeping those that do not violate the matching
// property. Edge order within a coreset is as given.
std::pair<Matching, MergeTrace> greedy_merge(std::span<const Matching> coresets,
                                             VertexId num_vertices);

// Maximum matching of the union graph of all coreset edges.
Matching exact_merge(std::span<const Matching> coresets, VertexId num_vertices,
                     const std::optional<Bipartition>& bipartition = std::nullopt);

struct SubsampledResult {
    Matching matching;
    CommLedger ledger;
};

// Per shard: compute the matching coreset, keep each edge independently with
// probability 1/alpha (stream "subsample"/shard), send the survivors; the
// coordinator computes a maximum matching of what arrived.
SubsampledResult subsampled_matching_protocol(const Partition& p, double alpha, RngSeed seed);

} // namespace coreset
