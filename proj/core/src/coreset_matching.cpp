#include "coreset/coreset_matching.hpp"

#include "coreset/matching.hpp"

#include <stdexcept>

namespace coreset {

Matching matching_coreset(const Graph& shard) {
    if (shard.is_bipartite()) return maximum_matching_bipartite(shard);
    return maximum_matching_general(shard);
}

std::pair<Matching, MergeTrace> greedy_merge(std::span<const Matching> coresets,
                                             VertexId num_vertices) {
    std::vector<bool> used(num_vertices, false);
    std::vector<Edge> merged;
    MergeTrace trace;
    trace.sizes.push_back(0);
    for (const Matching& m : coresets) {
        std::size_t before = merged.size();
        for (const Edge& e : m.edges()) {
            if (e.u >= num_vertices || e.v >= num_vertices)
                throw std::invalid_argument("greedy_merge: coreset edge outside vertex universe");
            if (!used[e.u] && !used[e.v]) {
                used[e.u] = used[e.v] = true;
                merged.push_back(e);
            }
        }
        trace.increments.push_back(merged.size() - before);
        trace.sizes.push_back(merged.size());
    }
    return {Matching(std::move(merged)), std::move(trace)};
}

Matching exact_merge(std::span<const Matching> coresets, VertexId num_vertices,
                     const std::optional<Bipartition>& bipartition) {
    std::vector<Edge> union_edges;
    for (const Matching& m : coresets)
        for (const Edge& e : m.edges()) {
            if (e.u >= num_vertices || e.v >= num_vertices)
                throw std::invalid_argument("exact_merge: coreset edge outside vertex universe");
            union_edges.push_back(e);
        }
    // Coresets from different shards may repeat an edge; the union is a
    // multigraph for container purposes, matching collapses duplicates.
    Graph union_graph(num_vertices, std::move(union_edges), bipartition, /*multigraph=*/true);
    return matching_coreset(union_graph);
}

SubsampledResult subsampled_matching_protocol(const Partition& p, double alpha, RngSeed seed) {
    if (alpha < 1.0)
        throw std::invalid_argument("subsampled_matching_protocol: alpha must be >= 1");
    const Graph& g = p.source();
    const double keep = 1.0 / alpha;

    std::vector<Message> messages;
    messages.reserve(p.k());
    for (std::uint32_t i = 0; i < p.k(); ++i) {
        Matching coreset = matching_coreset(p.shard(i));
        StreamRng sub(seed, "subsample", i);
        Message msg;
        msg.origin = i;
        const auto edges = coreset.edges();
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (sub.bernoulli_at(j, keep)) msg.edges.push_back(edges[j]);
        messages.push_back(std::move(msg));
    }

    std::vector<Matching> received;
    received.reserve(messages.size());
    for (const Message& m : messages) received.emplace_back(m.edges);

    SubsampledResult result;
    result.matching = exact_merge(received, g.num_vertices(), g.bipartition());
    result.ledger = CommLedger::account(messages, bits_per_vertex(g.num_vertices()));
    return result;
}

} // namespace coreset
