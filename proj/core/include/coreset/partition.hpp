#pragma once

#include "coreset/graph.hpp"
#include "coreset/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coreset {

// Assignment of every edge of a source graph to one of k shards. Shard
// subgraphs keep the full vertex set of the source.
class Partition {
public:
    Partition(const Graph& source, std::uint32_t k, std::vector<std::uint32_t> assignment);

    std::uint32_t k() const { return k_; }
    const Graph& source() const { return *source_; }
    const std::vector<std::uint32_t>& assignment() const { return assignment_; }

    // Subgraph on the full vertex set with exactly the edges assigned to i.
    Graph shard(std::uint32_t i) const;
    std::size_t shard_size(std::uint32_t i) const;

private:
    const Graph* source_;
    std::uint32_t k_;
    std::vector<std::uint32_t> assignment_;
    std::vector<std::size_t> shard_sizes_;
};

// Each edge independently uniform over [0, k). Edge j's shard is drawn from
// the counter-based stream (seed, "partition") at counter j, so the result is
// independent of evaluation order.
Partition random_k_partition(const Graph& g, std::uint32_t k, RngSeed seed);

enum class AdversarialStrategy {
    RoundRobin,
    ContiguousByLeftEndpoint,
};

AdversarialStrategy parse_adversarial_strategy(const std::string& name);

// Deterministic partitions used to contrast random partitioning.
// round-robin: edge j -> j mod k. contiguous-by-left-endpoint: all edges with
// the same min endpoint land in one shard (blocks of vertex ids).
Partition adversarial_partition(const Graph& g, std::uint32_t k, AdversarialStrategy strategy);

// Replay format: one line `edge_index shard_id` per edge.
std::string serialize_partition(const Partition& p);
void save_partition(const Partition& p, const std::string& path);
Partition load_partition(const Graph& source, std::uint32_t k, const std::string& path);

} // namespace coreset
