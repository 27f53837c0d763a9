#include "coreset/partition.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coreset {

Partition::Partition(const Graph& source, std::uint32_t k, std::vector<std::uint32_t> assignment)
    : source_(&source), k_(k), assignment_(std::move(assignment)) {
    if (k_ == 0) throw std::invalid_argument("partition: k must be >= 1");
    if (assignment_.size() != source.num_edges())
        throw std::invalid_argument("partition: assignment length != edge count");
    shard_sizes_.assign(k_, 0);
    for (std::size_t j = 0; j < assignment_.size(); ++j) {
        if (assignment_[j] >= k_)
            throw std::invalid_argument("partition: shard id out of range at edge " +
                                        std::to_string(j));
        ++shard_sizes_[assignment_[j]];
    }
}

Graph Partition::shard(std::uint32_t i) const {
    if (i >= k_) throw std::invalid_argument("shard id out of range");
    std::vector<Edge> edges;
    edges.reserve(shard_sizes_[i]);
    for (std::size_t j = 0; j < assignment_.size(); ++j)
        if (assignment_[j] == i) edges.push_back(source_->edge(j));
    return Graph(source_->num_vertices(), std::move(edges), source_->bipartition(),
                 source_->is_multigraph());
}

std::size_t Partition::shard_size(std::uint32_t i) const {
    if (i >= k_) throw std::invalid_argument("shard id out of range");
    return shard_sizes_[i];
}

Partition random_k_partition(const Graph& g, std::uint32_t k, RngSeed seed) {
    if (k == 0) throw std::invalid_argument("random_k_partition: k must be >= 1");
    StreamRng stream(seed, "partition");
    std::vector<std::uint32_t> assignment(g.num_edges());
    for (std::size_t j = 0; j < assignment.size(); ++j)
        assignment[j] = static_cast<std::uint32_t>(stream.below_at(j, k));
    return Partition(g, k, std::move(assignment));
}

AdversarialStrategy parse_adversarial_strategy(const std::string& name) {
    if (name == "round-robin") return AdversarialStrategy::RoundRobin;
    if (name == "contiguous-by-left-endpoint") return AdversarialStrategy::ContiguousByLeftEndpoint;
    throw std::invalid_argument("unknown adversarial strategy: " + name);
}

Partition adversarial_partition(const Graph& g, std::uint32_t k, AdversarialStrategy strategy) {
    if (k == 0) throw std::invalid_argument("adversarial_partition: k must be >= 1");
    std::vector<std::uint32_t> assignment(g.num_edges());
    switch (strategy) {
        case AdversarialStrategy::RoundRobin:
            for (std::size_t j = 0; j < assignment.size(); ++j)
                assignment[j] = static_cast<std::uint32_t>(j % k);
            break;
        case AdversarialStrategy::ContiguousByLeftEndpoint: {
            // Vertex ids map to shards in contiguous blocks, so every edge of a
            // given left endpoint lands in one shard.
            const VertexId n = std::max<VertexId>(g.num_vertices(), 1);
            const VertexId block = (n + k - 1) / k;
            for (std::size_t j = 0; j < assignment.size(); ++j) {
                const Edge& e = g.edge(j);
                VertexId left = std::min(e.u, e.v);
                assignment[j] = static_cast<std::uint32_t>(left / block);
            }
            break;
        }
    }
    return Partition(g, k, std::move(assignment));
}

std::string serialize_partition(const Partition& p) {
    std::ostringstream out;
    const auto& a = p.assignment();
    for (std::size_t j = 0; j < a.size(); ++j) out << j << ' ' << a[j] << '\n';
    return out.str();
}

void save_partition(const Partition& p, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write partition file: " + path);
    f << serialize_partition(p);
}

Partition load_partition(const Graph& source, std::uint32_t k, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open partition file: " + path);
    std::vector<std::uint32_t> assignment(source.num_edges(), 0);
    std::vector<bool> seen(source.num_edges(), false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t j = 0, s = 0;
        if (!(ls >> j >> s))
            throw std::runtime_error("partition parse error at line " + std::to_string(line_no));
        if (j >= source.num_edges())
            throw std::runtime_error("partition edge index out of range at line " +
                                     std::to_string(line_no));
        assignment[j] = static_cast<std::uint32_t>(s);
        seen[j] = true;
    }
    for (std::size_t j = 0; j < seen.size(); ++j)
        if (!seen[j])
            throw std::runtime_error("partition file missing edge index " + std::to_string(j));
    return Partition(source, k, std::move(assignment));
}

} // namespace coreset
