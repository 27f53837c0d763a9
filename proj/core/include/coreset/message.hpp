#pragma once

#include "coreset/graph.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace coreset {

// Vertex universe shared by all machines: everything the coordinator may know
// about the graph besides the messages (the model gives it no edges).
struct Universe {
    VertexId num_vertices = 0;
    std::optional<Bipartition> bipartition;
    bool multigraph = false;

    static Universe of(const Graph& g) {
        return Universe{g.num_vertices(), g.bipartition(), g.is_multigraph()};
    }
};

// One machine's simultaneous message: a subgraph plus optionally a fixed
// partial solution (vertices to add directly to the final vertex cover).
struct Message {
    std::vector<Edge> edges;
    std::vector<VertexId> fixed_vertices;
    std::uint32_t origin = 0;
};

// ceil(log2(total_vertices)).
constexpr std::uint32_t bits_per_vertex(std::uint64_t total_vertices) {
    std::uint32_t bits = 0;
    while ((std::uint64_t{1} << bits) < total_vertices) ++bits;
    return bits;
}

// Fixed-width encoding: two vertex ids per edge, one per fixed vertex.
inline std::uint64_t message_bits(const Message& m, std::uint32_t bpv) {
    return static_cast<std::uint64_t>(m.edges.size()) * 2 * bpv +
           static_cast<std::uint64_t>(m.fixed_vertices.size()) * bpv;
}

struct CommLedger {
    std::vector<std::uint64_t> per_machine_bits;
    std::uint64_t total_bits = 0;
    std::uint32_t encoding_bits_per_vertex = 0;

    static CommLedger account(const std::vector<Message>& messages, std::uint32_t bpv) {
        CommLedger ledger;
        ledger.encoding_bits_per_vertex = bpv;
        ledger.per_machine_bits.reserve(messages.size());
        for (const Message& m : messages) {
            std::uint64_t bits = message_bits(m, bpv);
            ledger.per_machine_bits.push_back(bits);
            ledger.total_bits += bits;
        }
        return ledger;
    }

    std::uint64_t max_machine_bits() const {
        std::uint64_t mx = 0;
        for (auto b : per_machine_bits) mx = std::max(mx, b);
        return mx;
    }
};

} // namespace coreset
