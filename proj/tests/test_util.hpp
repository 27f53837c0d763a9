#pragma once

#include "coreset/graph.hpp"
#include "coreset/rng.hpp"

#include <set>
#include <utility>
#include <vector>

namespace coreset::testutil {

// Random simple graph with at most max_edges edges, for oracle comparisons.
inline Graph random_graph(std::uint32_t n, std::uint32_t max_edges, StreamRng& rng) {
    std::vector<Edge> all;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) all.push_back(Edge{u, v});
    shuffle(all, rng);
    std::uint32_t m = static_cast<std::uint32_t>(rng.next_below(
        std::min<std::uint64_t>(all.size(), max_edges) + 1));
    all.resize(m);
    return Graph(n, std::move(all));
}

// Random simple bipartite graph, nl + nr vertices, at most max_edges edges.
inline Graph random_bipartite_graph(std::uint32_t nl, std::uint32_t nr, std::uint32_t max_edges,
                                    StreamRng& rng) {
    std::vector<Edge> all;
    for (VertexId u = 0; u < nl; ++u)
        for (VertexId v = 0; v < nr; ++v) all.push_back(Edge{u, nl + v});
    shuffle(all, rng);
    std::uint32_t m = static_cast<std::uint32_t>(rng.next_below(
        std::min<std::uint64_t>(all.size(), max_edges) + 1));
    all.resize(m);
    return Graph(nl + nr, std::move(all), Bipartition{nl, nr});
}

inline Graph path_graph(std::uint32_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
    return Graph(n, std::move(edges));
}

inline Graph triangle() {
    return Graph(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}});
}

inline Graph petersen() {
    // Outer 5-cycle, inner pentagram, spokes.
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.push_back(Edge{i, (i + 1) % 5});
        edges.push_back(Edge{5 + i, 5 + (i + 2) % 5});
        edges.push_back(Edge{i, 5 + i});
    }
    return Graph(10, std::move(edges));
}

} // namespace coreset::testutil
