#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coreset {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Contiguous bipartition: L = [0, left_count), R = [left_count, left_count + right_count).
struct Bipartition {
    VertexId left_count = 0;
    VertexId right_count = 0;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Immutable undirected graph. Edge order is the emission order of the file or
// generator that produced it; all "arbitrary" downstream choices default to
// this order so runs are reproducible. Safe to share across threads once built.
class Graph {
public:
    Graph() = default;
    Graph(VertexId num_vertices, std::vector<Edge> edges,
          std::optional<Bipartition> bipartition = std::nullopt,
          bool multigraph = false);

    VertexId num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    bool is_bipartite() const { return bipartition_.has_value(); }
    const std::optional<Bipartition>& bipartition() const { return bipartition_; }
    bool is_multigraph() const { return multigraph_; }

    // Incident edge occurrences; parallel edges count with multiplicity.
    std::uint32_t degree(VertexId v) const;

    // Per-side vertex count used by the peeling thresholds: left side size for
    // bipartite graphs, total vertex count otherwise.
    VertexId side_count() const {
        return bipartition_ ? bipartition_->left_count : num_vertices_;
    }

    bool in_left(VertexId v) const {
        return bipartition_ && v < bipartition_->left_count;
    }

private:
    VertexId num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::optional<Bipartition> bipartition_;
    bool multigraph_ = false;
    std::vector<std::uint32_t> degrees_;
};

// Vertex-disjoint edge set.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {}

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    std::span<const Edge> edges() const { return edges_; }
    std::vector<Edge>& mutable_edges() { return edges_; }

private:
    std::vector<Edge> edges_;
};

// Sorted, deduplicated vertex id set.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> ids);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(VertexId v) const;
    std::span<const VertexId> ids() const { return ids_; }

    void insert(VertexId v);
    static VertexSet set_union(const VertexSet& a, const VertexSet& b);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<VertexId> ids_;
};

// True iff m is vertex-disjoint and every edge occurs in g.
bool is_valid_matching(const Graph& g, const Matching& m);

// The unique matching formed by edges whose two endpoints both have degree
// exactly one in g. Such edges are contained in every maximal matching.
Matching induced_degree_one_matching(const Graph& g);

// Text edge-list I/O. Header: `n m [bip nL nR] [multi]`, then m lines `u v`.
// Comment lines start with '#'. Throws std::runtime_error with the offending
// line number on parse or invariant failures.
Graph load_graph(const std::string& path);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

} // namespace coreset
