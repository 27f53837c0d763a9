#include "coreset/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace coreset {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

Graph::Graph(VertexId num_vertices, std::vector<Edge> edges,
             std::optional<Bipartition> bipartition, bool multigraph)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      bipartition_(bipartition),
      multigraph_(multigraph) {
    if (bipartition_) {
        const auto total = static_cast<std::uint64_t>(bipartition_->left_count) +
                           bipartition_->right_count;
        if (total != num_vertices_)
            throw std::invalid_argument("bipartition side sizes do not sum to vertex count");
    }
    degrees_.assign(num_vertices_, 0);
    std::unordered_set<std::uint64_t> seen;
    if (!multigraph_) seen.reserve(edges_.size() * 2);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= num_vertices_ || e.v >= num_vertices_)
            throw std::invalid_argument("edge " + std::to_string(i) + " endpoint out of range: (" +
                                        std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at edge " + std::to_string(i) + ": vertex " +
                                        std::to_string(e.u));
        if (bipartition_) {
            const bool ul = e.u < bipartition_->left_count;
            const bool vl = e.v < bipartition_->left_count;
            if (ul == vl)
                throw std::invalid_argument("edge " + std::to_string(i) + " (" +
                                            std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") does not cross the bipartition");
        }
        if (!multigraph_ && !seen.insert(edge_key(e.u, e.v)).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") in simple graph");
        ++degrees_[e.u];
        ++degrees_[e.v];
    }
}

std::uint32_t Graph::degree(VertexId v) const {
    if (v >= num_vertices_)
        throw std::invalid_argument("degree: vertex " + std::to_string(v) + " out of range");
    return degrees_[v];
}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(VertexId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

VertexSet VertexSet::set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                   std::back_inserter(out));
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::unordered_set<std::uint64_t> graph_edges;
    graph_edges.reserve(g.num_edges() * 2);
    for (const Edge& e : g.edges()) graph_edges.insert(edge_key(e.u, e.v));

    std::vector<bool> used(g.num_vertices(), false);
    for (const Edge& e : m.edges()) {
        if (e.u >= g.num_vertices() || e.v >= g.num_vertices()) return false;
        if (!graph_edges.count(edge_key(e.u, e.v))) return false;
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = true;
    }
    return true;
}

Matching induced_degree_one_matching(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 1 && g.degree(e.v) == 1) out.push_back(e);
    return Matching(std::move(out));
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    VertexId n = 0;
    std::size_t m = 0;
    std::optional<Bipartition> bip;
    bool multi = false;
    bool have_header = false;

    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::uint64_t n64 = 0, m64 = 0;
            if (!(ls >> n64 >> m64)) parse_fail(line_no, "expected header `n m`");
            std::string tok;
            while (ls >> tok) {
                if (tok == "bip") {
                    std::uint64_t l = 0, r = 0;
                    if (!(ls >> l >> r)) parse_fail(line_no, "bip marker needs side sizes");
                    bip = Bipartition{static_cast<VertexId>(l), static_cast<VertexId>(r)};
                } else if (tok == "multi") {
                    multi = true;
                } else {
                    parse_fail(line_no, "unknown header token `" + tok + "`");
                }
            }
            n = static_cast<VertexId>(n64);
            m = static_cast<std::size_t>(m64);
            edges.reserve(m);
            have_header = true;
            continue;
        }
        std::uint64_t u = 0, v = 0;
        if (!(ls >> u >> v)) parse_fail(line_no, "expected edge `u v`");
        if (u >= n || v >= n) parse_fail(line_no, "vertex id out of range");
        if (u == v) parse_fail(line_no, "self-loop");
        edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (!have_header) throw std::runtime_error("parse error: empty input, no header");
    if (edges.size() != m)
        throw std::runtime_error("parse error: header declares " + std::to_string(m) +
                                 " edges, found " + std::to_string(edges.size()));
    return Graph(n, std::move(edges), bip, multi);
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges();
    if (g.bipartition())
        out << " bip " << g.bipartition()->left_count << ' ' << g.bipartition()->right_count;
    if (g.is_multigraph()) out << " multi";
    out << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write graph file: " + path);
    f << serialize_graph(g);
}

} // namespace coreset
