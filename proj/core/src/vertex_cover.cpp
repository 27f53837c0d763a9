#include "coreset/vertex_cover.hpp"

#include "coreset/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace coreset {

namespace {
constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (VertexId v : s.ids())
        if (v >= g.num_vertices())
            throw std::invalid_argument("is_vertex_cover: vertex id out of range");
    std::vector<bool> in(g.num_vertices(), false);
    for (VertexId v : s.ids()) in[v] = true;
    for (const Edge& e : g.edges())
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

VertexSet two_approx_vc(const Graph& g) {
    Matching m = maximal_matching(g);
    std::vector<VertexId> ids;
    ids.reserve(m.size() * 2);
    for (const Edge& e : m.edges()) {
        ids.push_back(e.u);
        ids.push_back(e.v);
    }
    return VertexSet(std::move(ids));
}

VertexSet exact_vc_bipartite(const Graph& g) {
    if (!g.is_bipartite())
        throw std::invalid_argument("exact_vc_bipartite: graph is not bipartite");
    const VertexId nl = g.bipartition()->left_count;
    const VertexId nr = g.bipartition()->right_count;

    std::vector<VertexId> match_l, match_r;
    detail::bipartite_match_arrays(g, match_l, match_r);

    // Left adjacency in side-local right ids.
    std::vector<std::vector<VertexId>> adj(nl);
    for (const Edge& e : g.edges()) {
        VertexId l = e.u < nl ? e.u : e.v;
        VertexId r = (e.u < nl ? e.v : e.u) - nl;
        adj[l].push_back(r);
    }

    // Alternating BFS from unmatched left vertices: left -> right along
    // non-matching edges, right -> left along matching edges.
    std::vector<bool> zl(nl, false), zr(nr, false);
    std::vector<VertexId> stack;
    for (VertexId u = 0; u < nl; ++u)
        if (match_l[u] == kNone) {
            zl[u] = true;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId r : adj[u]) {
            if (match_l[u] == r || zr[r]) continue;
            zr[r] = true;
            VertexId w = match_r[r];
            if (w != kNone && !zl[w]) {
                zl[w] = true;
                stack.push_back(w);
            }
        }
    }

    std::vector<VertexId> cover;
    for (VertexId u = 0; u < nl; ++u)
        if (!zl[u] && match_l[u] != kNone) cover.push_back(u);
    for (VertexId r = 0; r < nr; ++r)
        if (zr[r]) cover.push_back(r + nl);
    return VertexSet(std::move(cover));
}

namespace {

struct BruteCover {
    std::span<const Edge> edges;
    std::vector<bool> in_cover;
    std::size_t best;

    BruteCover(std::span<const Edge> e, VertexId n) : edges(e), in_cover(n, false), best(n) {}

    void rec(std::size_t edge_idx, std::size_t cur) {
        if (cur >= best) return;
        while (edge_idx < edges.size() &&
               (in_cover[edges[edge_idx].u] || in_cover[edges[edge_idx].v]))
            ++edge_idx;
        if (edge_idx == edges.size()) {
            best = cur;
            return;
        }
        const Edge& e = edges[edge_idx];
        in_cover[e.u] = true;
        rec(edge_idx + 1, cur + 1);
        in_cover[e.u] = false;
        in_cover[e.v] = true;
        rec(edge_idx + 1, cur + 1);
        in_cover[e.v] = false;
    }
};

} // namespace

std::size_t brute_force_vc(const Graph& g) {
    if (g.num_vertices() > 24)
        throw std::invalid_argument("brute_force_vc: more than 24 vertices");
    BruteCover bc(g.edges(), g.num_vertices());
    bc.rec(0, 0);
    return bc.best;
}

} // namespace coreset
