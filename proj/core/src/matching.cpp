#include "coreset/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace coreset {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Deduplicated edge list in first-occurrence order.
std::vector<Edge> simple_edges(const Graph& g) {
    std::vector<Edge> out;
    out.reserve(g.num_edges());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.num_edges() * 2);
    for (const Edge& e : g.edges())
        if (seen.insert(edge_key(e.u, e.v)).second) out.push_back(e);
    return out;
}

// Sorted, deduplicated adjacency lists.
std::vector<std::vector<VertexId>> adjacency(const Graph& g) {
    std::vector<std::vector<VertexId>> adj(g.num_vertices());
    for (const Edge& e : simple_edges(g)) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

} // namespace

Matching maximal_matching(const Graph& g, std::span<const std::size_t> order) {
    if (order.size() != g.num_edges())
        throw std::invalid_argument("maximal_matching: order length != edge count");
    std::vector<bool> seen(g.num_edges(), false);
    for (std::size_t idx : order) {
        if (idx >= g.num_edges() || seen[idx])
            throw std::invalid_argument("maximal_matching: order is not a permutation");
        seen[idx] = true;
    }
    std::vector<bool> used(g.num_vertices(), false);
    std::vector<Edge> out;
    for (std::size_t idx : order) {
        const Edge& e = g.edge(idx);
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            out.push_back(e);
        }
    }
    return Matching(std::move(out));
}

Matching maximal_matching(const Graph& g) {
    std::vector<std::size_t> order(g.num_edges());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return maximal_matching(g, order);
}

namespace {

// Hopcroft-Karp working state over left ids [0, nl) and right ids [0, nr)
// (right ids are offset back when emitting edges).
struct HopcroftKarp {
    std::vector<std::vector<VertexId>> adj; // left -> right (local ids)
    std::vector<VertexId> match_l, match_r;
    std::vector<std::uint32_t> dist;
    VertexId nl;

    explicit HopcroftKarp(VertexId nl_, VertexId nr)
        : adj(nl_), match_l(nl_, kNone), match_r(nr, kNone), dist(nl_), nl(nl_) {}

    bool bfs() {
        constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
        std::queue<VertexId> q;
        for (VertexId u = 0; u < nl; ++u) {
            if (match_l[u] == kNone) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = inf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId v : adj[u]) {
                VertexId w = match_r[v];
                if (w == kNone) {
                    found = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(VertexId u) {
        for (VertexId v : adj[u]) {
            VertexId w = match_r[v];
            if (w == kNone || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = std::numeric_limits<std::uint32_t>::max();
        return false;
    }

    void run() {
        while (bfs())
            for (VertexId u = 0; u < nl; ++u)
                if (match_l[u] == kNone) dfs(u);
    }
};

} // namespace

namespace detail {

// Shared with the König cover extraction in vertex_cover.cpp.
void bipartite_match_arrays(const Graph& g, std::vector<VertexId>& match_l,
                            std::vector<VertexId>& match_r) {
    const auto& bip = g.bipartition();
    if (!bip) throw std::invalid_argument("maximum_matching_bipartite: graph is not bipartite");
    const VertexId nl = bip->left_count;
    const VertexId nr = bip->right_count;

    HopcroftKarp hk(nl, nr);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.num_edges() * 2);
    for (const Edge& e : g.edges()) {
        VertexId l = e.u < nl ? e.u : e.v;
        VertexId r = e.u < nl ? e.v : e.u;
        if (seen.insert(edge_key(l, r)).second) hk.adj[l].push_back(r - nl);
    }
    for (auto& nbrs : hk.adj) std::sort(nbrs.begin(), nbrs.end());
    hk.run();
    match_l = std::move(hk.match_l);
    match_r = std::move(hk.match_r);
}

} // namespace detail

Matching maximum_matching_bipartite(const Graph& g) {
    std::vector<VertexId> match_l, match_r;
    detail::bipartite_match_arrays(g, match_l, match_r);
    const VertexId nl = g.bipartition()->left_count;
    std::vector<Edge> out;
    for (VertexId u = 0; u < nl; ++u)
        if (match_l[u] != kNone) out.push_back(Edge{u, match_l[u] + nl});
    return Matching(std::move(out));
}

namespace {

// Single-path blossom augmentation; standard contracted-forest search with a
// base[] array. Quadratic per augmentation, fine for the small general-graph
// instances this library sees.
struct Blossom {
    const std::vector<std::vector<VertexId>>& adj;
    VertexId n;
    std::vector<VertexId> match, parent, base;
    std::vector<bool> blossom_mark, used;

    explicit Blossom(const std::vector<std::vector<VertexId>>& a)
        : adj(a), n(static_cast<VertexId>(a.size())), match(n, kNone) {}

    VertexId lca(VertexId a, VertexId b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == kNone) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(VertexId v, VertexId b, VertexId child) {
        while (base[v] != b) {
            blossom_mark[base[v]] = true;
            blossom_mark[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    VertexId find_path(VertexId root) {
        used.assign(n, false);
        parent.assign(n, kNone);
        base.resize(n);
        for (VertexId i = 0; i < n; ++i) base[i] = i;

        used[root] = true;
        std::vector<VertexId> q{root};
        for (std::size_t qi = 0; qi < q.size(); ++qi) {
            VertexId v = q[qi];
            for (VertexId to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != kNone && parent[match[to]] != kNone)) {
                    // Odd cycle: contract the blossom.
                    VertexId cur_base = lca(v, to);
                    blossom_mark.assign(n, false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (VertexId i = 0; i < n; ++i) {
                        if (blossom_mark[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (parent[to] == kNone) {
                    parent[to] = v;
                    if (match[to] == kNone) return to; // augmenting path found
                    used[match[to]] = true;
                    q.push_back(match[to]);
                }
            }
        }
        return kNone;
    }

    void augment(VertexId v) {
        while (v != kNone) {
            VertexId pv = parent[v];
            VertexId ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    void run() {
        for (VertexId v = 0; v < n; ++v) {
            if (match[v] == kNone) {
                VertexId u = find_path(v);
                if (u != kNone) augment(u);
            }
        }
    }
};

} // namespace

Matching maximum_matching_general(const Graph& g) {
    auto adj = adjacency(g);
    Blossom bl(adj);
    bl.run();
    std::vector<Edge> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (bl.match[v] != kNone && v < bl.match[v]) out.push_back(Edge{v, bl.match[v]});
    return Matching(std::move(out));
}

namespace {

struct BruteMatch {
    const std::vector<Edge>& edges;
    std::vector<bool> used;
    std::size_t best = 0;
    std::uint32_t free_vertices;

    BruteMatch(const std::vector<Edge>& e, VertexId n)
        : edges(e), used(n, false), free_vertices(n) {}

    void rec(std::size_t idx, std::size_t cur) {
        best = std::max(best, cur);
        if (idx >= edges.size()) return;
        std::size_t remaining = edges.size() - idx;
        std::size_t cap = std::min<std::size_t>(remaining, free_vertices / 2);
        if (cur + cap <= best) return;
        const Edge& e = edges[idx];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            free_vertices -= 2;
            rec(idx + 1, cur + 1);
            free_vertices += 2;
            used[e.u] = used[e.v] = false;
        }
        rec(idx + 1, cur);
    }
};

} // namespace

std::size_t brute_force_max_matching(const Graph& g) {
    auto edges = simple_edges(g);
    if (edges.size() > 24)
        throw std::invalid_argument("brute_force_max_matching: more than 24 distinct edges");
    BruteMatch bm(edges, g.num_vertices());
    bm.rec(0, 0);
    return bm.best;
}

} // namespace coreset
