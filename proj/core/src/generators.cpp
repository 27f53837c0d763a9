#include "coreset/generators.hpp"

#include "coreset/diagnostics.hpp"
#include "coreset/matching.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace coreset {

namespace {

void warn(const std::string& msg) { warn_once(msg); }

void check_regime(std::uint32_t n, double alpha, std::uint32_t k) {
    const double log_n = std::log2(std::max<double>(n, 2));
    if (alpha < log_n)
        warn("alpha=" + std::to_string(alpha) + " is below log2(n)=" + std::to_string(log_n) +
             "; hard-instance regime assumption fails");
    const double cap = std::min(static_cast<double>(n) / k, static_cast<double>(k));
    if (alpha >= cap)
        warn("alpha=" + std::to_string(alpha) + " is not o(min(n/k, k))=" + std::to_string(cap) +
             "; hard-instance regime assumption fails");
}

// Bernoulli(p) subset of the pairs (i, j) in [rows] x [cols], encoded as
// counter = i * cols + j. Dense scan; callers keep rows * cols modest.
template <typename Emit>
void bernoulli_pairs(std::uint64_t rows, std::uint64_t cols, double p, const StreamRng& stream,
                     Emit&& emit) {
    for (std::uint64_t i = 0; i < rows; ++i)
        for (std::uint64_t j = 0; j < cols; ++j)
            if (stream.bernoulli_at(i * cols + j, p)) emit(i, j);
}

} // namespace

HardMatchingInstance gen_hard_matching(std::uint32_t n, double alpha, std::uint32_t k,
                                       RngSeed seed) {
    const std::uint32_t s = static_cast<std::uint32_t>(n / alpha);
    if (s < 1) throw std::invalid_argument("gen_hard_matching: floor(n/alpha) < 1");
    check_regime(n, alpha, k);

    StreamRng a_stream(seed, "hard-matching/A");
    StreamRng b_stream(seed, "hard-matching/B");
    std::vector<std::uint32_t> a_ids = sample_without_replacement(n, s, a_stream);
    std::vector<std::uint32_t> b_ids = sample_without_replacement(n, s, b_stream);

    HardMatchingInstance inst;
    inst.n = n;
    inst.alpha = alpha;
    inst.k = k;
    inst.a = VertexSet(a_ids);
    {
        std::vector<VertexId> b_global(b_ids.begin(), b_ids.end());
        for (VertexId& v : b_global) v += n;
        inst.b = VertexSet(std::move(b_global));
    }

    // E_AB: each pair of A x B independently with probability k * alpha / n.
    double p = static_cast<double>(k) * alpha / n;
    if (p > 1.0) {
        warn("gen_hard_matching: k*alpha/n > 1, clamping edge probability to 1");
        p = 1.0;
    }
    std::vector<VertexId> a_sorted(inst.a.ids().begin(), inst.a.ids().end());
    std::vector<VertexId> b_sorted(inst.b.ids().begin(), inst.b.ids().end());
    StreamRng eab_stream(seed, "hard-matching/eab");
    std::vector<Edge> edges;
    bernoulli_pairs(s, s, p, eab_stream, [&](std::uint64_t i, std::uint64_t j) {
        edges.push_back(Edge{a_sorted[i], b_sorted[j]});
    });
    inst.e_ab = edges;

    // Planted perfect matching between complements, paired by a random
    // permutation from the "planted" stream.
    std::vector<VertexId> l_rest, r_rest;
    l_rest.reserve(n - s);
    r_rest.reserve(n - s);
    for (VertexId v = 0; v < n; ++v)
        if (!inst.a.contains(v)) l_rest.push_back(v);
    for (VertexId v = n; v < 2 * n; ++v)
        if (!inst.b.contains(v)) r_rest.push_back(v);
    StreamRng planted_stream(seed, "hard-matching/planted");
    std::vector<std::uint32_t> perm =
        random_permutation(static_cast<std::uint32_t>(r_rest.size()), planted_stream);
    std::vector<Edge> planted;
    planted.reserve(l_rest.size());
    for (std::size_t i = 0; i < l_rest.size(); ++i)
        planted.push_back(Edge{l_rest[i], r_rest[perm[i]]});
    inst.planted = Matching(planted);
    edges.insert(edges.end(), planted.begin(), planted.end());

    inst.graph = Graph(2 * n, std::move(edges), Bipartition{n, n});
    return inst;
}

HardVcInstance gen_hard_vc(std::uint32_t n, double alpha, std::uint32_t k, RngSeed seed) {
    const std::uint32_t s = static_cast<std::uint32_t>(n / alpha);
    if (s < 1) throw std::invalid_argument("gen_hard_vc: floor(n/alpha) < 1");
    check_regime(n, alpha, k);

    StreamRng a_stream(seed, "hard-vc/A");
    std::vector<std::uint32_t> a_ids = sample_without_replacement(n, s, a_stream);

    HardVcInstance inst;
    inst.n = n;
    inst.alpha = alpha;
    inst.k = k;
    inst.a = VertexSet(a_ids);

    double p = static_cast<double>(k) / (2.0 * n);
    if (p > 1.0) p = 1.0;
    std::vector<VertexId> a_sorted(inst.a.ids().begin(), inst.a.ids().end());
    StreamRng ea_stream(seed, "hard-vc/ea");
    std::vector<Edge> edges;
    bernoulli_pairs(s, n, p, ea_stream, [&](std::uint64_t i, std::uint64_t j) {
        edges.push_back(Edge{a_sorted[i], static_cast<VertexId>(n + j)});
    });

    // v* uniform over L \ A; e* = (v*, r) with r uniform over R. v* has no
    // other incident edge, so e* is a uniform edge at v*.
    StreamRng star_stream(seed, "hard-vc/star");
    std::vector<VertexId> l_rest;
    l_rest.reserve(n - s);
    for (VertexId v = 0; v < n; ++v)
        if (!inst.a.contains(v)) l_rest.push_back(v);
    if (l_rest.empty()) throw std::invalid_argument("gen_hard_vc: L \\ A is empty");
    inst.v_star = l_rest[star_stream.next_below(l_rest.size())];
    inst.e_star = Edge{inst.v_star, static_cast<VertexId>(n + star_stream.next_below(n))};
    edges.push_back(inst.e_star);

    inst.graph = Graph(2 * n, std::move(edges), Bipartition{n, n});
    return inst;
}

Graph gen_random_bipartite(std::uint32_t n, double p, RngSeed seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_random_bipartite: p outside [0, 1]");
    std::vector<Edge> edges;
    StreamRng stream(seed, "gnp");
    const std::uint64_t total = static_cast<std::uint64_t>(n) * n;
    if (p >= 1.0) {
        edges.reserve(total);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = 0; v < n; ++v) edges.push_back(Edge{u, n + v});
    } else if (p > 0.0) {
        // Geometric skips over the linearized pair index: equivalent in
        // distribution to n^2 independent Bernoulli draws, O(edges) draws.
        const double log1mp = std::log1p(-p);
        double cursor = -1.0;
        for (;;) {
            double u = stream.next_unit();
            if (u <= 0.0) u = 0x1.0p-53;
            double skip = std::floor(std::log(u) / log1mp);
            cursor += 1.0 + skip;
            if (cursor >= static_cast<double>(total)) break;
            const std::uint64_t idx = static_cast<std::uint64_t>(cursor);
            edges.push_back(Edge{static_cast<VertexId>(idx / n),
                                 static_cast<VertexId>(n + idx % n)});
        }
    }
    return Graph(2 * n, std::move(edges), Bipartition{n, n});
}

Graph gen_maximal_trap(std::uint32_t n, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("gen_maximal_trap: k must be >= 1");
    if (n % k != 0) throw std::invalid_argument("gen_maximal_trap: k must divide n");
    const std::uint32_t hubs = n / k;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * hubs + n);
    // Complete bipartite block to the hubs; planted edges (l_i, r_i) for
    // i < hubs already appear in it.
    for (VertexId l = 0; l < n; ++l)
        for (VertexId h = 0; h < hubs; ++h) edges.push_back(Edge{l, n + h});
    for (VertexId i = hubs; i < n; ++i) edges.push_back(Edge{i, n + i});
    return Graph(2 * n, std::move(edges), Bipartition{n, n});
}

std::vector<std::size_t> trap_hub_first_order(const Graph& shard, std::uint32_t hub_count) {
    if (!shard.is_bipartite())
        throw std::invalid_argument("trap_hub_first_order: shard not bipartite");
    const VertexId n = shard.bipartition()->left_count;
    const VertexId hub_end = n + hub_count;

    std::vector<std::size_t> hub_idx, planted_idx;
    std::vector<VertexId> planted_lefts;
    for (std::size_t i = 0; i < shard.num_edges(); ++i) {
        const Edge& e = shard.edge(i);
        VertexId l = e.u < n ? e.u : e.v;
        VertexId r = e.u < n ? e.v : e.u;
        if (r < hub_end) {
            hub_idx.push_back(i);
        } else {
            planted_idx.push_back(i);
            planted_lefts.push_back(l);
        }
    }

    // Maximum matching between the shard's planted left endpoints and the
    // hubs, over the shard's hub edges.
    std::vector<VertexId> left_local(shard.num_vertices(),
                                     std::numeric_limits<VertexId>::max());
    for (std::size_t i = 0; i < planted_lefts.size(); ++i)
        left_local[planted_lefts[i]] = static_cast<VertexId>(i);
    const VertexId np = static_cast<VertexId>(planted_lefts.size());
    std::vector<Edge> local_edges;
    std::vector<std::size_t> local_to_shard;
    for (std::size_t i : hub_idx) {
        const Edge& e = shard.edge(i);
        VertexId l = e.u < n ? e.u : e.v;
        VertexId r = e.u < n ? e.v : e.u;
        if (left_local[l] != std::numeric_limits<VertexId>::max()) {
            local_edges.push_back(Edge{left_local[l], static_cast<VertexId>(np + (r - n))});
            local_to_shard.push_back(i);
        }
    }
    Graph local(np + hub_count, local_edges, Bipartition{np, hub_count});
    Matching assignment = maximum_matching_bipartite(local);

    std::vector<bool> is_assigned(shard.num_edges(), false);
    std::vector<std::size_t> order;
    order.reserve(shard.num_edges());
    for (const Edge& e : assignment.edges()) {
        // Map the local edge back to its shard index.
        for (std::size_t j = 0; j < local_edges.size(); ++j) {
            if (local_edges[j] == e && !is_assigned[local_to_shard[j]]) {
                is_assigned[local_to_shard[j]] = true;
                order.push_back(local_to_shard[j]);
                break;
            }
        }
    }
    for (std::size_t i : hub_idx)
        if (!is_assigned[i]) order.push_back(i);
    for (std::size_t i : planted_idx) order.push_back(i);
    return order;
}

DegreeOneStats degree_one_stats(const Graph& g) {
    if (!g.is_bipartite()) throw std::invalid_argument("degree_one_stats: graph not bipartite");
    const VertexId nl = g.bipartition()->left_count;

    DegreeOneStats stats;
    std::vector<VertexId> l1;
    for (VertexId v = 0; v < nl; ++v)
        if (g.degree(v) == 1) l1.push_back(v);
    stats.l1 = VertexSet(std::move(l1));
    stats.s_size = stats.l1.size();

    std::vector<VertexId> r1;
    std::vector<bool> touched_by_rest(g.num_vertices() - nl, false);
    for (const Edge& e : g.edges()) {
        VertexId l = e.u < nl ? e.u : e.v;
        VertexId r = e.u < nl ? e.v : e.u;
        if (stats.l1.contains(l))
            r1.push_back(r);
        else
            touched_by_rest[r - nl] = true;
    }
    stats.r1 = VertexSet(std::move(r1));
    stats.t_size = 0;
    for (bool t : touched_by_rest)
        if (!t) ++stats.t_size;
    return stats;
}

std::string hard_matching_metadata(const HardMatchingInstance& inst, RngSeed seed) {
    nlohmann::json j;
    j["generator"] = "hard-matching";
    j["n"] = inst.n;
    j["alpha"] = inst.alpha;
    j["k"] = inst.k;
    j["seed"] = seed.master;
    j["A"] = std::vector<VertexId>(inst.a.ids().begin(), inst.a.ids().end());
    j["B"] = std::vector<VertexId>(inst.b.ids().begin(), inst.b.ids().end());
    auto planted = nlohmann::json::array();
    for (const Edge& e : inst.planted.edges()) planted.push_back({e.u, e.v});
    j["planted"] = std::move(planted);
    return j.dump(2) + "\n";
}

std::string hard_vc_metadata(const HardVcInstance& inst, RngSeed seed) {
    nlohmann::json j;
    j["generator"] = "hard-vc";
    j["n"] = inst.n;
    j["alpha"] = inst.alpha;
    j["k"] = inst.k;
    j["seed"] = seed.master;
    j["A"] = std::vector<VertexId>(inst.a.ids().begin(), inst.a.ids().end());
    j["v_star"] = inst.v_star;
    j["e_star"] = {inst.e_star.u, inst.e_star.v};
    return j.dump(2) + "\n";
}

} // namespace coreset
