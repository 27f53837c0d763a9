#include "coreset/coreset_vc.hpp"

#include "coreset/vertex_cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coreset {

namespace {

// k * 2^pow, saturating. A saturated denominator means the threshold is below
// one, which every positive degree meets.
std::uint64_t pow2_times(std::uint64_t k, std::uint32_t pow) {
    if (pow >= 64 || k > (std::uint64_t{1} << (63 - std::min(pow, 63u))))
        return std::numeric_limits<std::uint64_t>::max();
    return k << pow;
}

} // namespace

std::uint32_t vc_coreset_delta(std::uint32_t n, std::uint32_t k) {
    const double target = 4.0 * std::log2(static_cast<double>(std::max<std::uint32_t>(n, 1)));
    if (target <= 0.0) return 0; // n == 1: nothing to peel
    std::uint32_t delta = 0;
    // n / (k * 2^delta) is a dyadic rational, exact in double at these scales.
    while (static_cast<double>(n) / (static_cast<double>(k) * std::exp2(delta)) > target)
        ++delta;
    return delta;
}

VcCoreset vc_coreset(const Graph& shard, std::uint32_t n, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("vc_coreset: k must be >= 1");

    VcCoreset out;
    out.trace.delta = vc_coreset_delta(n, k);

    // Residual edges of G^(i)_j; degrees are recomputed against this shrinking
    // list each round, never against the original shard.
    std::vector<Edge> residual(shard.edges().begin(), shard.edges().end());
    std::vector<bool> removed(shard.num_vertices(), false);
    std::vector<std::uint32_t> deg(shard.num_vertices(), 0);
    std::vector<VertexId> fixed;

    // Rounds run for j = 1..delta-1; delta <= 1 peels nothing.
    for (std::uint32_t j = 1; out.trace.delta >= 1 && j <= out.trace.delta - 1; ++j) {
        Threshold th{n, pow2_times(k, j + 1)};
        std::fill(deg.begin(), deg.end(), 0);
        for (const Edge& e : residual) {
            ++deg[e.u];
            ++deg[e.v];
        }
        // The whole level is selected against these degrees, then removed at once.
        std::vector<VertexId> level;
        for (VertexId v = 0; v < shard.num_vertices(); ++v)
            if (!removed[v] && deg[v] > 0 && th.met_by(deg[v])) level.push_back(v);
        for (VertexId v : level) removed[v] = true;
        std::erase_if(residual, [&](const Edge& e) { return removed[e.u] || removed[e.v]; });
        fixed.insert(fixed.end(), level.begin(), level.end());
        out.trace.levels.emplace_back(std::move(level));
        out.trace.thresholds.push_back(th);
    }

    out.fixed_solution = VertexSet(std::move(fixed));
    out.residual = Graph(shard.num_vertices(), std::move(residual), shard.bipartition(),
                         shard.is_multigraph());
    return out;
}

VertexSet merge_vc(std::span<const VcCoreset> coresets) {
    if (coresets.empty()) return VertexSet();
    const Graph& first = coresets.front().residual;
    std::vector<Edge> residual_union;
    std::vector<VertexId> fixed;
    for (const VcCoreset& c : coresets) {
        if (c.residual.num_vertices() != first.num_vertices() ||
            c.residual.bipartition() != first.bipartition())
            throw std::invalid_argument("merge_vc: coresets over mismatched vertex universes");
        residual_union.insert(residual_union.end(), c.residual.edges().begin(),
                              c.residual.edges().end());
        fixed.insert(fixed.end(), c.fixed_solution.ids().begin(), c.fixed_solution.ids().end());
    }
    Graph union_graph(first.num_vertices(), std::move(residual_union), first.bipartition(),
                      /*multigraph=*/true);
    VertexSet residual_cover = two_approx_vc(union_graph);
    fixed.insert(fixed.end(), residual_cover.ids().begin(), residual_cover.ids().end());
    return VertexSet(std::move(fixed));
}

HypotheticalTrace hypothetical_peeling(const Graph& g, const VertexSet& opt) {
    if (!is_vertex_cover(g, opt))
        throw std::invalid_argument("hypothetical_peeling: opt is not a vertex cover");

    const std::uint32_t n = g.side_count();
    HypotheticalTrace out;
    out.t = n > 1 ? static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(n)))) : 0;

    std::vector<bool> in_opt(g.num_vertices(), false);
    for (VertexId v : opt.ids()) in_opt[v] = true;

    // G_1: drop edges between cover vertices.
    std::vector<Edge> cur_edges;
    for (const Edge& e : g.edges())
        if (!(in_opt[e.u] && in_opt[e.v])) cur_edges.push_back(e);

    std::vector<bool> removed(g.num_vertices(), false);
    out.residuals.push_back(Graph(g.num_vertices(), cur_edges, g.bipartition(), g.is_multigraph()));

    for (std::uint32_t j = 1; j <= out.t; ++j) {
        std::vector<std::uint32_t> deg(g.num_vertices(), 0);
        for (const Edge& e : cur_edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        Threshold inside{n, std::uint64_t{1} << std::min(j, 62u)};
        Threshold outside{n, std::uint64_t{1} << std::min(j + 2, 62u)};
        std::vector<VertexId> o_level, obar_level;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (removed[v] || deg[v] == 0) continue;
            if (in_opt[v] && inside.met_by(deg[v])) o_level.push_back(v);
            if (!in_opt[v] && outside.met_by(deg[v])) obar_level.push_back(v);
        }
        for (VertexId v : o_level) removed[v] = true;
        for (VertexId v : obar_level) removed[v] = true;
        std::vector<Edge> next_edges;
        for (const Edge& e : cur_edges)
            if (!removed[e.u] && !removed[e.v]) next_edges.push_back(e);
        cur_edges = std::move(next_edges);
        out.o_levels.emplace_back(std::move(o_level));
        out.obar_levels.emplace_back(std::move(obar_level));
        out.residuals.push_back(Graph(g.num_vertices(), cur_edges, g.bipartition(), g.is_multigraph()));
    }
    return out;
}

bool sandwich_check(const PeelingTrace& shard_trace, const HypotheticalTrace& hyp,
                    const VertexSet& opt) {
    VertexSet a_union, b_union, o_union, obar_union;
    const std::size_t rounds = shard_trace.delta;
    for (std::size_t t = 1; t <= rounds; ++t) {
        if (t - 1 < shard_trace.levels.size()) {
            for (VertexId v : shard_trace.levels[t - 1].ids()) {
                if (opt.contains(v))
                    a_union.insert(v);
                else
                    b_union.insert(v);
            }
        }
        if (t - 1 < hyp.o_levels.size()) {
            for (VertexId v : hyp.o_levels[t - 1].ids()) o_union.insert(v);
            for (VertexId v : hyp.obar_levels[t - 1].ids()) obar_union.insert(v);
        }
        // Prefix containments: A >= O and B <= Obar.
        for (VertexId v : o_union.ids())
            if (!a_union.contains(v)) return false;
        for (VertexId v : b_union.ids())
            if (!obar_union.contains(v)) return false;
    }
    return true;
}

GroupedVcResult grouped_vc_protocol(const Graph& g, std::uint32_t k, double alpha, RngSeed seed) {
    if (!g.is_bipartite())
        throw std::invalid_argument("grouped_vc_protocol: graph must be bipartite");
    const VertexId nl = g.bipartition()->left_count;
    const VertexId nr = g.bipartition()->right_count;
    const std::uint32_t n = std::max(nl, nr);

    const double log_n = n > 1 ? std::log2(static_cast<double>(n)) : 1.0;
    std::uint32_t group = static_cast<std::uint32_t>(alpha / log_n);
    group = std::clamp<std::uint32_t>(group, 1, std::max<VertexId>(n, 1));

    const VertexId ql = (nl + group - 1) / group;
    const VertexId qr = (nr + group - 1) / group;

    // Quotient multigraph: v -> floor(v / group) within its side; parallel
    // edges kept. Grouping is by vertex id, so every machine derives the same
    // mapping with no communication.
    std::vector<Edge> quotient_edges;
    quotient_edges.reserve(g.num_edges());
    for (const Edge& e : g.edges()) {
        VertexId l = e.u < nl ? e.u : e.v;
        VertexId r = e.u < nl ? e.v : e.u;
        quotient_edges.push_back(Edge{l / group, ql + (r - nl) / group});
    }
    Graph quotient(ql + qr, std::move(quotient_edges), Bipartition{ql, qr}, /*multigraph=*/true);

    const std::uint32_t n_quot = std::max(ql, qr);
    Partition part = random_k_partition(quotient, k, seed);
    std::vector<VcCoreset> coresets;
    std::vector<Message> messages;
    coresets.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        coresets.push_back(vc_coreset(part.shard(i), n_quot, k));
        Message msg;
        msg.origin = i;
        msg.edges.assign(coresets.back().residual.edges().begin(),
                         coresets.back().residual.edges().end());
        msg.fixed_vertices.assign(coresets.back().fixed_solution.ids().begin(),
                                  coresets.back().fixed_solution.ids().end());
        messages.push_back(std::move(msg));
    }
    VertexSet quotient_cover = merge_vc(coresets);

    // Expand each chosen super-vertex to its id block.
    std::vector<VertexId> expanded;
    for (VertexId q : quotient_cover.ids()) {
        if (q < ql) {
            for (VertexId v = q * group; v < std::min<VertexId>((q + 1) * group, nl); ++v)
                expanded.push_back(v);
        } else {
            VertexId base = (q - ql) * group;
            for (VertexId v = base; v < std::min<VertexId>(base + group, nr); ++v)
                expanded.push_back(nl + v);
        }
    }

    GroupedVcResult result;
    result.cover = VertexSet(std::move(expanded));
    result.ledger = CommLedger::account(messages, bits_per_vertex(quotient.num_vertices()));
    result.group_size = group;
    result.quotient_side = n_quot;
    if (!is_vertex_cover(g, result.cover))
        throw std::runtime_error("grouped_vc_protocol: expanded set fails to cover the graph");
    return result;
}

} // namespace coreset
