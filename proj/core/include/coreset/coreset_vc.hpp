#pragma once

#include "coreset/graph.hpp"
#include "coreset/message.hpp"
#include "coreset/partition.hpp"
#include "coreset/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace coreset {

// Exact threshold num/den, compared against integer degrees by
// cross-multiplication. The peeling is sensitive to exact degrees, so no
// floating point enters these comparisons.
struct Threshold {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    bool met_by(std::uint64_t degree) const { // degree >= num/den
        return static_cast<unsigned __int128>(degree) * den >= num;
    }
};

struct PeelingTrace {
    std::uint32_t delta = 0;            // number of rounds is delta - 1
    std::vector<VertexSet> levels;      // peeled set per round j = 1..delta-1
    std::vector<Threshold> thresholds;  // n / (k * 2^(j+1)) per round
};

// A shard's coreset: vertices peeled into the fixed partial cover, plus the
// sparse residual subgraph whose cover completes the solution.
struct VcCoreset {
    VertexSet fixed_solution;
    Graph residual;
    PeelingTrace trace;
};

// Iterative peeling with geometrically decreasing degree thresholds.
// delta is the smallest integer with n / (k * 2^delta) <= 4*log2(n); rounds
// j = 1..delta-1 peel every vertex whose degree in the current residual is
// >= n / (k * 2^(j+1)), all at once, then recompute degrees.
// n is the per-side vertex count of the source graph.
VcCoreset vc_coreset(const Graph& shard, std::uint32_t n, std::uint32_t k);

std::uint32_t vc_coreset_delta(std::uint32_t n, std::uint32_t k);

// Union of fixed solutions plus a 2-approximate cover of the union of
// residual graphs. Valid for the original graph: every original edge is
// either incident on a peeled vertex or present in some residual.
VertexSet merge_vc(std::span<const VcCoreset> coresets);

// Analysis-only peeling on the whole graph, parameterized by an optimal
// cover: thresholds n/2^j inside the cover and n/2^(j+2) outside, over
// t = ceil(log2 n) rounds, after dropping edges inside the cover.
// Used as the oracle side of the sandwich property.
struct HypotheticalTrace {
    std::uint32_t t = 0;
    std::vector<VertexSet> o_levels;    // inside opt, per round
    std::vector<VertexSet> obar_levels; // outside opt, per round
    std::vector<Graph> residuals;      // G_1 .. G_(t+1)
};

HypotheticalTrace hypothetical_peeling(const Graph& g, const VertexSet& opt);

// Sandwich property: for every prefix t in [delta], the peeled vertices
// inside opt contain the hypothetical inside-levels, and the peeled vertices
// outside opt are contained in the hypothetical outside-levels.
bool sandwich_check(const PeelingTrace& shard_trace, const HypotheticalTrace& hyp,
                    const VertexSet& opt);

struct GroupedVcResult {
    VertexSet cover;
    CommLedger ledger;
    std::uint32_t group_size = 1;
    std::uint32_t quotient_side = 0;
};

// Vertex-grouping protocol: contract contiguous id blocks of size
// max(1, floor(alpha / log2 n)) per side into super-vertices (keeping
// parallel edges), run the full partition -> peel -> merge pipeline on the
// quotient multigraph, then expand every chosen super-vertex to its members.
GroupedVcResult grouped_vc_protocol(const Graph& g, std::uint32_t k, double alpha, RngSeed seed);

} // namespace coreset
