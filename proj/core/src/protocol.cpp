#include "coreset/protocol.hpp"

#include "coreset/coreset_matching.hpp"
#include "coreset/diagnostics.hpp"
#include "coreset/coreset_vc.hpp"
#include "coreset/partition.hpp"
#include "coreset/vertex_cover.hpp"

#include "json.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace coreset {

Scheme parse_scheme(const std::string& name) {
    if (name == "matching-coreset") return Scheme::MatchingCoreset;
    if (name == "matching-subsampled") return Scheme::MatchingSubsampled;
    if (name == "vc-coreset") return Scheme::VcCoreset;
    if (name == "vc-grouped") return Scheme::VcGrouped;
    throw std::invalid_argument("unknown scheme: " + name);
}

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::MatchingCoreset: return "matching-coreset";
        case Scheme::MatchingSubsampled: return "matching-subsampled";
        case Scheme::VcCoreset: return "vc-coreset";
        case Scheme::VcGrouped: return "vc-grouped";
    }
    return "?";
}

bool scheme_is_matching(Scheme s) {
    return s == Scheme::MatchingCoreset || s == Scheme::MatchingSubsampled;
}

Matching coordinator_merge_matching(const Universe& universe,
                                    const std::vector<Message>& messages) {
    std::vector<Matching> received;
    received.reserve(messages.size());
    for (const Message& m : messages) received.emplace_back(m.edges);
    return exact_merge(received, universe.num_vertices, universe.bipartition);
}

VertexSet coordinator_merge_vc(const Universe& universe, const std::vector<Message>& messages) {
    std::vector<Edge> residual_union;
    std::vector<VertexId> fixed;
    for (const Message& m : messages) {
        residual_union.insert(residual_union.end(), m.edges.begin(), m.edges.end());
        fixed.insert(fixed.end(), m.fixed_vertices.begin(), m.fixed_vertices.end());
    }
    Graph union_graph(universe.num_vertices, std::move(residual_union), universe.bipartition,
                      /*multigraph=*/true);
    VertexSet residual_cover = two_approx_vc(union_graph);
    fixed.insert(fixed.end(), residual_cover.ids().begin(), residual_cover.ids().end());
    return VertexSet(std::move(fixed));
}

namespace {

double param_or(const std::map<std::string, double>& params, const std::string& key,
                std::optional<double> fallback) {
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    if (fallback) return *fallback;
    throw std::invalid_argument("missing required protocol parameter: " + key);
}

void warn_small_solution(std::size_t size, std::uint32_t k, std::uint32_t n) {
    const double floor = 4.0 * k * std::log2(std::max<double>(n, 2));
    if (static_cast<double>(size) < floor)
        warn_once("solution size " + std::to_string(size) + " is below 4*k*log2(n)=" +
                  std::to_string(floor) + "; the omega(k log n) regime assumption fails");
}

} // namespace

ProtocolResult run_simultaneous(const Graph& g, std::uint32_t k, Scheme scheme,
                                const std::map<std::string, double>& params, RngSeed seed) {
    if (k == 0) throw std::invalid_argument("run_simultaneous: k must be >= 1");
    ProtocolResult result;
    result.scheme = scheme;
    result.k = k;
    result.seed = seed;

    const Universe universe = Universe::of(g);
    const std::uint32_t bpv = bits_per_vertex(g.num_vertices());

    switch (scheme) {
        case Scheme::MatchingCoreset: {
            Partition p = random_k_partition(g, k, seed);
            std::vector<Message> messages;
            messages.reserve(k);
            for (std::uint32_t i = 0; i < k; ++i) {
                Matching coreset = matching_coreset(p.shard(i));
                Message m;
                m.origin = i;
                m.edges.assign(coreset.edges().begin(), coreset.edges().end());
                messages.push_back(std::move(m));
            }
            result.solution = coordinator_merge_matching(universe, messages);
            result.ledger = CommLedger::account(messages, bpv);
            break;
        }
        case Scheme::MatchingSubsampled: {
            result.alpha = param_or(params, "alpha", std::nullopt);
            Partition p = random_k_partition(g, k, seed);
            SubsampledResult sub = subsampled_matching_protocol(p, result.alpha, seed);
            result.solution = std::move(sub.matching);
            result.ledger = std::move(sub.ledger);
            break;
        }
        case Scheme::VcCoreset: {
            Partition p = random_k_partition(g, k, seed);
            std::vector<Message> messages;
            messages.reserve(k);
            const std::uint32_t n = g.side_count();
            for (std::uint32_t i = 0; i < k; ++i) {
                VcCoreset c = vc_coreset(p.shard(i), n, k);
                Message m;
                m.origin = i;
                m.edges.assign(c.residual.edges().begin(), c.residual.edges().end());
                m.fixed_vertices.assign(c.fixed_solution.ids().begin(),
                                        c.fixed_solution.ids().end());
                messages.push_back(std::move(m));
            }
            VertexSet cover = coordinator_merge_vc(universe, messages);
            warn_small_solution(cover.size(), k, n);
            result.solution = std::move(cover);
            result.ledger = CommLedger::account(messages, bpv);
            break;
        }
        case Scheme::VcGrouped: {
            result.alpha = param_or(params, "alpha", std::nullopt);
            GroupedVcResult grouped = grouped_vc_protocol(g, k, result.alpha, seed);
            warn_small_solution(grouped.cover.size(), k, g.side_count());
            result.solution = std::move(grouped.cover);
            result.ledger = std::move(grouped.ledger);
            break;
        }
    }

    // Validate against the original graph before handing the result out.
    if (std::holds_alternative<Matching>(result.solution)) {
        if (!is_valid_matching(g, std::get<Matching>(result.solution)))
            throw std::runtime_error("run_simultaneous: merged matching is invalid");
    } else {
        if (!is_vertex_cover(g, std::get<VertexSet>(result.solution)))
            throw std::runtime_error("run_simultaneous: merged set is not a vertex cover");
    }
    return result;
}

std::string protocol_result_json(const ProtocolResult& r, bool valid,
                                 std::optional<std::size_t> optimum) {
    nlohmann::json j;
    j["scheme"] = scheme_name(r.scheme);
    j["k"] = r.k;
    j["seed"] = r.seed.master;
    j["alpha"] = r.alpha;
    j["solution_size"] = r.solution_size();
    j["per_machine_bits"] = r.ledger.per_machine_bits;
    j["total_bits"] = r.ledger.total_bits;
    j["bits_per_vertex"] = r.ledger.encoding_bits_per_vertex;
    j["valid"] = valid;
    if (optimum) {
        j["optimum"] = *optimum;
        const double opt = static_cast<double>(*optimum);
        const double sol = static_cast<double>(r.solution_size());
        double ratio = 0.0;
        if (scheme_is_matching(r.scheme))
            ratio = sol > 0 ? opt / sol : (opt > 0 ? std::numeric_limits<double>::infinity() : 1.0);
        else
            ratio = opt > 0 ? sol / opt : (sol > 0 ? std::numeric_limits<double>::infinity() : 1.0);
        j["ratio"] = ratio;
    }
    return j.dump(2) + "\n";
}

} // namespace coreset
