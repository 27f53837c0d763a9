#pragma once

#include "coreset/graph.hpp"
#include "coreset/message.hpp"
#include "coreset/rng.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace coreset {

enum class Scheme {
    MatchingCoreset,
    MatchingSubsampled,
    VcCoreset,
    VcGrouped,
};

Scheme parse_scheme(const std::string& name);
std::string scheme_name(Scheme s);
bool scheme_is_matching(Scheme s);

struct ProtocolResult {
    std::variant<Matching, VertexSet> solution;
    CommLedger ledger;
    Scheme scheme = Scheme::MatchingCoreset;
    std::uint32_t k = 1;
    RngSeed seed;
    double alpha = 1.0;

    std::size_t solution_size() const {
        return std::holds_alternative<Matching>(solution)
                   ? std::get<Matching>(solution).size()
                   : std::get<VertexSet>(solution).size();
    }
};

// Coordinator sides of the protocols. These read only the messages and the
// public vertex universe, never the shard graphs; run_simultaneous is wired
// so no other shard data can reach them.
Matching coordinator_merge_matching(const Universe& universe,
                                    const std::vector<Message>& messages);
VertexSet coordinator_merge_vc(const Universe& universe, const std::vector<Message>& messages);

// One round of the simultaneous model: random k-partition, per-machine
// summary, one message per machine, coordinator merge. The returned solution
// is validated against g before returning. params carries "alpha" for the
// subsampled and grouped schemes.
ProtocolResult run_simultaneous(const Graph& g, std::uint32_t k, Scheme scheme,
                                const std::map<std::string, double>& params, RngSeed seed);

// JSON report of one protocol run; optimum/ratio included when an oracle
// value is supplied.
std::string protocol_result_json(const ProtocolResult& r, bool valid,
                                 std::optional<std::size_t> optimum);

} // namespace coreset
