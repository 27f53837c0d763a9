#pragma once

#include "coreset/graph.hpp"

namespace coreset {

// True iff every edge of g has at least one endpoint in s.
bool is_vertex_cover(const Graph& g, const VertexSet& s);

// Endpoints of a maximal matching in container order; at most 2 * VC(g).
VertexSet two_approx_vc(const Graph& g);

// Minimum vertex cover of a bipartite graph via König duality: alternating
// reachability Z from unmatched left vertices, cover = (L \ Z) U (R & Z).
VertexSet exact_vc_bipartite(const Graph& g);

// Exact minimum cover size by branch-and-bound on uncovered edges.
// Requires at most 24 vertices.
std::size_t brute_force_vc(const Graph& g);

} // namespace coreset
