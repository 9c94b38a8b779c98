#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mdl/graph.hpp"
#include "mdl/solve.hpp"

namespace mdl {

// Unordered pairs (u,v), u < v, where no neighbor of either endpoint is
// farther from the other endpoint than d(u,v). Connected input only.
std::vector<std::pair<int, int>> mmd_pairs(const Graph& g, const DistanceMatrix& dm);

// The base graph together with its strong resolving graph: same vertex set
// (labels included), edges exactly the mutually-maximally-distant pairs.
struct MmdGraph {
    Graph base;
    Graph sr;
};

MmdGraph strong_resolving_graph(const Graph& g);

// ind(G) by exact branch and bound (maximum clique on the complement with a
// greedy coloring bound). Disconnected input allowed. On budget exhaustion
// the value is the best independent set found, i.e. a lower bound on ind(G).
SolveResult max_independent_set(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// vc(G) = |V| - ind(G); the certificate is the complement of a maximum
// independent set, so isolated vertices never enter the cover.
SolveResult min_vertex_cover(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// beta_S(G) as the minimum vertex cover of the strong resolving graph. The
// certificate is re-verified against the strong-resolving definition on G.
SolveResult strong_metric_dimension_exact(const Graph& g,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

// True iff the cover pipeline above agrees with a direct minimum search over
// the strong-resolution constraint system. Guarded to <= 12 vertices.
bool cross_check_strong(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace mdl
