#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mdl/bitset.hpp"
#include "mdl/graph.hpp"
#include "mdl/solve.hpp"

namespace mdl {

// --- Definitional checkers -------------------------------------------------

// True iff every vertex pair u != v has some w in S with d(u,w) != d(v,w).
// Requires a connected graph.
bool is_resolving_set(const DistanceMatrix& dm, const std::vector<int>& s);

// True iff u lies on a shortest v-w path or v lies on a shortest u-w path:
// d(u,w) = d(u,v) + d(v,w) or d(v,w) = d(v,u) + d(u,w).
bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v);

// True iff every vertex pair is strongly resolved by some member of S.
bool is_strong_resolving_set(const DistanceMatrix& dm, const std::vector<int>& s);

// True iff d(u,x) - d(u,y) != d(v,x) - d(v,y).
bool doubly_resolves(const DistanceMatrix& dm, int x, int y, int u, int v);

// True iff every vertex pair is doubly resolved by two members of D.
// Requires |D| >= 2.
bool is_doubly_resolving_set(const DistanceMatrix& dm, const std::vector<int>& d);

// --- Cover-constraint view --------------------------------------------------

enum class CoverMode { Strong, Doubly };

// Ground items are the unordered vertex pairs in colex order. In Strong mode
// a coverer id is a vertex; in Doubly mode it is the colex pair_rank of the
// two covering vertices.
struct ConstraintSystem {
    CoverMode mode = CoverMode::Strong;
    std::vector<std::pair<int, int>> items;
    std::vector<std::vector<int>> coverers;  // parallel to items
};

ConstraintSystem build_constraint_system(const DistanceMatrix& dm, CoverMode mode);

// --- Exact solvers -----------------------------------------------------------

// Generic minimum set cover / hitting set by iterative deepening over the
// cover size: `coverage[c]` is the item set covered by candidate c. The
// certificate is the first optimum in the deterministic search order
// (most-constrained item, candidates ascending). Used directly for the metric
// dimension and for the definition-level strong-dimension cross check.
SolveResult solve_set_cover(const std::vector<Bitset>& coverage, int n_items,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// beta(G): minimum resolving set size plus certificate. Connected input only.
SolveResult metric_dimension_exact(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// psi(G): minimum doubly resolving set size plus certificate. Connected input
// with at least two vertices; searches vertex sets directly with beta(G) as
// the starting lower bound.
SolveResult doubly_metric_dimension_exact(const Graph& g,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace mdl
