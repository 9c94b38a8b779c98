#pragma once

#include <vector>

#include "mdl/graph.hpp"

// Independent reference implementations used as test oracles. Everything here
// recomputes from first principles (Floyd-Warshall distances, definitional
// pair checks, subset enumeration) and deliberately avoids the library's
// solver and checker code paths.
namespace oracle {

inline constexpr int kUnreachable = -1;

// All-pairs distances by Floyd-Warshall.
std::vector<std::vector<int>> floyd_warshall(const mdl::Graph& g);

bool is_resolving(const std::vector<std::vector<int>>& d, const std::vector<int>& s);
bool is_strong_resolving(const std::vector<std::vector<int>>& d, const std::vector<int>& s);
bool is_doubly_resolving(const std::vector<std::vector<int>>& d, const std::vector<int>& set);

// Minimum set sizes by enumerating vertex subsets in ascending cardinality.
// Connected input only; intended for graphs with at most ~10 vertices.
int metric_dimension(const mdl::Graph& g);
int strong_dimension(const mdl::Graph& g);
int doubly_dimension(const mdl::Graph& g);

// Exhaustive over all 2^n vertex masks; n <= 20.
int independence_number(const mdl::Graph& g);
int vertex_cover_number(const mdl::Graph& g);

}  // namespace oracle
