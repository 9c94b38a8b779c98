#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

namespace mdl {

enum class SolveStatus {
    Optimal,         // exhaustive search completed
    UpperBoundOnly,  // node budget exhausted; value is the best bound found
};

// Default branch-node budget for all exact solvers; overridable per call and
// via the CLI `--budget` flag / MDL_BUDGET environment variable.
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SolveResult {
    int value = 0;
    std::vector<int> certificate;  // vertex ids, ascending
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    SolveStatus status = SolveStatus::Optimal;
};

}  // namespace mdl
