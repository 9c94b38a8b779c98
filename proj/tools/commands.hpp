#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mdl::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitVerifyFail = 3;

struct Range {
    int lo = 0;
    int hi = 0;
    bool empty() const { return lo > hi; }
};

// Accepts "a" or "a..b".
Range parse_range(const std::string& text);

int cmd_gen(const std::string& source, const std::string& format, const std::string& output);

int cmd_invariant(const std::string& which, const std::string& source, std::uint64_t budget);

int cmd_verify(const std::string& theorem, std::optional<Range> n_range,
               std::optional<Range> k_range, std::uint64_t budget);

int cmd_export_lp(const std::string& source, const std::string& mode, std::string output);

int cmd_atlas(const std::string& family, Range n_range, Range k_range,
              const std::string& invariants, const std::string& format, const std::string& output,
              std::uint64_t budget);

// Known theorem ids for `verify`, in display order.
const std::vector<std::string>& verify_ids();

}  // namespace mdl::cli
