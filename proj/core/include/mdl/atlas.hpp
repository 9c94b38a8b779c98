#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdl/families.hpp"

namespace mdl {

struct AtlasCsvError : std::runtime_error {
    AtlasCsvError(int line, const std::string& what)
        : std::runtime_error("atlas csv, line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

enum class AtlasInvariant { Beta, BetaS, Diam, Psi };
enum class AtlasStatus { Optimal, UpperBoundOnly, Formula };

std::string to_string(AtlasInvariant inv);
std::string to_string(AtlasStatus status);
AtlasInvariant atlas_invariant_from_string(const std::string& s);
AtlasStatus atlas_status_from_string(const std::string& s);

// One computed value per (family, n, k, invariant). `Formula` rows carry
// closed-form values; solver rows carry Optimal or UpperBoundOnly.
struct AtlasRow {
    Family family = Family::Johnson;
    int n = 0;
    int k = 0;
    long long vertices = 0;
    long long edges = 0;
    AtlasInvariant invariant = AtlasInvariant::Beta;
    long long value = 0;
    AtlasStatus status = AtlasStatus::Optimal;
    long long elapsed_ms = 0;

    bool operator==(const AtlasRow&) const = default;
};

inline constexpr const char* kAtlasCsvHeader =
    "family,n,k,vertices,edges,invariant,value,status,elapsed_ms";

// Writes the header plus one row per entry, sorted by (family, n, k,
// invariant).
void write_atlas_csv(std::ostream& out, std::vector<AtlasRow> rows);

std::vector<AtlasRow> read_atlas_csv(std::istream& in);

}  // namespace mdl
