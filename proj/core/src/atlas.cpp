#include "mdl/atlas.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace mdl {
namespace {

long long parse_ll(const std::string& field, int line, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(field, &pos);
        if (pos != field.size()) throw std::invalid_argument(field);
        return v;
    } catch (const std::exception&) {
        throw AtlasCsvError(line, std::string("bad ") + what + " `" + field + "`");
    }
}

}  // namespace

std::string to_string(AtlasInvariant inv) {
    switch (inv) {
        case AtlasInvariant::Beta: return "beta";
        case AtlasInvariant::BetaS: return "beta_s";
        case AtlasInvariant::Diam: return "diam";
        case AtlasInvariant::Psi: return "psi";
    }
    return "?";
}

std::string to_string(AtlasStatus status) {
    switch (status) {
        case AtlasStatus::Optimal: return "Optimal";
        case AtlasStatus::UpperBoundOnly: return "UpperBoundOnly";
        case AtlasStatus::Formula: return "Formula";
    }
    return "?";
}

AtlasInvariant atlas_invariant_from_string(const std::string& s) {
    if (s == "beta") return AtlasInvariant::Beta;
    if (s == "beta_s") return AtlasInvariant::BetaS;
    if (s == "diam") return AtlasInvariant::Diam;
    if (s == "psi") return AtlasInvariant::Psi;
    throw std::invalid_argument("unknown invariant `" + s + "`");
}

AtlasStatus atlas_status_from_string(const std::string& s) {
    if (s == "Optimal") return AtlasStatus::Optimal;
    if (s == "UpperBoundOnly") return AtlasStatus::UpperBoundOnly;
    if (s == "Formula") return AtlasStatus::Formula;
    throw std::invalid_argument("unknown status `" + s + "`");
}

void write_atlas_csv(std::ostream& out, std::vector<AtlasRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const AtlasRow& a, const AtlasRow& b) {
        return std::tuple(a.family, a.n, a.k, a.invariant) <
               std::tuple(b.family, b.n, b.k, b.invariant);
    });
    out << kAtlasCsvHeader << '\n';
    for (const auto& r : rows) {
        out << (r.family == Family::Johnson ? 'J' : 'K') << ',' << r.n << ',' << r.k << ','
            << r.vertices << ',' << r.edges << ',' << to_string(r.invariant) << ',' << r.value
            << ',' << to_string(r.status) << ',' << r.elapsed_ms << '\n';
    }
}

std::vector<AtlasRow> read_atlas_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw AtlasCsvError(1, "missing header");
    ++line_no;
    if (line != kAtlasCsvHeader) throw AtlasCsvError(1, "unexpected header `" + line + "`");

    std::vector<AtlasRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 9)
            throw AtlasCsvError(line_no, "expected 9 fields, got " + std::to_string(fields.size()));
        AtlasRow row;
        if (fields[0] == "J") {
            row.family = Family::Johnson;
        } else if (fields[0] == "K") {
            row.family = Family::Kneser;
        } else {
            throw AtlasCsvError(line_no, "bad family `" + fields[0] + "`");
        }
        row.n = static_cast<int>(parse_ll(fields[1], line_no, "n"));
        row.k = static_cast<int>(parse_ll(fields[2], line_no, "k"));
        row.vertices = parse_ll(fields[3], line_no, "vertices");
        row.edges = parse_ll(fields[4], line_no, "edges");
        try {
            row.invariant = atlas_invariant_from_string(fields[5]);
            row.status = atlas_status_from_string(fields[7]);
        } catch (const std::invalid_argument& e) {
            throw AtlasCsvError(line_no, e.what());
        }
        row.value = parse_ll(fields[6], line_no, "value");
        row.elapsed_ms = parse_ll(fields[8], line_no, "elapsed_ms");
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mdl
