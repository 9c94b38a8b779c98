#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdl/graph.hpp"

namespace mdl {

// Raised by read_lp on malformed input; line is 1-based.
struct LpParseError : std::runtime_error {
    LpParseError(int line, const std::string& what)
        : std::runtime_error("LP text, line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

enum class Sense { Ge, Le };

struct LinearTerm {
    long long coef = 0;
    std::string var;
    bool operator==(const LinearTerm&) const = default;
};

struct IlpConstraint {
    std::string name;
    std::vector<LinearTerm> terms;
    Sense sense = Sense::Ge;
    long long rhs = 0;
    bool operator==(const IlpConstraint&) const = default;
};

// A pure binary minimization model. Variables are named y_<i> (1-indexed
// vertices) and x_<i>_<j> (1-indexed vertex pairs, i < j).
struct IlpModel {
    std::vector<LinearTerm> objective;
    std::vector<IlpConstraint> constraints;
    std::vector<std::string> binaries;

    // Structural checks: at least one constraint, no empty constraint rows,
    // unique constraint names, every referenced variable declared binary.
    void validate() const;

    bool operator==(const IlpModel&) const = default;
};

// Strong-resolution cover model: variables y_1..y_n, objective sum y_i, one
// `pair_<u>_<v> : sum of covering y >= 1` row per unordered pair in colex
// order. Connected input with n >= 2.
IlpModel build_strong_ilp(const DistanceMatrix& dm);

// Doubly-resolution model: y_1..y_n plus pair variables x_i_j; cover rows over
// the x variables, then for each pair the two linking rows
// `2 x_i_j - y_i - y_j <= 0` and `x_i_j - y_i - y_j >= -1` (the first is the
// half-coefficient form scaled by two so the file stays integer).
IlpModel build_doubly_ilp(const DistanceMatrix& dm);

// LP text: Minimize / Subject To / Binaries / End, LF line endings, lines
// wrapped at term boundaries to at most 255 characters with a leading-space
// continuation. Byte-deterministic for a fixed model.
std::string write_lp(const IlpModel& model);

// Inverse of write_lp on its own output.
IlpModel read_lp(const std::string& text);

// Optimum of a model produced by the builders above, by exhausting the 0/1
// assignments of the objective variables (auxiliary binaries with zero
// objective coefficient are set greedily to their largest feasible value,
// exact as long as every <= row contains at most one of them). Guarded to 20
// objective variables.
long long solve_binary_minimize(const IlpModel& model);

}  // namespace mdl
