#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mdl {

// C(n, k) as an exact 64-bit value; 0 when k < 0 or k > n.
// Throws std::overflow_error if the result does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// A k-element subset of the universe [n] = {1..n}, kept as an ascending
// element list. Vertex ids of Johnson/Kneser graphs are the colexicographic
// combinadic rank of the subset.
struct KSubset {
    int universe = 0;
    std::vector<int> elems;  // strictly ascending, values in 1..universe

    KSubset() = default;
    KSubset(int universe, std::vector<int> elements);

    int k() const { return static_cast<int>(elems.size()); }
    bool contains(int e) const;
    int intersection_size(const KSubset& other) const;
    bool disjoint_from(const KSubset& other) const { return intersection_size(other) == 0; }

    // [n] \ elems, same universe.
    KSubset complement_set() const;

    // Colexicographic combinadic rank among all k-subsets of [universe].
    std::uint64_t rank() const;
    static KSubset unrank(int universe, int k, std::uint64_t rank);

    // "{1,2,5}" with ascending 1-indexed elements.
    std::string to_string() const;

    auto operator<=>(const KSubset&) const = default;
};

// Colexicographic rank of an unordered pair 0 <= u < v:
// (0,1) -> 0, (0,2) -> 1, (1,2) -> 2, (0,3) -> 3, ...
inline std::uint64_t pair_rank(int u, int v) {
    return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
}

std::pair<int, int> pair_unrank(std::uint64_t rank);

}  // namespace mdl
