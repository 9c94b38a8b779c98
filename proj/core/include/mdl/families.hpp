#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mdl/combinatorics.hpp"
#include "mdl/graph.hpp"

namespace mdl {

enum class Family { Johnson, Kneser };

// Parsed form of the CLI family notation `J:n,k` / `K:n,k`.
struct FamilySpec {
    Family family = Family::Johnson;
    int n = 0;
    int k = 0;

    static FamilySpec parse(std::string_view text);

    // J(n,k) with n < 2k folds to the isomorphic J(n, n-k); Kneser specs are
    // returned unchanged.
    FamilySpec normalized() const;

    std::string to_string() const;

    bool operator==(const FamilySpec&) const = default;
};

// Vertices are the k-subsets of [n] ordered by combinadic rank; A and B are
// adjacent when |A ∩ B| = k-1. Requires 1 <= k < n.
Graph johnson(int n, int k);

// Same vertex set; A and B adjacent when disjoint. Requires 1 <= k and
// n >= 2k (n = 2k yields a perfect matching, which is disconnected).
Graph kneser(int n, int k);

// Builds the graph for a spec, normalizing Johnson parameters first.
Graph instantiate(const FamilySpec& spec);

// Hop distance in J(n,k): k - |A ∩ B|.
int johnson_distance(const KSubset& a, const KSubset& b);

// Distance from the complement of A to B in J(2k,k): equals |A ∩ B|.
// Requires universe size exactly 2k.
int johnson_complement_distance(const KSubset& a, const KSubset& b);

// Hop distance in K(n,k) for n >= 2k+1 and A != B, from the intersection
// size s: min(2*ceil((k-s)/(n-2k)), 2*ceil(s/(n-2k)) + 1).
int kneser_distance(const KSubset& a, const KSubset& b);

// ceil((k-1)/(n-2k)) + 1; requires n >= 2k+1. Equals 2 whenever n >= 3k-1.
int kneser_diameter(int n, int k);

// Parity-specific intersection bounds realized by Kneser distances:
// dist = 2p forces s >= k(2p+1) - pn, dist = 2p+1 forces s <= p(n-2k).
bool stahl_bounds_hold(int s, int dist, int n, int k);

// C(n-1, k); requires n >= 2k >= 2.
std::uint64_t johnson_beta_s_formula(int n, int k);

// C(n,k) - floor(n/k); requires k >= 2 and n >= 3k-1 (rejected outside that
// range, where the closed form is known to fail).
std::uint64_t kneser_beta_s_formula(int n, int k);

// The explicit strong resolving set of K(n,k) for k >= 2, n >= 3k-1: all
// k-subsets except the floor(n/k) aligned blocks {ik+1,...,(i+1)k}.
std::vector<KSubset> kneser_strong_resolving_construction(int n, int k);

// The explicit doubly resolving set of J(n,2) (and K(n,2)) of size
// ceil(2n/3): pairs {3i-2,3i-1},{3i-1,3i} for i <= t = floor(n/3), plus
// {3t-1,3t+1} when n = 3t+1, plus both {3t-1,3t+1},{3t-1,3t+2} when n = 3t+2.
std::vector<KSubset> doubly_basis_j2_construction(int n);

// ceil(2n/3), the metric dimension of J(n,2) and K(n,2); requires n >= 6.
int metric_dim_formula_nk2(int n);

// floor(k(n+1)/(k+1)), an upper bound on the metric dimension of J(n,k);
// requires n >= 2k and k >= 3.
int metric_dim_upper_bound_jnk(int n, int k);

// Doubly metric dimension of J(n,2) (n >= 4) and K(n,2) (n >= 5):
// ceil(2n/3), except psi(K(5,2)) = 3.
int psi_formula_nk2(int n, Family family);

}  // namespace mdl
