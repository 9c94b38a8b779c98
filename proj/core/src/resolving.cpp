#include "mdl/resolving.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace mdl {
namespace {

using Clock = std::chrono::steady_clock;

void require_connected(const DistanceMatrix& dm, const char* who) {
    if (!dm.connected())
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

int checked_pair_count(int n, const char* who, int max_vertices) {
    if (n > max_vertices)
        throw std::invalid_argument(std::string(who) + ": graph too large for exact search (" +
                                    std::to_string(n) + " > " + std::to_string(max_vertices) +
                                    " vertices)");
    return n * (n - 1) / 2;
}

// Iterative-deepening search for a minimum cover. Branches on the uncovered
// item with the fewest available candidates; a candidate tried at a node is
// banned in the later sibling branches, so every candidate set is explored
// exactly once. The lower bound is a greedy packing of items with pairwise
// disjoint candidate sets.
struct CoverSearch {
    const std::vector<Bitset>& coverage;
    std::vector<Bitset> item_cands;  // per item, over candidates
    int n_items;
    int n_cands;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool limited = false;
    int target = 0;
    Bitset banned;
    std::vector<int> chosen;
    std::vector<int> found;
    std::vector<Bitset> uncovered_pool;  // per recursion depth, reused
    Bitset avail_scratch, packing_scratch;

    CoverSearch(const std::vector<Bitset>& coverage, int n_items, std::uint64_t budget)
        : coverage(coverage),
          n_items(n_items),
          n_cands(static_cast<int>(coverage.size())),
          budget(budget),
          banned(n_cands),
          avail_scratch(n_cands),
          packing_scratch(n_cands) {
        item_cands.assign(n_items, Bitset(n_cands));
        for (int c = 0; c < n_cands; ++c)
            coverage[c].for_each_set([&](int it) { item_cands[it].set(c); });
    }

    // Lower bound (greedy packing of items with pairwise disjoint candidate
    // sets) and branching item (fewest available candidates); returns false
    // when the node is dead: an item lost all candidates or the packing
    // already exceeds the remaining cover slots.
    bool scan(const Bitset& uncovered, int slack, int* branch_item, int* packed_out = nullptr) {
        int best_item = -1;
        int best_count = std::numeric_limits<int>::max();
        int packed = 0;
        packing_scratch.clear();
        bool dead = false;
        uncovered.for_each_set([&](int it) {
            if (dead) return;
            avail_scratch = item_cands[it];
            avail_scratch.and_not(banned);
            int c = avail_scratch.count();
            if (c == 0) {
                dead = true;
                return;
            }
            if (c < best_count) {
                best_count = c;
                best_item = it;
            }
            if (!avail_scratch.intersects(packing_scratch)) {
                if (++packed > slack) {
                    dead = true;
                    return;
                }
                packing_scratch |= avail_scratch;
            }
        });
        if (dead) return false;
        *branch_item = best_item;
        if (packed_out) *packed_out = packed;
        return true;
    }

    bool dfs(const Bitset& uncovered, int depth) {
        if (uncovered.none()) {
            found = chosen;
            return true;
        }
        if (static_cast<int>(chosen.size()) == target || limited) return false;
        if (++nodes > budget) {
            limited = true;
            return false;
        }

        int branch_item = 0;
        if (!scan(uncovered, target - static_cast<int>(chosen.size()), &branch_item)) return false;

        std::vector<int> branch;
        {
            avail_scratch = item_cands[branch_item];
            avail_scratch.and_not(banned);
            branch = avail_scratch.to_vector();
        }
        for (int c : branch) {
            banned.set(c);  // stays banned for later siblings
            chosen.push_back(c);
            Bitset& next = uncovered_pool[depth];
            next = uncovered;
            next.and_not(coverage[c]);
            if (dfs(next, depth + 1)) return true;
            chosen.pop_back();
            if (limited) break;
        }
        for (int c : branch) banned.reset(c);
        return false;
    }
};

std::vector<int> greedy_cover(const std::vector<Bitset>& coverage, int n_items) {
    Bitset uncovered = Bitset::all(n_items);
    std::vector<int> picked;
    while (uncovered.any()) {
        int best = -1, best_gain = 0;
        for (int c = 0; c < static_cast<int>(coverage.size()); ++c) {
            int gain = coverage[c].count_and(uncovered);
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        if (best < 0)
            throw std::invalid_argument("solve_set_cover: some item has no coverer (infeasible)");
        picked.push_back(best);
        uncovered.and_not(coverage[best]);
    }
    return picked;
}

}  // namespace

bool is_resolving_set(const DistanceMatrix& dm, const std::vector<int>& s) {
    require_connected(dm, "is_resolving_set");
    const int n = dm.n();
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            bool resolved = false;
            for (int w : s) {
                if (dm.at(u, w) != dm.at(v, w)) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) return false;
        }
    }
    return true;
}

bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v) {
    return dm.at(u, w) == dm.at(u, v) + dm.at(v, w) ||
           dm.at(v, w) == dm.at(v, u) + dm.at(u, w);
}

bool is_strong_resolving_set(const DistanceMatrix& dm, const std::vector<int>& s) {
    require_connected(dm, "is_strong_resolving_set");
    const int n = dm.n();
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            bool resolved = false;
            for (int w : s) {
                if (strongly_resolves(dm, w, u, v)) {
                    resolved = true;
                    break;
                }
            }
            if (!resolved) return false;
        }
    }
    return true;
}

bool doubly_resolves(const DistanceMatrix& dm, int x, int y, int u, int v) {
    return dm.at(u, x) - dm.at(u, y) != dm.at(v, x) - dm.at(v, y);
}

bool is_doubly_resolving_set(const DistanceMatrix& dm, const std::vector<int>& d) {
    require_connected(dm, "is_doubly_resolving_set");
    if (d.size() < 2)
        throw std::invalid_argument("is_doubly_resolving_set: need at least two vertices in D");
    const int n = dm.n();
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            bool resolved = false;
            for (std::size_t j = 1; j < d.size() && !resolved; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    if (doubly_resolves(dm, d[i], d[j], u, v)) {
                        resolved = true;
                        break;
                    }
            if (!resolved) return false;
        }
    }
    return true;
}

ConstraintSystem build_constraint_system(const DistanceMatrix& dm, CoverMode mode) {
    require_connected(dm, "build_constraint_system");
    const int n = dm.n();
    ConstraintSystem cs;
    cs.mode = mode;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            cs.items.emplace_back(u, v);
            std::vector<int> covers;
            if (mode == CoverMode::Strong) {
                for (int i = 0; i < n; ++i)
                    if (strongly_resolves(dm, i, u, v)) covers.push_back(i);
            } else {
                for (int j = 1; j < n; ++j)
                    for (int i = 0; i < j; ++i)
                        if (doubly_resolves(dm, i, j, u, v))
                            covers.push_back(static_cast<int>(pair_rank(i, j)));
            }
            cs.coverers.push_back(std::move(covers));
        }
    }
    return cs;
}

SolveResult solve_set_cover(const std::vector<Bitset>& coverage, int n_items,
                            std::uint64_t node_budget) {
    auto t0 = Clock::now();
    SolveResult res;
    if (n_items == 0) {
        res.elapsed = Clock::now() - t0;
        return res;
    }

    std::vector<int> greedy = greedy_cover(coverage, n_items);
    CoverSearch search(coverage, n_items, node_budget);

    int root_item = 0, root_lb = 0;
    Bitset all_items = Bitset::all(n_items);
    search.scan(all_items, n_items, &root_item, &root_lb);

    bool found = false;
    int value = static_cast<int>(greedy.size());
    for (int target = root_lb; target < static_cast<int>(greedy.size()); ++target) {
        search.target = target;
        search.chosen.clear();
        search.banned.clear();
        // dfs stores per-depth scratch here; grown only between searches so
        // references held by active frames stay valid.
        if (static_cast<int>(search.uncovered_pool.size()) < target)
            search.uncovered_pool.resize(target, Bitset(n_items));
        if (search.dfs(all_items, 0)) {
            found = true;
            value = target;
            break;
        }
        if (search.limited) break;
    }

    res.value = value;
    res.certificate = found ? search.found : greedy;
    std::sort(res.certificate.begin(), res.certificate.end());
    res.nodes_explored = search.nodes;
    res.status = (found || !search.limited) ? SolveStatus::Optimal : SolveStatus::UpperBoundOnly;
    res.elapsed = Clock::now() - t0;
    return res;
}

SolveResult metric_dimension_exact(const Graph& g, std::uint64_t node_budget) {
    auto t0 = Clock::now();
    const int n = g.n_vertices();
    const int n_items = checked_pair_count(n, "metric_dimension_exact", 512);
    DistanceMatrix dm = all_pairs_distances(g);
    require_connected(dm, "metric_dimension_exact");

    std::vector<Bitset> coverage(n, Bitset(n_items));
    for (int w = 0; w < n; ++w) {
        const int* dw = dm.row(w);
        int item = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++item)
                if (dw[u] != dw[v]) coverage[w].set(item);
    }

    SolveResult res = solve_set_cover(coverage, n_items, node_budget);
    if (!is_resolving_set(dm, res.certificate))
        throw std::logic_error("metric_dimension_exact: certificate failed verification");
    res.elapsed = Clock::now() - t0;
    return res;
}

namespace {

// State for the doubly-resolving search: coverage masks per vertex pair plus
// per-vertex unions used for pruning.
struct DoublySearch {
    int n;
    int n_items;
    std::vector<Bitset> pair_cov;    // indexed by pair_rank(x,y)
    std::vector<Bitset> any_cov;     // any_cov[v] = union over partners
    std::vector<Bitset> suffix_cov;  // suffix_cov[v] = union of any_cov[v..]
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool limited = false;
    int target = 0;
    std::vector<int> chosen;
    std::vector<int> found;

    DoublySearch(const DistanceMatrix& dm, std::uint64_t budget)
        : n(dm.n()), n_items(n * (n - 1) / 2), budget(budget) {
        pair_cov.assign(n_items, Bitset(n_items));
        for (int y = 1; y < n; ++y)
            for (int x = 0; x < y; ++x) {
                Bitset& mask = pair_cov[pair_rank(x, y)];
                int item = 0;
                for (int v = 1; v < n; ++v)
                    for (int u = 0; u < v; ++u, ++item)
                        if (doubly_resolves(dm, x, y, u, v)) mask.set(item);
            }
        any_cov.assign(n, Bitset(n_items));
        for (int v = 0; v < n; ++v)
            for (int y = 0; y < n; ++y)
                if (y != v) any_cov[v] |= pair_cov[pair_rank(std::min(v, y), std::max(v, y))];
        suffix_cov.assign(n + 1, Bitset(n_items));
        for (int v = n - 1; v >= 0; --v) {
            suffix_cov[v] = suffix_cov[v + 1];
            suffix_cov[v] |= any_cov[v];
        }
    }

    bool dfs(int next, const Bitset& uncovered) {
        if (uncovered.none()) {
            found = chosen;
            return true;
        }
        if (static_cast<int>(chosen.size()) == target || limited) return false;
        if (++nodes > budget) {
            limited = true;
            return false;
        }

        const int remaining = target - static_cast<int>(chosen.size());
        if (!uncovered.is_subset_of(suffix_cov[next])) return false;
        int max_new = 0;
        for (int v = next; v < n; ++v)
            max_new = std::max(max_new, any_cov[v].count_and(uncovered));
        if (uncovered.count() > remaining * max_new) return false;

        for (int v = next; v <= n - remaining; ++v) {
            chosen.push_back(v);
            Bitset next_uncovered = uncovered;
            for (std::size_t i = 0; i + 1 < chosen.size(); ++i) {
                int y = chosen[i];
                next_uncovered.and_not(pair_cov[pair_rank(std::min(y, v), std::max(y, v))]);
            }
            if (dfs(v + 1, next_uncovered)) return true;
            chosen.pop_back();
            if (limited) return false;
        }
        return false;
    }

    // Deterministic greedy incumbent; terminates because V doubly resolves
    // every pair once |D| = n.
    std::vector<int> greedy() const {
        std::vector<int> d;
        std::vector<bool> in_d(n, false);
        Bitset uncovered = Bitset::all(n_items);
        while (uncovered.any() && static_cast<int>(d.size()) < n) {
            int best = -1, best_gain = -1;
            for (int v = 0; v < n; ++v) {
                if (in_d[v]) continue;
                Bitset gain(n_items);
                for (int y : d) gain |= pair_cov[pair_rank(std::min(v, y), std::max(v, y))];
                gain &= uncovered;
                int count = gain.count();
                if (count > best_gain) {
                    best_gain = count;
                    best = v;
                }
            }
            in_d[best] = true;
            d.push_back(best);
            for (std::size_t i = 0; i + 1 < d.size(); ++i)
                uncovered.and_not(
                    pair_cov[pair_rank(std::min(d[i], d.back()), std::max(d[i], d.back()))]);
        }
        std::sort(d.begin(), d.end());
        return d;
    }
};

}  // namespace

SolveResult doubly_metric_dimension_exact(const Graph& g, std::uint64_t node_budget) {
    auto t0 = Clock::now();
    const int n = g.n_vertices();
    if (n < 2)
        throw std::invalid_argument(
            "doubly_metric_dimension_exact: defined only for graphs with >= 2 vertices");
    checked_pair_count(n, "doubly_metric_dimension_exact", 128);
    DistanceMatrix dm = all_pairs_distances(g);
    require_connected(dm, "doubly_metric_dimension_exact");

    SolveResult beta = metric_dimension_exact(g, node_budget);
    int lower = beta.status == SolveStatus::Optimal ? std::max(2, beta.value) : 2;

    DoublySearch search(dm, node_budget);
    std::vector<int> incumbent = search.greedy();

    SolveResult res;
    bool found = false;
    Bitset all_items = Bitset::all(search.n_items);
    for (int target = lower; target < static_cast<int>(incumbent.size()); ++target) {
        search.target = target;
        search.chosen.clear();
        if (search.dfs(0, all_items)) {
            found = true;
            res.value = target;
            break;
        }
        if (search.limited) break;
    }

    res.certificate = found ? search.found : incumbent;
    if (!found) res.value = static_cast<int>(incumbent.size());
    std::sort(res.certificate.begin(), res.certificate.end());
    res.nodes_explored = search.nodes;
    res.status = (found || !search.limited) ? SolveStatus::Optimal : SolveStatus::UpperBoundOnly;
    if (!is_doubly_resolving_set(dm, res.certificate))
        throw std::logic_error("doubly_metric_dimension_exact: certificate failed verification");
    res.elapsed = Clock::now() - t0;
    return res;
}

}  // namespace mdl
