#include "mdl/strong.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "mdl/bitset.hpp"
#include "mdl/resolving.hpp"

namespace mdl {
namespace {

using Clock = std::chrono::steady_clock;

// Exact maximum independent set. Branches on a maximum-degree vertex
// (include it and drop its neighborhood, or exclude it); vertices of degree
// at most one inside the candidate set are taken without branching. The
// bound is a greedy clique cover of the candidates (sequential coloring of
// the complement): an independent set meets each clique at most once.
struct MisSearch {
    int n;
    const std::vector<Bitset>* adj;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool limited = false;
    std::vector<int> current, best;

    MisSearch(const Graph& g, std::uint64_t budget) : n(g.n_vertices()), budget(budget) {
        adj_storage.reserve(n);
        for (int v = 0; v < n; ++v) adj_storage.push_back(g.neighbors(v));
        adj = &adj_storage;
    }

    int clique_cover_bound(const Bitset& candidates) const {
        Bitset rest = candidates;
        int classes = 0;
        while (rest.any()) {
            ++classes;
            int v = rest.first_set();
            rest.reset(v);
            Bitset common = rest & (*adj)[v];
            while (common.any()) {
                int u = common.first_set();
                common.reset(u);
                rest.reset(u);
                common &= (*adj)[u];
            }
        }
        return classes;
    }

    std::vector<int> greedy_independent() const {
        std::vector<int> out;
        Bitset candidates = Bitset::all(n);
        while (candidates.any()) {
            int pick = -1, pick_deg = n + 1;
            candidates.for_each_set([&](int v) {
                int deg = (*adj)[v].count_and(candidates);
                if (deg < pick_deg) {
                    pick_deg = deg;
                    pick = v;
                }
            });
            out.push_back(pick);
            candidates.reset(pick);
            candidates.and_not((*adj)[pick]);
        }
        return out;
    }

    void expand(Bitset candidates) {
        if (limited || ++nodes > budget) {
            limited = true;
            return;
        }

        // Degree <= 1 vertices are always in some maximum independent set of
        // the remaining subgraph; take them outright.
        std::size_t mark = current.size();
        bool reduced = true;
        while (reduced) {
            reduced = false;
            int branch_vertex = -1;
            candidates.for_each_set([&](int v) {
                if (reduced) return;
                if ((*adj)[v].count_and(candidates) <= 1) {
                    branch_vertex = v;
                    reduced = true;
                }
            });
            if (reduced) {
                current.push_back(branch_vertex);
                candidates.reset(branch_vertex);
                candidates.and_not((*adj)[branch_vertex]);
            }
        }

        if (candidates.none()) {
            if (current.size() > best.size()) best = current;
            current.resize(mark);
            return;
        }
        if (static_cast<int>(current.size()) + clique_cover_bound(candidates) <=
            static_cast<int>(best.size())) {
            current.resize(mark);
            return;
        }

        int pivot = -1, pivot_deg = -1;
        candidates.for_each_set([&](int v) {
            int deg = (*adj)[v].count_and(candidates);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        });

        Bitset with = candidates;
        with.reset(pivot);
        with.and_not((*adj)[pivot]);
        current.push_back(pivot);
        expand(std::move(with));
        current.pop_back();

        if (!limited) {
            candidates.reset(pivot);
            expand(std::move(candidates));
        }
        current.resize(mark);
    }

private:
    std::vector<Bitset> adj_storage;
};

}  // namespace

std::vector<std::pair<int, int>> mmd_pairs(const Graph& g, const DistanceMatrix& dm) {
    if (!dm.connected()) throw std::invalid_argument("mmd_pairs: graph must be connected");
    const int n = g.n_vertices();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        const int* du = dm.row(u);
        for (int v = u + 1; v < n; ++v) {
            const int* dv = dm.row(v);
            const int d = du[v];
            bool mmd = true;
            g.neighbors(u).for_each_set([&](int w) {
                if (dv[w] > d) mmd = false;
            });
            if (!mmd) continue;
            g.neighbors(v).for_each_set([&](int w) {
                if (du[w] > d) mmd = false;
            });
            if (mmd) pairs.emplace_back(u, v);
        }
    }
    return pairs;
}

MmdGraph strong_resolving_graph(const Graph& g) {
    DistanceMatrix dm = all_pairs_distances(g);
    auto pairs = mmd_pairs(g, dm);
    Graph sr(g.n_vertices(), std::move(pairs), g.labels());
    return MmdGraph{g, std::move(sr)};
}

SolveResult max_independent_set(const Graph& g, std::uint64_t node_budget) {
    auto t0 = Clock::now();
    const int n = g.n_vertices();
    SolveResult res;
    if (n == 0) {
        res.elapsed = Clock::now() - t0;
        return res;
    }

    MisSearch search(g, node_budget);
    search.best = search.greedy_independent();
    search.expand(Bitset::all(n));

    res.value = static_cast<int>(search.best.size());
    res.certificate = search.best;
    std::sort(res.certificate.begin(), res.certificate.end());
    res.nodes_explored = search.nodes;
    res.status = search.limited ? SolveStatus::UpperBoundOnly : SolveStatus::Optimal;
    res.elapsed = Clock::now() - t0;

    for (std::size_t j = 1; j < res.certificate.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (g.adjacent(res.certificate[i], res.certificate[j]))
                throw std::logic_error("max_independent_set: certificate not independent");
    return res;
}

SolveResult min_vertex_cover(const Graph& g, std::uint64_t node_budget) {
    auto t0 = Clock::now();
    SolveResult mis = max_independent_set(g, node_budget);

    // On a budgeted exit the incumbent may omit isolated vertices; they are
    // independent of everything, so force them in before complementing.
    std::vector<bool> in_mis(g.n_vertices(), false);
    for (int v : mis.certificate) in_mis[v] = true;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (g.degree(v) == 0 && !in_mis[v]) {
            in_mis[v] = true;
            ++mis.value;
        }

    SolveResult res;
    res.value = g.n_vertices() - mis.value;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (!in_mis[v]) res.certificate.push_back(v);
    res.nodes_explored = mis.nodes_explored;
    res.status = mis.status;
    res.elapsed = Clock::now() - t0;
    return res;
}

SolveResult strong_metric_dimension_exact(const Graph& g, std::uint64_t node_budget) {
    auto t0 = Clock::now();
    DistanceMatrix dm = all_pairs_distances(g);
    if (!dm.connected())
        throw std::invalid_argument("strong_metric_dimension_exact: graph must be connected");

    MmdGraph mg = strong_resolving_graph(g);
    SolveResult res = min_vertex_cover(mg.sr, node_budget);
    if (!is_strong_resolving_set(dm, res.certificate))
        throw std::logic_error("strong_metric_dimension_exact: certificate failed verification");
    res.elapsed = Clock::now() - t0;
    return res;
}

bool cross_check_strong(const Graph& g, std::uint64_t node_budget) {
    if (g.n_vertices() > 12)
        throw std::invalid_argument("cross_check_strong: direct search bound is 12 vertices");
    SolveResult via_cover = strong_metric_dimension_exact(g, node_budget);

    DistanceMatrix dm = all_pairs_distances(g);
    ConstraintSystem cs = build_constraint_system(dm, CoverMode::Strong);
    const int n_items = static_cast<int>(cs.items.size());
    std::vector<Bitset> coverage(g.n_vertices(), Bitset(n_items));
    for (int item = 0; item < n_items; ++item)
        for (int w : cs.coverers[item]) coverage[w].set(item);
    SolveResult direct = solve_set_cover(coverage, n_items, node_budget);

    return via_cover.status == SolveStatus::Optimal && direct.status == SolveStatus::Optimal &&
           via_cover.value == direct.value;
}

}  // namespace mdl
