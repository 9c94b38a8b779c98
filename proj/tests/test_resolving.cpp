#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mdl/families.hpp"
#include "mdl/resolving.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mdl;

namespace {

std::vector<int> construction_ids(const std::vector<KSubset>& subsets) {
    std::vector<int> ids;
    ids.reserve(subsets.size());
    for (const auto& s : subsets) ids.push_back(static_cast<int>(s.rank()));
    return ids;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.n_vertices());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Graph permuted(const Graph& g, std::uint64_t seed) {
    std::vector<int> perm(g.n_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.n_vertices(), std::move(edges));
}

}  // namespace

TEST_CASE("resolving checker basics") {
    DistanceMatrix p3 = all_pairs_distances(corpus::path_graph(3));
    CHECK(is_resolving_set(p3, {0}));
    CHECK(!is_resolving_set(p3, {1}));

    for (const Graph& g : corpus::random_connected_graphs(10, 2, 8, 11))
        CHECK(is_resolving_set(all_pairs_distances(g), all_vertices(g)));

    Graph j62 = johnson(6, 2);
    CHECK(is_resolving_set(all_pairs_distances(j62),
                           construction_ids(doubly_basis_j2_construction(6))));

    DistanceMatrix split = all_pairs_distances(Graph(4, {{0, 1}, {2, 3}}));
    CHECK_THROWS_AS(is_resolving_set(split, {0}), std::invalid_argument);
}

TEST_CASE("strongly_resolves on the path and the triangle") {
    DistanceMatrix p3 = all_pairs_distances(corpus::path_graph(3));
    CHECK(strongly_resolves(p3, 0, 1, 2));  // middle vertex on the a-c geodesic

    DistanceMatrix k3 = all_pairs_distances(corpus::complete_graph(3));
    CHECK(!strongly_resolves(k3, 0, 1, 2));
    CHECK(strongly_resolves(k3, 1, 1, 2));  // w = u always resolves
    CHECK(strongly_resolves(k3, 2, 1, 2));
}

TEST_CASE("strong resolving checker") {
    DistanceMatrix k4 = all_pairs_distances(corpus::complete_graph(4));
    CHECK(is_strong_resolving_set(k4, {0, 1, 2}));
    CHECK(!is_strong_resolving_set(k4, {0, 1}));

    Graph g = kneser(5, 2);
    CHECK(is_strong_resolving_set(all_pairs_distances(g),
                                  construction_ids(kneser_strong_resolving_construction(5, 2))));

    DistanceMatrix p3 = all_pairs_distances(corpus::path_graph(3));
    CHECK(is_strong_resolving_set(p3, {0}));
}

TEST_CASE("every strong resolving set is a resolving set") {
    for (const Graph& g : corpus::random_connected_graphs(25, 2, 8, 13)) {
        DistanceMatrix dm = all_pairs_distances(g);
        std::mt19937_64 rng(g.n_edges() * 977 + g.n_vertices());
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<int> s;
            for (int v = 0; v < g.n_vertices(); ++v)
                if (rng() & 1) s.push_back(v);
            if (is_strong_resolving_set(dm, s)) CHECK(is_resolving_set(dm, s));
        }
    }
}

TEST_CASE("doubly_resolves basics") {
    DistanceMatrix p3 = all_pairs_distances(corpus::path_graph(3));
    CHECK(doubly_resolves(p3, 0, 2, 0, 2));   // x=u, y=v
    CHECK(!doubly_resolves(p3, 1, 1, 0, 2));  // x = y never resolves

    // {1,2},{1,3} against the pair {4,5},{2,5} on the Petersen graph.
    Graph pet = kneser(5, 2);
    DistanceMatrix dm = all_pairs_distances(pet);
    int x = static_cast<int>(KSubset(5, {1, 2}).rank());
    int y = static_cast<int>(KSubset(5, {1, 3}).rank());
    int u = static_cast<int>(KSubset(5, {4, 5}).rank());
    int v = static_cast<int>(KSubset(5, {2, 5}).rank());
    bool expected = (dm.at(u, x) - dm.at(u, y)) != (dm.at(v, x) - dm.at(v, y));
    CHECK(doubly_resolves(dm, x, y, u, v) == expected);
    CHECK(expected);
}

TEST_CASE("doubly resolving checker") {
    Graph pet = kneser(5, 2);
    DistanceMatrix dm = all_pairs_distances(pet);
    std::vector<int> basis = {static_cast<int>(KSubset(5, {1, 2}).rank()),
                              static_cast<int>(KSubset(5, {1, 3}).rank()),
                              static_cast<int>(KSubset(5, {1, 4}).rank())};
    CHECK(is_doubly_resolving_set(dm, basis));

    Graph j62 = johnson(6, 2);
    CHECK(is_doubly_resolving_set(all_pairs_distances(j62),
                                  construction_ids(doubly_basis_j2_construction(6))));

    // On the path a-b-c the pair {a,b} leaves (b,c) unresolved; {a,c} works.
    DistanceMatrix p3 = all_pairs_distances(corpus::path_graph(3));
    CHECK(!is_doubly_resolving_set(p3, {0, 1}));
    CHECK(is_doubly_resolving_set(p3, {0, 2}));
    CHECK_THROWS_AS(is_doubly_resolving_set(p3, {0}), std::invalid_argument);
}

TEST_CASE("doubly checker agrees with the oracle on random sets") {
    for (const Graph& g : corpus::random_connected_graphs(15, 3, 8, 17)) {
        DistanceMatrix dm = all_pairs_distances(g);
        auto fw = oracle::floyd_warshall(g);
        std::mt19937_64 rng(g.n_edges() * 31 + 7);
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<int> d;
            for (int v = 0; v < g.n_vertices(); ++v)
                if (rng() & 1) d.push_back(v);
            if (d.size() < 2) continue;
            CHECK(is_doubly_resolving_set(dm, d) == oracle::is_doubly_resolving(fw, d));
        }
    }
}

TEST_CASE("constraint system for the path") {
    DistanceMatrix p3 = all_pairs_distances(corpus::path_graph(3));
    ConstraintSystem cs = build_constraint_system(p3, CoverMode::Strong);
    REQUIRE(cs.items.size() == 3);
    CHECK(cs.items == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(cs.coverers[0] == std::vector<int>{0, 1, 2});  // (a,b)
    CHECK(cs.coverers[1] == std::vector<int>{0, 2});     // (a,c)
    CHECK(cs.coverers[2] == std::vector<int>{0, 1, 2});  // (b,c)
}

TEST_CASE("constraint system for the triangle covers each pair by its endpoints") {
    DistanceMatrix k3 = all_pairs_distances(corpus::complete_graph(3));
    ConstraintSystem cs = build_constraint_system(k3, CoverMode::Strong);
    for (std::size_t i = 0; i < cs.items.size(); ++i) {
        auto [u, v] = cs.items[i];
        CHECK(cs.coverers[i] == std::vector<int>{u, v});
    }
}

TEST_CASE("doubly constraint system admits the Petersen basis") {
    DistanceMatrix dm = all_pairs_distances(kneser(5, 2));
    ConstraintSystem cs = build_constraint_system(dm, CoverMode::Doubly);
    std::vector<int> basis_pairs = {static_cast<int>(pair_rank(0, 1)),
                                    static_cast<int>(pair_rank(0, 3)),
                                    static_cast<int>(pair_rank(1, 3))};
    for (const auto& coverers : cs.coverers) {
        bool hit = false;
        for (int pr : basis_pairs)
            if (std::find(coverers.begin(), coverers.end(), pr) != coverers.end()) hit = true;
        CHECK(hit);
    }
}

TEST_CASE("metric dimension solver on known values") {
    CHECK(metric_dimension_exact(johnson(6, 2)).value == 4);
    CHECK(metric_dimension_exact(kneser(7, 2)).value == 5);
    CHECK(metric_dimension_exact(corpus::complete_graph(5)).value == 4);

    SolveResult one = metric_dimension_exact(Graph(1, {}));
    CHECK(one.value == 0);
    CHECK(one.certificate.empty());

    CHECK_THROWS_AS(metric_dimension_exact(kneser(4, 2)), std::invalid_argument);
}

TEST_CASE("doubly dimension solver on known values") {
    CHECK(doubly_metric_dimension_exact(kneser(5, 2)).value == 3);
    CHECK(doubly_metric_dimension_exact(johnson(6, 2)).value == 4);
    CHECK(doubly_metric_dimension_exact(corpus::path_graph(3)).value == 2);
    CHECK_THROWS_AS(doubly_metric_dimension_exact(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("solvers agree with subset enumeration on a mixed corpus") {
    auto graphs = corpus::random_connected_graphs(40, 2, 8, 23);
    for (const Graph& g : corpus::named_small())
        if (g.n_vertices() <= 8 && all_pairs_distances(g).connected()) graphs.push_back(g);
    for (const Graph& g : graphs) {
        SolveResult beta = metric_dimension_exact(g);
        CHECK(beta.status == SolveStatus::Optimal);
        CHECK(beta.value == oracle::metric_dimension(g));
        CHECK(is_resolving_set(all_pairs_distances(g), beta.certificate));
        if (g.n_vertices() >= 2) {
            SolveResult psi = doubly_metric_dimension_exact(g);
            CHECK(psi.status == SolveStatus::Optimal);
            CHECK(psi.value == oracle::doubly_dimension(g));
            CHECK(psi.value >= beta.value);
        }
    }
}

TEST_CASE("doubly dimension dominates metric dimension") {
    for (const Graph& g : corpus::random_connected_graphs(25, 2, 12, 67))
        CHECK(doubly_metric_dimension_exact(g).value >= metric_dimension_exact(g).value);
}

TEST_CASE("metric dimension of J(n,2) follows the k=2 closed form") {
    for (int n = 6; n <= 9; ++n)
        CHECK(metric_dimension_exact(johnson(n, 2)).value == metric_dim_formula_nk2(n));
}

TEST_CASE("metric dimension respects the k>=3 upper bound") {
    CHECK(metric_dimension_exact(johnson(6, 3)).value <= metric_dim_upper_bound_jnk(6, 3));
    CHECK(metric_dimension_exact(johnson(7, 3)).value <= metric_dim_upper_bound_jnk(7, 3));
}

TEST_CASE("values are invariant under vertex relabeling") {
    for (const Graph& g : corpus::random_connected_graphs(10, 4, 9, 29)) {
        Graph h = permuted(g, g.n_edges() * 53 + 1);
        CHECK(metric_dimension_exact(g).value == metric_dimension_exact(h).value);
        CHECK(doubly_metric_dimension_exact(g).value == doubly_metric_dimension_exact(h).value);
    }
}

TEST_CASE("rerunning the solver is deterministic") {
    Graph g = johnson(6, 2);
    SolveResult a = metric_dimension_exact(g);
    SolveResult b = metric_dimension_exact(g);
    CHECK(a.value == b.value);
    CHECK(a.certificate == b.certificate);
    CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("budget exhaustion downgrades the status but keeps a valid certificate") {
    Graph g = johnson(8, 2);
    SolveResult r = metric_dimension_exact(g, 1);
    CHECK(r.status == SolveStatus::UpperBoundOnly);
    CHECK(r.value >= metric_dimension_exact(g).value);
    CHECK(is_resolving_set(all_pairs_distances(g), r.certificate));

    SolveResult d = doubly_metric_dimension_exact(g, 1);
    CHECK(d.status == SolveStatus::UpperBoundOnly);
    CHECK(is_doubly_resolving_set(all_pairs_distances(g), d.certificate));
}

TEST_CASE("generic set cover solver") {
    // Items 0..3; candidate 0 covers {0,1}, 1 covers {2,3}, 2 covers {0,1,2,3}.
    std::vector<Bitset> coverage(3, Bitset(4));
    coverage[0].set(0);
    coverage[0].set(1);
    coverage[1].set(2);
    coverage[1].set(3);
    for (int i = 0; i < 4; ++i) coverage[2].set(i);
    SolveResult r = solve_set_cover(coverage, 4);
    CHECK(r.value == 1);
    CHECK(r.certificate == std::vector<int>{2});

    // Infeasible: item 4 has no coverer.
    std::vector<Bitset> bad(1, Bitset(2));
    bad[0].set(0);
    CHECK_THROWS_AS(solve_set_cover(bad, 2), std::invalid_argument);
}
