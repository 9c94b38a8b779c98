#include "corpus.hpp"

#include <random>

#include "mdl/families.hpp"

namespace corpus {
namespace {

mdl::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return mdl::Graph(n, std::move(edges));
}

bool connected(const mdl::Graph& g) { return mdl::all_pairs_distances(g).connected(); }

}  // namespace

mdl::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return mdl::Graph(n, std::move(edges));
}

mdl::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return mdl::Graph(n, std::move(edges));
}

mdl::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return mdl::Graph(n, std::move(edges));
}

mdl::Graph petersen() { return mdl::kneser(5, 2); }

std::vector<mdl::Graph> named_small() {
    std::vector<mdl::Graph> out;
    for (int n = 2; n <= 7; ++n) out.push_back(path_graph(n));
    for (int n = 3; n <= 7; ++n) out.push_back(cycle_graph(n));
    for (int n = 2; n <= 6; ++n) out.push_back(complete_graph(n));
    out.push_back(petersen());
    return out;
}

std::vector<mdl::Graph> random_graphs(int count, int min_n, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(min_n, max_n);
    const double densities[] = {0.2, 0.35, 0.5, 0.7};
    std::vector<mdl::Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_graph(rng, size(rng), densities[i % 4]));
    return out;
}

std::vector<mdl::Graph> random_connected_graphs(int count, int min_n, int max_n,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(min_n, max_n);
    const double densities[] = {0.25, 0.4, 0.55, 0.7};
    std::vector<mdl::Graph> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        mdl::Graph g = random_graph(rng, size(rng), densities[out.size() % 4]);
        if (g.n_vertices() >= 2 && connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace corpus
