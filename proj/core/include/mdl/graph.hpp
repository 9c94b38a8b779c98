#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdl/bitset.hpp"
#include "mdl/combinatorics.hpp"

namespace mdl {

// Raised by the edge-list reader on malformed input; line is 1-based.
struct EdgeListError : std::runtime_error {
    EdgeListError(int line, const std::string& what)
        : std::runtime_error("edge list, line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Immutable simple undirected graph. Vertices are dense 0-based ids; edges
// are stored once in canonical (low, high) order, and additionally as
// per-vertex neighbor bitsets for the solver kernels. Vertices may carry
// k-subset labels (attached by the family generators).
class Graph {
public:
    Graph(int n_vertices, std::vector<std::pair<int, int>> edges,
          std::vector<KSubset> labels = {});

    int n_vertices() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<KSubset>& labels() const { return labels_; }
    const KSubset& label(int v) const { return labels_[v]; }

    Graph complement() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && labels_ == o.labels_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> adj_;
    std::vector<KSubset> labels_;
};

// All-pairs hop distances from per-source BFS. Unreachable pairs hold
// kUnreachable; every other entry is the exact shortest-path edge count.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    int n() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
    void set(int u, int v, int dist) { d_[static_cast<std::size_t>(u) * n_ + v] = dist; }

    const int* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

    bool connected() const;

    // Maximum finite entry; nullopt when some pair is unreachable.
    std::optional<int> diameter() const;

private:
    int n_;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// Maximum distance over all vertex pairs; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    bool is_regular = true;
    bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile degree_profile(const Graph& g);

// Edge-list text format: a `p <n_vertices> <n_edges>` header, one 1-indexed
// `<u> <v>` pair per line, `c ...` comment lines anywhere.
Graph read_edge_list(std::istream& in);

// Writes the canonical form: header, `c label <v> {..}` lines when the graph
// is labeled, then edges sorted lexicographically.
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments = {});

}  // namespace mdl
