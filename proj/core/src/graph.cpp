#include "mdl/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace mdl {

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges, std::vector<KSubset> labels)
    : n_(n_vertices), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");

    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != n_)
            throw std::invalid_argument("Graph: label count differs from vertex count");
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("Graph: labels are not pairwise distinct");
    }

    adj_.assign(n_, Bitset(n_));
    for (const auto& [u, v] : edges_) {
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp_edges;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].test(v)) comp_edges.emplace_back(u, v);
    return Graph(n_, std::move(comp_edges), labels_);
}

bool DistanceMatrix::connected() const {
    for (const auto& entry : d_)
        if (entry == kUnreachable) return false;
    return true;
}

std::optional<int> DistanceMatrix::diameter() const {
    int max = 0;
    for (const auto& entry : d_) {
        if (entry == kUnreachable) return std::nullopt;
        max = std::max(max, entry);
    }
    return max;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.n_vertices();
    DistanceMatrix dm(n);
    std::vector<int> queue(n);
    for (int src = 0; src < n; ++src) {
        int head = 0, tail = 0;
        queue[tail++] = src;
        dm.set(src, src, 0);
        while (head < tail) {
            int u = queue[head++];
            int du = dm.at(src, u);
            g.neighbors(u).for_each_set([&](int w) {
                if (!dm.reachable(src, w)) {
                    dm.set(src, w, du + 1);
                    queue[tail++] = w;
                }
            });
        }
    }
    return dm;
}

std::optional<int> diameter(const Graph& g) {
    if (g.n_vertices() == 0) return 0;
    return all_pairs_distances(g).diameter();
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    if (g.n_vertices() == 0) return p;
    p.min_degree = p.max_degree = g.degree(0);
    for (int v = 1; v < g.n_vertices(); ++v) {
        int d = g.degree(v);
        p.min_degree = std::min(p.min_degree, d);
        p.max_degree = std::max(p.max_degree, d);
    }
    p.is_regular = p.min_degree == p.max_degree;
    return p;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first == "c") continue;
        if (first == "p") {
            if (n >= 0) throw EdgeListError(line_no, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw EdgeListError(line_no, "expected `p <n_vertices> <n_edges>`");
            std::string trailing;
            if (ls >> trailing) throw EdgeListError(line_no, "unexpected token after header");
            continue;
        }
        if (n < 0) throw EdgeListError(line_no, "edge before `p` header");
        long long u, v;
        std::istringstream es(line);
        if (!(es >> u >> v)) throw EdgeListError(line_no, "expected `<u> <v>`");
        std::string trailing;
        if (es >> trailing) throw EdgeListError(line_no, "unexpected token after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            throw EdgeListError(line_no, "vertex id outside 1.." + std::to_string(n));
        if (u == v) throw EdgeListError(line_no, "self-loop");
        int lo = static_cast<int>(std::min(u, v)) - 1;
        int hi = static_cast<int>(std::max(u, v)) - 1;
        if (!seen.insert({lo, hi}).second) throw EdgeListError(line_no, "duplicate edge");
        edges.emplace_back(lo, hi);
    }
    if (n < 0) throw EdgeListError(line_no, "missing `p` header");
    if (static_cast<long long>(edges.size()) != m)
        throw EdgeListError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                         std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p " << g.n_vertices() << ' ' << g.n_edges() << '\n';
    if (g.has_labels())
        for (int v = 0; v < g.n_vertices(); ++v)
            out << "c label " << v + 1 << ' ' << g.label(v).to_string() << '\n';
    for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace mdl
