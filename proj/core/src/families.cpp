#include "mdl/families.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace mdl {
namespace {

constexpr int kMaxFamilyVertices = 8192;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("family spec: bad " + std::string(what) + " `" +
                                    std::string(s) + "`");
    return value;
}

std::vector<KSubset> subset_labels(int n, int k, std::uint64_t count) {
    std::vector<KSubset> labels;
    labels.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) labels.push_back(KSubset::unrank(n, k, r));
    return labels;
}

Graph subset_graph(int n, int k, bool adjacent_when_disjoint) {
    std::uint64_t count = binomial(n, k);
    if (count > kMaxFamilyVertices)
        throw std::invalid_argument("family graph too large: C(" + std::to_string(n) + "," +
                                    std::to_string(k) + ") = " + std::to_string(count) +
                                    " vertices");
    auto labels = subset_labels(n, k, count);
    const int v_count = static_cast<int>(count);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < v_count; ++i) {
        for (int j = i + 1; j < v_count; ++j) {
            int inter = labels[i].intersection_size(labels[j]);
            bool edge = adjacent_when_disjoint ? inter == 0 : inter == k - 1;
            if (edge) edges.emplace_back(i, j);
        }
    }
    return Graph(v_count, std::move(edges), std::move(labels));
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    auto colon = text.find(':');
    auto comma = text.find(',');
    if (colon == std::string_view::npos || comma == std::string_view::npos || comma < colon)
        throw std::invalid_argument("family spec: expected `J:<n>,<k>` or `K:<n>,<k>`, got `" +
                                    std::string(text) + "`");
    std::string_view tag = text.substr(0, colon);
    FamilySpec spec;
    if (tag == "J") {
        spec.family = Family::Johnson;
    } else if (tag == "K") {
        spec.family = Family::Kneser;
    } else {
        throw std::invalid_argument("family spec: unknown family `" + std::string(tag) + "`");
    }
    spec.n = parse_int(text.substr(colon + 1, comma - colon - 1), "n");
    spec.k = parse_int(text.substr(comma + 1), "k");
    return spec;
}

FamilySpec FamilySpec::normalized() const {
    if (family == Family::Johnson && k >= 1 && k < n && n < 2 * k)
        return FamilySpec{family, n, n - k};
    return *this;
}

std::string FamilySpec::to_string() const {
    return std::string(family == Family::Johnson ? "J" : "K") + ":" + std::to_string(n) + "," +
           std::to_string(k);
}

Graph johnson(int n, int k) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("johnson(" + std::to_string(n) + "," + std::to_string(k) +
                                    "): need 1 <= k < n");
    return subset_graph(n, k, /*adjacent_when_disjoint=*/false);
}

Graph kneser(int n, int k) {
    if (k < 1 || n < 2 * k)
        throw std::invalid_argument("kneser(" + std::to_string(n) + "," + std::to_string(k) +
                                    "): need 1 <= k and n >= 2k");
    return subset_graph(n, k, /*adjacent_when_disjoint=*/true);
}

Graph instantiate(const FamilySpec& spec) {
    FamilySpec norm = spec.normalized();
    return norm.family == Family::Johnson ? johnson(norm.n, norm.k) : kneser(norm.n, norm.k);
}

int johnson_distance(const KSubset& a, const KSubset& b) {
    if (a.k() != b.k() || a.universe != b.universe)
        throw std::invalid_argument("johnson_distance: subsets must share k and universe");
    return a.k() - a.intersection_size(b);
}

int johnson_complement_distance(const KSubset& a, const KSubset& b) {
    if (a.k() != b.k() || a.universe != b.universe)
        throw std::invalid_argument("johnson_complement_distance: subsets must share k and universe");
    if (a.universe != 2 * a.k())
        throw std::invalid_argument("johnson_complement_distance: requires universe n = 2k");
    return a.intersection_size(b);
}

int kneser_distance(const KSubset& a, const KSubset& b) {
    if (a.k() != b.k() || a.universe != b.universe)
        throw std::invalid_argument("kneser_distance: subsets must share k and universe");
    const int n = a.universe, k = a.k();
    if (n <= 2 * k)
        throw std::invalid_argument("kneser_distance: requires n >= 2k+1");
    if (a == b) throw std::invalid_argument("kneser_distance: requires A != B");
    const int s = a.intersection_size(b);
    const int gap = n - 2 * k;
    return std::min(2 * ceil_div(k - s, gap), 2 * ceil_div(s, gap) + 1);
}

int kneser_diameter(int n, int k) {
    if (k < 1 || n <= 2 * k)
        throw std::invalid_argument("kneser_diameter: requires 1 <= k and n >= 2k+1");
    return ceil_div(k - 1, n - 2 * k) + 1;
}

bool stahl_bounds_hold(int s, int dist, int n, int k) {
    if (dist < 1) throw std::invalid_argument("stahl_bounds_hold: requires dist >= 1");
    if (dist % 2 == 0) {
        int p = dist / 2;
        return s >= k * (2 * p + 1) - p * n;
    }
    int p = (dist - 1) / 2;
    return s <= p * (n - 2 * k);
}

std::uint64_t johnson_beta_s_formula(int n, int k) {
    if (k < 1 || n < 2 * k)
        throw std::invalid_argument("johnson_beta_s_formula: requires n >= 2k >= 2");
    return binomial(n - 1, k);
}

std::uint64_t kneser_beta_s_formula(int n, int k) {
    if (k < 2 || n < 3 * k - 1)
        throw std::invalid_argument("kneser_beta_s_formula: requires k >= 2 and n >= 3k-1");
    return binomial(n, k) - static_cast<std::uint64_t>(n / k);
}

std::vector<KSubset> kneser_strong_resolving_construction(int n, int k) {
    if (k < 2 || n < 3 * k - 1)
        throw std::invalid_argument(
            "kneser_strong_resolving_construction: requires k >= 2 and n >= 3k-1");
    const int m = n / k;
    std::vector<KSubset> excluded;
    excluded.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::vector<int> block(k);
        for (int j = 0; j < k; ++j) block[j] = i * k + j + 1;
        excluded.emplace_back(n, std::move(block));
    }
    std::vector<KSubset> s;
    const std::uint64_t count = binomial(n, k);
    s.reserve(count - m);
    for (std::uint64_t r = 0; r < count; ++r) {
        KSubset candidate = KSubset::unrank(n, k, r);
        if (std::find(excluded.begin(), excluded.end(), candidate) == excluded.end())
            s.push_back(std::move(candidate));
    }
    return s;
}

std::vector<KSubset> doubly_basis_j2_construction(int n) {
    if (n < 4) throw std::invalid_argument("doubly_basis_j2_construction: requires n >= 4");
    const int t = n / 3;
    std::vector<KSubset> s;
    for (int i = 1; i <= t; ++i) {
        s.emplace_back(n, std::vector<int>{3 * i - 2, 3 * i - 1});
        s.emplace_back(n, std::vector<int>{3 * i - 1, 3 * i});
    }
    if (n == 3 * t + 1) {
        s.emplace_back(n, std::vector<int>{3 * t - 1, 3 * t + 1});
    } else if (n == 3 * t + 2) {
        s.emplace_back(n, std::vector<int>{3 * t - 1, 3 * t + 1});
        s.emplace_back(n, std::vector<int>{3 * t - 1, 3 * t + 2});
    }
    return s;
}

int metric_dim_formula_nk2(int n) {
    if (n < 6) throw std::invalid_argument("metric_dim_formula_nk2: requires n >= 6");
    return ceil_div(2 * n, 3);
}

int metric_dim_upper_bound_jnk(int n, int k) {
    if (k < 3 || n < 2 * k)
        throw std::invalid_argument("metric_dim_upper_bound_jnk: requires k >= 3 and n >= 2k");
    return k * (n + 1) / (k + 1);
}

int psi_formula_nk2(int n, Family family) {
    if (family == Family::Johnson) {
        if (n < 4) throw std::invalid_argument("psi_formula_nk2: Johnson requires n >= 4");
        return ceil_div(2 * n, 3);
    }
    if (n < 5) throw std::invalid_argument("psi_formula_nk2: Kneser requires n >= 5");
    if (n == 5) return 3;
    return ceil_div(2 * n, 3);
}

}  // namespace mdl
