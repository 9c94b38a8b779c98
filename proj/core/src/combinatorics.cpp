#include "mdl/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mdl {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

KSubset::KSubset(int universe, std::vector<int> elements)
    : universe(universe), elems(std::move(elements)) {
    if (universe < 0) throw std::invalid_argument("KSubset: negative universe");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > universe)
            throw std::invalid_argument("KSubset: element " + std::to_string(elems[i]) +
                                        " outside universe [1.." + std::to_string(universe) + "]");
        if (i > 0 && elems[i] <= elems[i - 1])
            throw std::invalid_argument("KSubset: elements must be strictly ascending");
    }
}

bool KSubset::contains(int e) const {
    return std::binary_search(elems.begin(), elems.end(), e);
}

int KSubset::intersection_size(const KSubset& other) const {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < elems.size() && j < other.elems.size()) {
        if (elems[i] == other.elems[j]) {
            ++count, ++i, ++j;
        } else if (elems[i] < other.elems[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

KSubset KSubset::complement_set() const {
    std::vector<int> out;
    out.reserve(universe - k());
    std::size_t i = 0;
    for (int e = 1; e <= universe; ++e) {
        if (i < elems.size() && elems[i] == e) {
            ++i;
        } else {
            out.push_back(e);
        }
    }
    return KSubset(universe, std::move(out));
}

std::uint64_t KSubset::rank() const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
        r += binomial(elems[i] - 1, static_cast<int>(i) + 1);
    return r;
}

KSubset KSubset::unrank(int universe, int k, std::uint64_t rank) {
    if (k < 0 || k > universe) throw std::invalid_argument("KSubset::unrank: k out of range");
    if (rank >= binomial(universe, k)) throw std::invalid_argument("KSubset::unrank: rank out of range");
    std::vector<int> elems(k);
    for (int i = k; i >= 1; --i) {
        // Largest c with C(c, i) <= rank; element is c + 1.
        int c = i - 1;
        while (binomial(c + 1, i) <= rank) ++c;
        elems[i - 1] = c + 1;
        rank -= binomial(c, i);
    }
    return KSubset(universe, std::move(elems));
}

std::string KSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ',';
        os << elems[i];
    }
    os << '}';
    return os.str();
}

std::pair<int, int> pair_unrank(std::uint64_t rank) {
    int v = 1;
    while (pair_rank(0, v + 1) <= rank) ++v;
    int u = static_cast<int>(rank - pair_rank(0, v));
    return {u, v};
}

}  // namespace mdl
