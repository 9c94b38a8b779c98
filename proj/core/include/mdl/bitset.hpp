#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace mdl {

// Fixed-size bitset over 64-bit words. Solvers use it both for vertex sets
// (neighborhood intersection) and for constraint-coverage masks, so the hot
// operations are word-parallel and inline.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

    static Bitset all(int n_bits) {
        Bitset b(n_bits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    int size() const { return n_bits_; }

    void set(int i) {
        assert(i >= 0 && i < n_bits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < n_bits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(int i) const {
        assert(i >= 0 && i < n_bits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // Index of the lowest set bit, -1 when empty.
    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>((i << 6) + std::countr_zero(words_[i]));
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(n_bits_ == o.n_bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    int count_and(const Bitset& o) const {
        assert(n_bits_ == o.n_bits_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>((i << 6) + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_set([&](int i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset& o) const = default;

private:
    void trim() {
        int r = n_bits_ & 63;
        if (r != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    int n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mdl
