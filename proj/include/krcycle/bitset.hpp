#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace krcycle {

// Fixed-capacity dynamic bitset over 64-bit words. Vertex sets everywhere
// in this project are instances of this; n stays small (desk scale), so a
// couple of words cover the common case.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~other.w_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & other.w_[k]) return true;
        return false;
    }

    int intersection_count(const Bitset& other) const {
        int c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k)
            c += __builtin_popcountll(w_[k] & other.w_[k]);
        return c;
    }

    Bitset& operator&=(const Bitset& other) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= other.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& other) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= other.w_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    // Clear all bits below index i.
    void reset_below(int i) {
        if (i <= 0) return;
        if (i >= n_) { std::fill(w_.begin(), w_.end(), 0); return; }
        std::size_t k = static_cast<std::size_t>(i) >> 6;
        for (std::size_t j = 0; j < k; ++j) w_[j] = 0;
        w_[k] &= ~std::uint64_t{0} << (i & 63);
    }

    // First set bit at index >= from, or -1.
    int find_next(int from) const {
        if (from >= n_) return -1;
        std::size_t k = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                int bit = static_cast<int>(k * 64) + __builtin_ctzll(w);
                return bit < n_ ? bit : -1;
            }
            if (++k >= w_.size()) return -1;
            w = w_[k];
        }
    }
    int find_first() const { return find_next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = find_first(); v >= 0; v = find_next(v + 1)) out.push_back(v);
        return out;
    }

    bool operator==(const Bitset& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace krcycle
