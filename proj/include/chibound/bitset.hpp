#pragma once

#include <cstdint>
#include <cassert>
#include <vector>

namespace chibound {

// Fixed-universe bitset sized at construction. Vertex sets and adjacency rows
// use this; the recognition scans are intersection-heavy, so everything is
// word-parallel.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static Bitset full(int n) {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    void set(int i) {
        assert(i >= 0 && i < n_);
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First set bit, or -1.
    int first() const { return next(-1); }

    // First set bit strictly after `i`, or -1.
    int next(int i) const {
        int start = i + 1;
        if (start >= n_) return -1;
        size_t wi = size_t(start) >> 6;
        uint64_t w = words_[wi] & (~uint64_t(0) << (start & 63));
        while (true) {
            if (w) return int(wi * 64 + __builtin_ctzll(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    static Bitset of(int n, const std::vector<int>& members) {
        Bitset b(n);
        for (int v : members) {
            assert(v >= 0 && v < n);
            b.set(v);
        }
        return b;
    }

private:
    int n_;
    std::vector<uint64_t> words_;
};

} // namespace chibound
