#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace framecalc {

/// Fixed-universe dynamic bitset. Binary operations require both operands
/// to range over the same universe size.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset full(int n) {
        Bitset b(n);
        for (auto& w : b.w_) w = ~uint64_t{0};
        b.trim();
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Smallest set bit >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        uint64_t cur = w_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + __builtin_ctzll(cur);
            if (++wi >= (int)w_.size()) return -1;
            cur = w_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    /// Total order: universe size first, then value as a big unsigned integer.
    std::strong_ordering operator<=>(const Bitset& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        for (size_t i = w_.size(); i-- > 0;)
            if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    const std::vector<uint64_t>& words() const { return w_; }

    /// "{0,2,5}" rendering, members ascending.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i = next(0); i >= 0; i = next(i + 1)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
        if (n_ == 0 && !w_.empty()) w_.assign(w_.size(), 0);
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace framecalc
