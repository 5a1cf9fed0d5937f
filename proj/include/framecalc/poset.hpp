#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "framecalc/bitset.hpp"
#include "framecalc/error.hpp"

namespace framecalc {

/// Finite poset on elements 0..n-1. The order is kept as row bitsets in both
/// directions; covers hold the transitive reduction, sorted.
struct Poset {
    int n = 0;
    std::vector<Bitset> up;    // up[i]   = { j : i <= j }
    std::vector<Bitset> down;  // down[i] = { j : j <= i }
    std::vector<std::pair<int, int>> covers;

    bool leq(int a, int b) const { return up[a].test(b); }
    bool lt(int a, int b) const { return a != b && up[a].test(b); }

    /// Height of an element: longest chain below it.
    int height(int a) const {
        int h = 0;
        for (int b = down[a].next(0); b >= 0; b = down[a].next(b + 1))
            if (b != a) h = std::max(h, height(b) + 1);
        return h;
    }
};

namespace detail {

inline void derive_covers(Poset& p) {
    p.covers.clear();
    for (int a = 0; a < p.n; ++a)
        for (int b = p.up[a].next(0); b >= 0; b = p.up[a].next(b + 1)) {
            if (a == b) continue;
            // a -< b iff nothing lies strictly between.
            Bitset between = p.up[a] & p.down[b];
            between.reset(a);
            between.reset(b);
            if (between.none()) p.covers.emplace_back(a, b);
        }
    std::sort(p.covers.begin(), p.covers.end());
}

}  // namespace detail

/// Builds a poset as the reflexive-transitive closure of a cover relation.
/// Throws CycleDetected / IndexOutOfRange.
inline Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0) fail(Errc::index_out_of_range, "negative element count");
    Poset p;
    p.n = n;
    p.up.assign(n, Bitset(n));
    for (auto [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail_witness(Errc::index_out_of_range,
                         "cover index out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")",
                         {a, b});
        p.up[a].set(b);
    }
    for (int i = 0; i < n; ++i) p.up[i].set(i);
    // Warshall closure on rows.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.up[i].test(k)) p.up[i] |= p.up[k];
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p.up[a].test(b) && p.up[b].test(a))
                fail_witness(Errc::cycle_detected,
                             "cycle through elements " + std::to_string(a) + " and " + std::to_string(b),
                             {a, b});
    p.down.assign(n, Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int b = p.up[a].next(0); b >= 0; b = p.up[a].next(b + 1)) p.down[b].set(a);
    detail::derive_covers(p);
    return p;
}

/// Builds a poset directly from a full order matrix given as up-rows.
/// The matrix must already be reflexive, antisymmetric and transitive.
inline Poset poset_from_leq(std::vector<Bitset> up_rows) {
    Poset p;
    p.n = (int)up_rows.size();
    p.up = std::move(up_rows);
    for (int i = 0; i < p.n; ++i) {
        if (!p.up[i].test(i)) fail(Errc::validation_error, "order matrix not reflexive");
    }
    for (int a = 0; a < p.n; ++a)
        for (int b = p.up[a].next(0); b >= 0; b = p.up[a].next(b + 1)) {
            if (a != b && p.up[b].test(a))
                fail_witness(Errc::validation_error, "order matrix not antisymmetric", {a, b});
            if (!p.up[b].is_subset_of(p.up[a]))
                fail_witness(Errc::validation_error, "order matrix not transitive", {a, b});
        }
    p.down.assign(p.n, Bitset(p.n));
    for (int a = 0; a < p.n; ++a)
        for (int b = p.up[a].next(0); b >= 0; b = p.up[a].next(b + 1)) p.down[b].set(a);
    detail::derive_covers(p);
    return p;
}

/// Restriction of p to the elements in keep, relabelled in ascending order.
inline Poset subposet(const Poset& p, const Bitset& keep) {
    std::vector<int> elems;
    for (int i = keep.next(0); i >= 0; i = keep.next(i + 1)) elems.push_back(i);
    int m = (int)elems.size();
    std::vector<Bitset> rows(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (p.leq(elems[i], elems[j])) rows[i].set(j);
    return poset_from_leq(std::move(rows));
}

/// Canonical form: the lexicographically least row-major matrix string over
/// all permutations. Only intended for small posets.
inline std::string poset_canonical_form(const Poset& p) {
    if (p.n > 8) fail_budget("canonical form limited to posets with at most 8 elements", (size_t)p.n);
    std::vector<int> perm(p.n);
    for (int i = 0; i < p.n; ++i) perm[i] = i;
    std::string best;
    std::string cur((size_t)p.n * p.n, '0');
    do {
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j)
                cur[(size_t)i * p.n + j] = p.leq(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (p.n == 0) best = "";
    return std::to_string(p.n) + ":" + best;
}

inline bool posets_isomorphic(const Poset& a, const Poset& b) {
    if (a.n != b.n) return false;
    return poset_canonical_form(a) == poset_canonical_form(b);
}

}  // namespace framecalc
