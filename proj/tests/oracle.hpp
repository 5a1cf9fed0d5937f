#pragma once

// Brute-force oracles for the test suites. These deliberately avoid the
// library's congruence machinery: congruences are found by scanning all set
// partitions, and generated congruences by intersecting the scan results.

#include <functional>
#include <vector>

#include "framecalc/framecalc.hpp"

namespace oracle {

using namespace framecalc;

/// Enumerates all set partitions of {0..n-1} as class-id vectors, in
/// restricted-growth-string order.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> rgs(n, 0);
    if (n == 0) {
        fn(rgs);
        return;
    }
    while (true) {
        fn(rgs);
        int i = n - 1;
        while (i > 0) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
            if (rgs[i] <= cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
}

/// A partition is a congruence iff related pairs stay related under meet and
/// join with every element.
inline bool partition_is_congruence(const Frame& f, const std::vector<int>& cls) {
    const int n = f.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (cls[x] != cls[y]) continue;
            for (int z = 0; z < n; ++z) {
                if (cls[f.meet(x, z)] != cls[f.meet(y, z)]) return false;
                if (cls[f.join(x, z)] != cls[f.join(y, z)]) return false;
            }
        }
    return true;
}

inline Congruence congruence_from_partition(const FramePtr& f, const std::vector<int>& cls) {
    const int n = f->size();
    std::vector<int> max_of(n, -1);
    for (int x = 0; x < n; ++x) {
        int& m = max_of[cls[x]];
        m = m < 0 ? x : f->join(m, x);
    }
    std::vector<int> nu(n);
    for (int x = 0; x < n; ++x) nu[x] = max_of[cls[x]];
    return Congruence(f, std::move(nu));
}

/// Every congruence on f, by scanning all set partitions. Sorted by nu array.
inline std::vector<Congruence> all_congruences(const FramePtr& f) {
    std::vector<Congruence> out;
    for_each_partition(f->size(), [&](const std::vector<int>& cls) {
        if (partition_is_congruence(*f, cls)) out.push_back(congruence_from_partition(f, cls));
    });
    std::sort(out.begin(), out.end(),
              [](const Congruence& a, const Congruence& b) { return a.nu_array() < b.nu_array(); });
    return out;
}

/// Least congruence containing the pairs: the intersection of all scanned
/// congruences that contain them.
inline Congruence generated(const FramePtr& f, const std::vector<std::pair<int, int>>& pairs) {
    const int n = f->size();
    std::vector<Congruence> containing;
    for (const Congruence& c : all_congruences(f)) {
        bool ok = true;
        for (auto [a, b] : pairs)
            if (!c.related(a, b)) ok = false;
        if (ok) containing.push_back(c);
    }
    // Intersection relation; it is again a congruence.
    std::vector<int> cls(n);
    for (int x = 0; x < n; ++x) {
        cls[x] = x;
        for (int y = 0; y < x; ++y) {
            bool all_related = true;
            for (const Congruence& c : containing)
                if (!c.related(x, y)) all_related = false;
            if (all_related) {
                cls[x] = cls[y];
                break;
            }
        }
    }
    return congruence_from_partition(f, cls);
}

/// Heyting arrow by raw scan: the greatest c with a /\ c <= b. Scans all
/// elements and insists the candidate set has a greatest member.
inline int arrow_by_scan(const Frame& f, int a, int b) {
    int best = -1;
    for (int c = 0; c < f.size(); ++c) {
        if (!f.leq(f.meet(a, c), b)) continue;
        if (best < 0 || f.leq(best, c)) best = c;
    }
    for (int c = 0; c < f.size(); ++c)
        if (f.leq(f.meet(a, c), b) && !f.leq(c, best)) return -1;
    return best;
}

/// Number of posets on n labelled points up to isomorphism, by scanning all
/// relation matrices. Only sane for n <= 3 (2^(n*n) candidates).
inline int count_posets_raw(int n) {
    std::vector<std::string> seen;
    const int bits = n * n;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
        std::vector<Bitset> rows(n, Bitset(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mask & (1LL << (i * n + j))) rows[i].set(j);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (!rows[i].test(i)) ok = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (i != j && rows[i].test(j) && rows[j].test(i)) ok = false;
                if (rows[i].test(j) && !rows[j].is_subset_of(rows[i])) ok = false;
            }
        if (!ok) continue;
        Poset p = poset_from_leq(std::move(rows));
        std::string key = poset_canonical_form(p);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) seen.push_back(key);
    }
    return (int)seen.size();
}

/// Distributive-lattice posets on n labelled points up to isomorphism, by raw
/// scan. Only sane for n <= 3.
inline int count_distributive_lattices_raw(int n) {
    std::vector<std::string> seen;
    const int bits = n * n;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
        std::vector<Bitset> rows(n, Bitset(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mask & (1LL << (i * n + j))) rows[i].set(j);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (!rows[i].test(i)) ok = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (i != j && rows[i].test(j) && rows[j].test(i)) ok = false;
                if (rows[i].test(j) && !rows[j].is_subset_of(rows[i])) ok = false;
            }
        if (!ok) continue;
        Poset p = poset_from_leq(std::move(rows));
        std::string key = poset_canonical_form(p);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        try {
            frame_from_poset(p);
        } catch (const Error&) {
            continue;
        }
        seen.push_back(key);
    }
    return (int)seen.size();
}

}  // namespace oracle
