#pragma once

#include <vector>

#include "framecalc/frame.hpp"

namespace framecalc {

/// Finite meet-semilattice with a top element.
struct MeetSemilattice {
    Poset poset;
    std::vector<int> meet;  // n*n table
    int top = -1;

    int size() const { return poset.n; }
    int meet_of(int a, int b) const { return meet[(size_t)a * poset.n + b]; }
};

/// Validates that every pair has a meet and that top is greatest.
inline MeetSemilattice meet_semilattice_from_poset(Poset p) {
    MeetSemilattice s;
    const int n = p.n;
    if (n == 0) fail(Errc::not_a_lattice, "empty meet-semilattice");
    s.top = -1;
    for (int i = 0; i < n; ++i)
        if (p.down[i].count() == n) s.top = i;
    if (s.top < 0) fail(Errc::not_a_lattice, "no greatest element");
    s.meet.assign((size_t)n * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Bitset lower = p.down[a] & p.down[b];
            int m = -1;
            for (int c = lower.next(0); c >= 0; c = lower.next(c + 1))
                if (lower.is_subset_of(p.down[c])) m = c;
            if (m < 0)
                fail_witness(Errc::not_a_lattice,
                             "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has no meet", {a, b});
            s.meet[(size_t)a * n + b] = s.meet[(size_t)b * n + a] = m;
        }
    s.poset = std::move(p);
    return s;
}

/// Free meet-semilattice on k generators: finite subsets of the generators
/// ordered by reverse inclusion (so meet is union and top is the empty set).
/// Element i is the subset with bit pattern i.
inline MeetSemilattice free_meet_semilattice(int k) {
    if (k < 0 || k > 5) fail_budget("free meet-semilattice limited to 5 generators", k < 0 ? 0 : (size_t)1 << k);
    const int n = 1 << k;
    std::vector<Bitset> rows(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i & j) == j) rows[i].set(j);  // i <= j iff j is a subset of i
    return meet_semilattice_from_poset(poset_from_leq(std::move(rows)));
}

/// Frame of downsets of a poset, ordered by inclusion. Elements are the
/// downsets sorted ascending by bit pattern; meet is intersection and join
/// is union.
inline FramePtr downset_frame(const Poset& p) {
    if (p.n > 20) fail_budget("downset frame limited to 20-element posets", (size_t)1 << p.n);
    std::vector<Bitset> downsets;
    const int total = 1 << p.n;
    for (int mask = 0; mask < total; ++mask) {
        Bitset d(p.n);
        for (int i = 0; i < p.n; ++i)
            if (mask & (1 << i)) d.set(i);
        bool closed = true;
        for (int i = d.next(0); i >= 0 && closed; i = d.next(i + 1))
            if (!p.down[i].is_subset_of(d)) closed = false;
        if (closed) downsets.push_back(std::move(d));
    }
    const int m = (int)downsets.size();
    std::vector<Bitset> rows(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (downsets[i].is_subset_of(downsets[j])) rows[i].set(j);
    return frame_from_poset(poset_from_leq(std::move(rows)));
}

/// Free frame on a meet-semilattice: the frame of its downsets.
inline FramePtr free_frame_on_semilattice(const MeetSemilattice& s) { return downset_frame(s.poset); }

}  // namespace framecalc
