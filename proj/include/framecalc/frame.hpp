#pragma once

#include <memory>
#include <string>
#include <vector>

#include "framecalc/poset.hpp"

namespace framecalc {

class Frame;
using FramePtr = std::shared_ptr<const Frame>;

/// Finite frame: a bounded distributive lattice over a validated poset.
/// Immutable after construction; derived caches are filled eagerly.
class Frame {
public:
    /// Validates lattice laws and distributivity.
    /// Throws NotALattice (witness pair) or NotDistributive (witness triple).
    static FramePtr from_poset(Poset p) { return FramePtr(new Frame(std::move(p))); }

    int size() const { return poset_.n; }
    const Poset& poset() const { return poset_; }
    bool leq(int a, int b) const { return poset_.leq(a, b); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int meet(int a, int b) const { return meet_[(size_t)a * poset_.n + b]; }
    int join(int a, int b) const { return join_[(size_t)a * poset_.n + b]; }

    const Bitset& up_set(int a) const { return poset_.up[a]; }
    const Bitset& down_set(int a) const { return poset_.down[a]; }

    int join_of(const Bitset& s) const {
        int r = bottom_;
        for (int i = s.next(0); i >= 0; i = s.next(i + 1)) r = join(r, i);
        return r;
    }
    int meet_of(const Bitset& s) const {
        int r = top_;
        for (int i = s.next(0); i >= 0; i = s.next(i + 1)) r = meet(r, i);
        return r;
    }

    /// Heyting arrow: the largest c with a /\ c <= b.
    int heyting(int a, int b) const {
        int r = bottom_;
        for (int c = 0; c < poset_.n; ++c)
            if (leq(meet(a, c), b)) r = join(r, c);
        return r;
    }

    int pseudocomplement(int a) const { return pseudo_[a]; }

    bool rather_below(int a, int b) const { return join(pseudo_[a], b) == top_; }
    bool completely_below(int a, int b) const { return cmp_below_[a].test(b); }

    const Bitset& join_irreducibles() const { return join_irr_; }
    const Bitset& meet_irreducibles() const { return meet_irr_; }
    const Bitset& primes() const { return primes_; }
    const Bitset& complemented_part() const { return complemented_; }
    const Bitset& dense_elements() const { return dense_; }

    bool is_boolean() const { return complemented_.count() == poset_.n; }

    bool is_zero_dimensional() const {
        for (int a = 0; a < poset_.n; ++a)
            if (join_of(down_set(a) & complemented_) != a) return false;
        return true;
    }

private:
    explicit Frame(Poset p) : poset_(std::move(p)) {
        const int n = poset_.n;
        if (n == 0) fail(Errc::not_a_lattice, "empty poset has no bounds");
        bottom_ = top_ = -1;
        for (int i = 0; i < n; ++i) {
            if (poset_.up[i].count() == n) bottom_ = i;
            if (poset_.down[i].count() == n) top_ = i;
        }
        if (bottom_ < 0) fail(Errc::not_a_lattice, "no least element");
        if (top_ < 0) fail(Errc::not_a_lattice, "no greatest element");

        meet_.assign((size_t)n * n, -1);
        join_.assign((size_t)n * n, -1);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                int m = bound(poset_.down[a] & poset_.down[b], /*greatest=*/true);
                if (m < 0)
                    fail_witness(Errc::not_a_lattice,
                                 "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has no meet",
                                 {a, b});
                int j = bound(poset_.up[a] & poset_.up[b], /*greatest=*/false);
                if (j < 0)
                    fail_witness(Errc::not_a_lattice,
                                 "pair (" + std::to_string(a) + "," + std::to_string(b) + ") has no join",
                                 {a, b});
                meet_[(size_t)a * n + b] = meet_[(size_t)b * n + a] = m;
                join_[(size_t)a * n + b] = join_[(size_t)b * n + a] = j;
            }

        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
                        fail_witness(Errc::not_distributive,
                                     "distributivity fails at (" + std::to_string(x) + "," + std::to_string(y) +
                                         "," + std::to_string(z) + ")",
                                     {x, y, z});

        pseudo_.resize(n);
        for (int a = 0; a < n; ++a) pseudo_[a] = heyting(a, bottom_);

        join_irr_ = Bitset(n);
        meet_irr_ = Bitset(n);
        for (int a = 0; a < n; ++a) {
            Bitset below = poset_.down[a];
            below.reset(a);
            if (a != bottom_ && join_of(below) != a) join_irr_.set(a);
            Bitset above = poset_.up[a];
            above.reset(a);
            if (a != top_ && meet_of(above) != a) meet_irr_.set(a);
        }

        primes_ = Bitset(n);
        for (int p = 0; p < n; ++p) {
            if (p == top_) continue;
            bool prime = true;
            for (int a = 0; a < n && prime; ++a)
                for (int b = 0; b < n && prime; ++b)
                    if (leq(meet(a, b), p) && !leq(a, p) && !leq(b, p)) prime = false;
            if (prime) primes_.set(p);
        }

        complemented_ = Bitset(n);
        dense_ = Bitset(n);
        for (int a = 0; a < n; ++a) {
            if (meet(a, pseudo_[a]) == bottom_ && join(a, pseudo_[a]) == top_) complemented_.set(a);
            if (pseudo_[a] == bottom_) dense_.set(a);
        }

        // Completely-below: greatest interpolating relation inside rather-below,
        // computed as a shrinking fixpoint.
        cmp_below_.assign(n, Bitset(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rather_below(a, b)) cmp_below_[a].set(b);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < n; ++a)
                for (int b = cmp_below_[a].next(0); b >= 0; b = cmp_below_[a].next(b + 1)) {
                    bool interpolates = false;
                    for (int c = cmp_below_[a].next(0); c >= 0 && !interpolates; c = cmp_below_[a].next(c + 1))
                        if (cmp_below_[c].test(b)) interpolates = true;
                    if (!interpolates) {
                        cmp_below_[a].reset(b);
                        changed = true;
                    }
                }
        }
    }

    // The greatest (or least) element of s, or -1.
    int bound(const Bitset& s, bool greatest) const {
        for (int c = s.next(0); c >= 0; c = s.next(c + 1))
            if (s.is_subset_of(greatest ? poset_.down[c] : poset_.up[c])) return c;
        return -1;
    }

    Poset poset_;
    std::vector<int> meet_, join_;
    int bottom_ = -1, top_ = -1;
    std::vector<int> pseudo_;
    Bitset join_irr_, meet_irr_, primes_, complemented_, dense_;
    std::vector<Bitset> cmp_below_;
};

inline FramePtr frame_from_poset(Poset p) { return Frame::from_poset(std::move(p)); }

/// Closure of seed under binary meet and join, with bottom and top adjoined.
inline Bitset subframe_closure(const Frame& f, Bitset seed) {
    seed.set(f.bottom());
    seed.set(f.top());
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = seed.next(0); a >= 0; a = seed.next(a + 1))
            for (int b = seed.next(a); b >= 0; b = seed.next(b + 1)) {
                int m = f.meet(a, b), j = f.join(a, b);
                if (!seed.test(m)) {
                    seed.set(m);
                    grew = true;
                }
                if (!seed.test(j)) {
                    seed.set(j);
                    grew = true;
                }
            }
    }
    return seed;
}

/// Canonical form for finite distributive lattices: the canonical form of the
/// subposet of join-irreducibles (Birkhoff duality), tagged with the size.
inline std::string frame_canonical_form(const Frame& f) {
    return "L" + std::to_string(f.size()) + "/" + poset_canonical_form(subposet(f.poset(), f.join_irreducibles()));
}

inline bool frames_isomorphic(const Frame& a, const Frame& b) {
    if (a.size() != b.size()) return false;
    return frame_canonical_form(a) == frame_canonical_form(b);
}

/// All frame isomorphisms a -> b, each as an element map. Isomorphisms of
/// finite distributive lattices restrict to order isomorphisms of the
/// join-irreducible subposets and are recovered from them by joins.
inline std::vector<std::vector<int>> frame_isomorphisms(const Frame& a, const Frame& b) {
    std::vector<std::vector<int>> out;
    if (a.size() != b.size()) return out;
    std::vector<int> ja, jb;
    for (int i = a.join_irreducibles().next(0); i >= 0; i = a.join_irreducibles().next(i + 1)) ja.push_back(i);
    for (int i = b.join_irreducibles().next(0); i >= 0; i = b.join_irreducibles().next(i + 1)) jb.push_back(i);
    if (ja.size() != jb.size()) return out;
    std::vector<int> perm(ja.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
    do {
        bool order_iso = true;
        for (size_t i = 0; i < ja.size() && order_iso; ++i)
            for (size_t j = 0; j < ja.size() && order_iso; ++j)
                if (a.leq(ja[i], ja[j]) != b.leq(jb[perm[i]], jb[perm[j]])) order_iso = false;
        if (!order_iso) continue;
        std::vector<int> m(a.size());
        for (int x = 0; x < a.size(); ++x) {
            int img = b.bottom();
            for (size_t i = 0; i < ja.size(); ++i)
                if (a.leq(ja[i], x)) img = b.join(img, jb[perm[i]]);
            m[x] = img;
        }
        // Verify: must be a bijective order embedding.
        bool ok = true;
        std::vector<char> hit(b.size(), 0);
        for (int x = 0; x < a.size() && ok; ++x) {
            if (hit[m[x]]) ok = false;
            hit[m[x]] = 1;
        }
        for (int x = 0; x < a.size() && ok; ++x)
            for (int y = 0; y < a.size() && ok; ++y)
                if (a.leq(x, y) != b.leq(m[x], m[y])) ok = false;
        if (ok) out.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace framecalc
