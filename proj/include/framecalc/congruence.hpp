#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "framecalc/hom.hpp"

namespace framecalc {

/// Frame congruence, stored as its nucleus: nu[x] is the largest element of
/// the class of x. Equality and ordering compare nu arrays lexicographically;
/// that is the canonical form used for deterministic output everywhere.
class Congruence {
public:
    Congruence(FramePtr frame, std::vector<int> nu) : frame_(std::move(frame)), nu_(std::move(nu)) {}

    const FramePtr& frame_ptr() const { return frame_; }
    const Frame& frame() const { return *frame_; }
    int size() const { return frame_->size(); }

    int nu(int x) const { return nu_[x]; }
    const std::vector<int>& nu_array() const { return nu_; }
    bool related(int x, int y) const { return nu_[x] == nu_[y]; }

    /// Blocks as sorted member lists, ordered by smallest member.
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out;
        std::vector<int> at(frame_->size(), -1);
        for (int x = 0; x < frame_->size(); ++x) {
            int r = nu_[x];
            if (at[r] < 0) {
                at[r] = (int)out.size();
                out.emplace_back();
            }
            out[at[r]].push_back(x);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const Congruence& o) const { return frame_.get() == o.frame_.get() && nu_ == o.nu_; }
    std::strong_ordering operator<=>(const Congruence& o) const { return nu_ <=> o.nu_; }

private:
    FramePtr frame_;
    std::vector<int> nu_;
};

/// Nucleus laws: inflationary, idempotent, binary-meet preserving.
/// Returns a description of the first violation, if any.
inline std::optional<std::string> nucleus_violation(const Frame& f, const std::vector<int>& nu) {
    if ((int)nu.size() != f.size()) return "nu length mismatch";
    for (int x : nu)
        if (x < 0 || x >= f.size()) return "nu value out of range";
    for (int x = 0; x < f.size(); ++x)
        if (!f.leq(x, nu[x]))
            return "not inflationary at " + std::to_string(x);
    for (int x = 0; x < f.size(); ++x)
        if (nu[nu[x]] != nu[x]) return "not idempotent at " + std::to_string(x);
    for (int x = 0; x < f.size(); ++x)
        for (int y = x + 1; y < f.size(); ++y)
            if (nu[f.meet(x, y)] != f.meet(nu[x], nu[y]))
                return "meet not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    return std::nullopt;
}

inline Congruence diagonal_congruence(FramePtr f) {
    std::vector<int> nu(f->size());
    std::iota(nu.begin(), nu.end(), 0);
    return Congruence(std::move(f), std::move(nu));
}

inline Congruence all_congruence(FramePtr f) {
    std::vector<int> nu(f->size(), f->top());
    return Congruence(std::move(f), std::move(nu));
}

namespace detail {

// nu from an equivalence relation whose classes are closed under join:
// each class collapses to the join of its members.
inline std::vector<int> nu_from_class_ids(const Frame& f, const std::vector<int>& cls) {
    const int n = f.size();
    std::vector<int> max_of(n, -1);
    for (int x = 0; x < n; ++x) {
        int& m = max_of[cls[x]];
        m = m < 0 ? x : f.join(m, x);
    }
    std::vector<int> nu(n);
    for (int x = 0; x < n; ++x) nu[x] = max_of[cls[x]];
    return nu;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
};

}  // namespace detail

/// Least congruence containing every pair: union-find seeding followed by a
/// semi-naive closure that rescans only freshly merged pairs against all
/// meet/join contexts.
inline Congruence congruence_from_pairs(FramePtr f, const std::vector<std::pair<int, int>>& pairs) {
    const int n = f->size();
    detail::UnionFind uf(n);
    std::vector<std::pair<int, int>> work;
    auto unite = [&](int x, int y) {
        int rx = uf.find(x), ry = uf.find(y);
        if (rx == ry) return;
        uf.parent[rx] = ry;
        work.emplace_back(x, y);
    };
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail_witness(Errc::index_out_of_range, "pair index out of range", {a, b});
        unite(a, b);
    }
    for (size_t i = 0; i < work.size(); ++i) {
        auto [x, y] = work[i];
        for (int z = 0; z < n; ++z) {
            unite(f->meet(x, z), f->meet(y, z));
            unite(f->join(x, z), f->join(y, z));
        }
    }
    std::vector<int> cls(n);
    for (int x = 0; x < n; ++x) cls[x] = uf.find(x);
    return Congruence(f, detail::nu_from_class_ids(*f, cls));
}

/// Principal closed congruence: x ~ y iff x \/ a = y \/ a.
inline Congruence nabla(FramePtr f, int a) {
    std::vector<int> nu(f->size());
    for (int x = 0; x < f->size(); ++x) nu[x] = f->join(x, a);
    return Congruence(std::move(f), std::move(nu));
}

/// Open congruence: x ~ y iff x /\ a = y /\ a; nu is the per-class maximum.
inline Congruence delta(FramePtr f, int a) {
    const int n = f->size();
    std::vector<int> cls(n);
    for (int x = 0; x < n; ++x) cls[x] = f->meet(x, a);
    auto nu = detail::nu_from_class_ids(*f, cls);
    return Congruence(std::move(f), std::move(nu));
}

/// <(a,b)> for a general pair, normalised through (a /\ b, a \/ b).
inline Congruence principal_congruence(FramePtr f, int a, int b) {
    int lo = f->meet(a, b), hi = f->join(a, b);
    // <(lo,hi)> = nabla(hi) /\ delta(lo): x ~ y iff both components agree.
    const int n = f->size();
    std::vector<int> key(n);
    for (int x = 0; x < n; ++x) key[x] = f->join(x, hi) * n + f->meet(x, lo);
    std::vector<int> remap(n * n + n, -1), cls(n);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (remap[key[x]] < 0) remap[key[x]] = next++;
        cls[x] = remap[key[x]];
    }
    auto nu = detail::nu_from_class_ids(*f, cls);
    return Congruence(std::move(f), std::move(nu));
}

inline void require_same_frame(const Congruence& c, const Congruence& d) {
    if (c.frame_ptr().get() != d.frame_ptr().get())
        fail(Errc::frame_mismatch, "congruences live on different frames");
}

/// Intersection of the two relations.
inline Congruence meet(const Congruence& c, const Congruence& d) {
    require_same_frame(c, d);
    const Frame& f = c.frame();
    const int n = f.size();
    std::vector<int> cls(n);
    std::vector<std::pair<int, int>> keys(n);
    for (int x = 0; x < n; ++x) keys[x] = {c.nu(x), d.nu(x)};
    for (int x = 0; x < n; ++x) {
        cls[x] = x;
        for (int y = 0; y < x; ++y)
            if (keys[y] == keys[x]) {
                cls[x] = cls[y];
                break;
            }
    }
    return Congruence(c.frame_ptr(), detail::nu_from_class_ids(f, cls));
}

/// Congruence generated by the union of the two relations.
inline Congruence join(const Congruence& c, const Congruence& d) {
    require_same_frame(c, d);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < c.size(); ++x) {
        pairs.emplace_back(x, c.nu(x));
        pairs.emplace_back(x, d.nu(x));
    }
    return congruence_from_pairs(c.frame_ptr(), pairs);
}

/// nabla(a) \/ C in closed form: x ~ y iff (x \/ a, y \/ a) in C.
inline Congruence join_with_nabla(const Congruence& c, int a) {
    const Frame& f = c.frame();
    const int n = f.size();
    std::vector<int> cls(n);
    for (int x = 0; x < n; ++x) cls[x] = c.nu(f.join(x, a));
    return Congruence(c.frame_ptr(), detail::nu_from_class_ids(f, cls));
}

/// delta(a) \/ C in closed form: x ~ y iff (x /\ a, y /\ a) in C.
inline Congruence join_with_delta(const Congruence& c, int a) {
    const Frame& f = c.frame();
    const int n = f.size();
    std::vector<int> cls(n);
    for (int x = 0; x < n; ++x) cls[x] = c.nu(f.meet(x, a));
    return Congruence(c.frame_ptr(), detail::nu_from_class_ids(f, cls));
}

/// C <= D as congruences (C refines D).
inline bool congruence_leq(const Congruence& c, const Congruence& d) {
    require_same_frame(c, d);
    for (int x = 0; x < c.size(); ++x)
        if (d.nu(c.nu(x)) != d.nu(x)) return false;
    return true;
}

/// Largest closed congruence below C. Finitely every ideal is principal, so
/// this is nabla(nu[0]).
inline Congruence closure(const Congruence& c) { return nabla(c.frame_ptr(), c.nu(c.frame().bottom())); }

struct QuotientResult {
    FramePtr frame;
    FrameHom map;  // x -> index of its class
};

/// Quotient frame on the class-maximum representatives, ordered as in the
/// source frame.
inline QuotientResult quotient(FramePtr f, const Congruence& c) {
    if (c.frame_ptr().get() != f.get()) fail(Errc::frame_mismatch, "congruence lives on a different frame");
    std::vector<int> reps;
    for (int x = 0; x < f->size(); ++x)
        if (c.nu(x) == x) reps.push_back(x);
    const int m = (int)reps.size();
    std::vector<int> rep_index(f->size(), -1);
    for (int i = 0; i < m; ++i) rep_index[reps[i]] = i;
    std::vector<Bitset> rows(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (f->leq(reps[i], reps[j])) rows[i].set(j);
    FramePtr q = frame_from_poset(poset_from_leq(std::move(rows)));
    FrameHom h{f, q, std::vector<int>(f->size())};
    for (int x = 0; x < f->size(); ++x) h.map[x] = rep_index[c.nu(x)];
    return {q, std::move(h)};
}

/// Kernel of a frame homomorphism as a congruence on its source.
inline Congruence hom_kernel(const FrameHom& h) {
    const int n = h.source->size();
    std::vector<int> cls(n), seen(h.target->size(), -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (seen[h.map[x]] < 0) seen[h.map[x]] = next++;
        cls[x] = seen[h.map[x]];
    }
    return Congruence(h.source, detail::nu_from_class_ids(*h.source, cls));
}

/// Largest dense congruence: kernel of x -> x**.
inline Congruence largest_dense(FramePtr f) {
    std::vector<int> nu(f->size());
    for (int x = 0; x < f->size(); ++x) nu[x] = f->pseudocomplement(f->pseudocomplement(x));
    return Congruence(std::move(f), std::move(nu));
}

/// Clear congruence of a: kernel of x -> (x -> a), the largest congruence
/// with closure nabla(a). nu[x] = (x -> a) -> a.
inline Congruence clear_congruence(FramePtr f, int a) {
    std::vector<int> nu(f->size());
    for (int x = 0; x < f->size(); ++x) nu[x] = f->heyting(f->heyting(x, a), a);
    return Congruence(std::move(f), std::move(nu));
}

inline bool is_dense(const Congruence& c) { return c.nu(c.frame().bottom()) == c.frame().bottom(); }

/// C dense in D, for D <= C: the closure of C lies below D.
inline bool is_dense_in(const Congruence& c, const Congruence& d) {
    if (!congruence_leq(d, c)) fail(Errc::validation_error, "is_dense_in requires D <= C");
    return congruence_leq(closure(c), d);
}

inline bool is_clear(const Congruence& c) {
    return c == clear_congruence(c.frame_ptr(), c.nu(c.frame().bottom()));
}

/// Rare congruence: every nontrivial interval [a,b] contains a collapsed
/// subinterval a <= c < d <= b.
inline bool is_rare(const Congruence& c) {
    const Frame& f = c.frame();
    for (int a = 0; a < f.size(); ++a)
        for (int b = 0; b < f.size(); ++b) {
            if (!f.leq(a, b) || a == b) continue;
            Bitset interval = f.up_set(a) & f.down_set(b);
            bool found = false;
            for (int x = interval.next(0); x >= 0 && !found; x = interval.next(x + 1))
                for (int y = interval.next(0); y >= 0 && !found; y = interval.next(y + 1))
                    if (x != y && f.leq(x, y) && c.related(x, y)) found = true;
            if (!found) return false;
        }
    return true;
}

/// The elements a with clear_congruence(a) >= C. The meet of those clear
/// congruences recovers C.
inline Bitset clear_decomposition(const Congruence& c) {
    const Frame& f = c.frame();
    Bitset out(f.size());
    for (int a = 0; a < f.size(); ++a)
        if (congruence_leq(c, clear_congruence(c.frame_ptr(), a))) out.set(a);
    return out;
}

/// Least b >= a with (b,1) in the clear congruence of a. Always exists on a
/// finite frame; NoLeastWitness is asserted unreachable.
inline int beazer_macnab_witness(FramePtr f, int a) {
    const int top_img = f->heyting(f->top(), a);
    Bitset s(f->size());
    for (int b = 0; b < f->size(); ++b)
        if (f->leq(a, b) && f->heyting(b, a) == top_img) s.set(b);
    int least = f->meet_of(s);
    if (!s.test(least)) fail(Errc::no_least_witness, "no least witness for element " + std::to_string(a));
    return least;
}

/// D \/ C computed as the clear congruence of a**, where nabla(a) is the
/// closure of C.
inline Congruence join_with_largest_dense(const Congruence& c) {
    const Frame& f = c.frame();
    int a = c.nu(f.bottom());
    return clear_congruence(c.frame_ptr(), f.pseudocomplement(f.pseudocomplement(a)));
}

}  // namespace framecalc
