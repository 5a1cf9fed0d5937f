#pragma once

#include <cmath>
#include <vector>

#include "framecalc/frame.hpp"

namespace framecalc {

/// Frame homomorphism: preserves bottom, top, binary meets and binary joins
/// (on finite frames that covers all joins).
struct FrameHom {
    FramePtr source;
    FramePtr target;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }

    /// Throws NotAHom with the violating pair and operation.
    void validate() const {
        if ((int)map.size() != source->size())
            fail(Errc::not_a_hom, "map length does not match source size");
        for (int x : map)
            if (x < 0 || x >= target->size()) fail(Errc::index_out_of_range, "map value out of range");
        if (map[source->bottom()] != target->bottom())
            fail_witness(Errc::not_a_hom, "bottom not preserved", {source->bottom()});
        if (map[source->top()] != target->top())
            fail_witness(Errc::not_a_hom, "top not preserved", {source->top()});
        for (int x = 0; x < source->size(); ++x)
            for (int y = x + 1; y < source->size(); ++y) {
                if (map[source->meet(x, y)] != target->meet(map[x], map[y]))
                    fail_witness(Errc::not_a_hom,
                                 "meet not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")",
                                 {x, y});
                if (map[source->join(x, y)] != target->join(map[x], map[y]))
                    fail_witness(Errc::not_a_hom,
                                 "join not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")",
                                 {x, y});
            }
    }

    bool is_valid() const {
        try {
            validate();
            return true;
        } catch (const Error&) {
            return false;
        }
    }

    bool is_surjective() const {
        std::vector<char> hit(target->size(), 0);
        for (int x : map) hit[x] = 1;
        for (char h : hit)
            if (!h) return false;
        return true;
    }

    bool is_injective() const {
        std::vector<char> hit(target->size(), 0);
        for (int x : map) {
            if (hit[x]) return false;
            hit[x] = 1;
        }
        return true;
    }

    bool is_dense() const {
        for (int x = 0; x < source->size(); ++x)
            if (map[x] == target->bottom() && x != source->bottom()) return false;
        return true;
    }

    bool is_codense() const {
        for (int x = 0; x < source->size(); ++x)
            if (map[x] == target->top() && x != source->top()) return false;
        return true;
    }

    /// Right adjoint: f_*(y) = join of { x : f(x) <= y }.
    std::vector<int> right_adjoint() const {
        std::vector<int> adj(target->size());
        for (int y = 0; y < target->size(); ++y) {
            int r = source->bottom();
            for (int x = 0; x < source->size(); ++x)
                if (target->leq(map[x], y)) r = source->join(r, x);
            adj[y] = r;
        }
        return adj;
    }

    /// Image as an element set of the target.
    Bitset image() const {
        Bitset img(target->size());
        for (int x : map) img.set(x);
        return img;
    }
};

inline FrameHom identity_hom(FramePtr f) {
    FrameHom h{f, f, std::vector<int>(f->size())};
    for (int i = 0; i < f->size(); ++i) h.map[i] = i;
    return h;
}

inline FrameHom compose(const FrameHom& g, const FrameHom& f) {
    if (f.target.get() != g.source.get()) fail(Errc::frame_mismatch, "homs not composable");
    FrameHom h{f.source, g.target, std::vector<int>(f.map.size())};
    for (size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
    return h;
}

/// All frame homomorphisms from a to b, in lexicographic map order.
/// Brute force over candidate maps; intended for small frames only.
inline std::vector<FrameHom> enumerate_homs(FramePtr a, FramePtr b) {
    std::vector<FrameHom> out;
    const int n = a->size(), m = b->size();
    if ((size_t)std::pow((double)m, (double)n) > 4e7)
        fail_budget("hom enumeration too large", (size_t)std::pow((double)m, (double)n));
    std::vector<int> cand(n, 0);
    while (true) {
        FrameHom h{a, b, cand};
        if (h.is_valid()) out.push_back(h);
        int i = n - 1;
        while (i >= 0 && cand[i] == m - 1) cand[i--] = 0;
        if (i < 0) break;
        ++cand[i];
    }
    return out;
}

}  // namespace framecalc
