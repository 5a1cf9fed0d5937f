#pragma once

#include <vector>

#include "framecalc/assembly.hpp"

namespace framecalc {

/// Biframe: a total frame with two designated generating subframes, held as
/// element sets over the total.
struct Biframe {
    FramePtr total;
    Bitset part1, part2;
};

struct BiframeHom {
    Biframe source;
    Biframe target;
    FrameHom map;  // between the totals

    int operator()(int x) const { return map(x); }

    void validate() const {
        map.validate();
        for (int i = source.part1.next(0); i >= 0; i = source.part1.next(i + 1))
            if (!target.part1.test(map(i)))
                fail_witness(Errc::not_a_hom, "first part not preserved", {i});
        for (int i = source.part2.next(0); i >= 0; i = source.part2.next(i + 1))
            if (!target.part2.test(map(i)))
                fail_witness(Errc::not_a_hom, "second part not preserved", {i});
    }
};

/// Throws NotABiframe with a witness element on closure or generation failure.
inline void validate_biframe(const Biframe& b) {
    const Frame& f = *b.total;
    for (const Bitset* part : {&b.part1, &b.part2}) {
        if (!part->test(f.bottom()) || !part->test(f.top()))
            fail(Errc::not_a_biframe, "part misses bottom or top");
        Bitset closed = subframe_closure(f, *part);
        if (!(closed == *part)) {
            Bitset extra = closed - *part;
            fail_witness(Errc::not_a_biframe, "part not closed under meet/join", {extra.next(0)});
        }
    }
    Bitset gen = subframe_closure(f, b.part1 | b.part2);
    if (gen.count() != f.size()) {
        Bitset missing = gen.complement();
        fail_witness(Errc::not_a_biframe,
                     "parts do not generate the total: element " + std::to_string(missing.next(0)) + " missing",
                     {missing.next(0)});
    }
}

/// Complement of a in f, or -1. When a complement exists it equals a*.
inline int complement_in(const Frame& f, int a) {
    int c = f.pseudocomplement(a);
    return f.join(a, c) == f.top() ? c : -1;
}

/// Every first-part element must be complemented with its complement in the
/// second part, and those complements must generate the second part.
inline bool is_strictly_zero_dimensional(const Biframe& b) {
    const Frame& f = *b.total;
    Bitset comps(f.size());
    for (int a = b.part1.next(0); a >= 0; a = b.part1.next(a + 1)) {
        int c = complement_in(f, a);
        if (c < 0 || !b.part2.test(c)) return false;
        comps.set(c);
    }
    return subframe_closure(f, comps) == b.part2;
}

/// First part materialised as a standalone frame, with element translations.
struct SubframeView {
    FramePtr frame;
    std::vector<int> to_total;    // subframe element -> total element
    std::vector<int> from_total;  // total element -> subframe element or -1
};

inline SubframeView subframe_view(FramePtr total, const Bitset& members) {
    SubframeView v;
    for (int i = members.next(0); i >= 0; i = members.next(i + 1)) v.to_total.push_back(i);
    const int m = (int)v.to_total.size();
    v.from_total.assign(total->size(), -1);
    for (int i = 0; i < m; ++i) v.from_total[v.to_total[i]] = i;
    std::vector<Bitset> rows(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (total->leq(v.to_total[i], v.to_total[j])) rows[i].set(j);
    v.frame = frame_from_poset(poset_from_leq(std::move(rows)));
    return v;
}

/// The congruence biframe of an assembled frame.
inline Biframe congruence_biframe(const Assembly& a) { return Biframe{a.frame(), a.nabla_part(), a.delta_part()}; }

struct Coreflection {
    SubframeView part1;    // the first part as a frame
    Assembly assembly;     // its congruence frame
    BiframeHom chi;        // assembly -> biframe, surjective and dense
};

/// The congruential coreflection of a strictly zero-dimensional biframe:
/// chi sends nabla_a to a and delta_a to the complement of a, extended by
/// joins over generating pairs.
inline Coreflection coreflection(const Biframe& b, size_t budget = kDefaultAssemblyBudget) {
    validate_biframe(b);
    if (!is_strictly_zero_dimensional(b)) fail(Errc::not_a_biframe, "not strictly zero-dimensional");
    Coreflection out;
    out.part1 = subframe_view(b.total, b.part1);
    out.assembly = assemble(out.part1.frame, budget);
    const Frame& total = *b.total;
    const Frame& p1 = *out.part1.frame;

    std::vector<int> comp(p1.size());
    for (int a = 0; a < p1.size(); ++a) comp[a] = complement_in(total, out.part1.to_total[a]);

    FrameHom h{out.assembly.frame(), b.total, std::vector<int>(out.assembly.size())};
    for (int i = 0; i < out.assembly.size(); ++i) {
        const Congruence& c = out.assembly.at(i);
        int img = total.bottom();
        for (int x = 0; x < p1.size(); ++x)
            img = total.join(img, total.meet(out.part1.to_total[c.nu(x)], comp[x]));
        h.map[i] = img;
    }
    Biframe src = congruence_biframe(out.assembly);
    out.chi = BiframeHom{src, b, std::move(h)};
    out.chi.validate();
    if (!out.chi.map.is_surjective() || !out.chi.map.is_dense())
        fail(Errc::validation_error, "internal: coreflection is not a dense surjection");
    return out;
}

/// All strictly zero-dimensional biframes over L: the quotients of the
/// congruence biframe by its dense congruences. Finitely there is exactly
/// one, the congruence biframe itself.
inline std::vector<Biframe> str0d_biframes_over(FramePtr l, size_t budget = kDefaultAssemblyBudget) {
    Assembly a = assemble(l, budget);
    Assembly a2 = assemble(a.frame(), budget);
    std::vector<Biframe> out;
    for (const Congruence& d : a2.congruences()) {
        if (!is_dense(d)) continue;
        QuotientResult q = quotient(a.frame(), d);
        Bitset p1(q.frame->size()), p2(q.frame->size());
        for (int i = a.nabla_part().next(0); i >= 0; i = a.nabla_part().next(i + 1)) p1.set(q.map(i));
        for (int i = a.delta_part().next(0); i >= 0; i = a.delta_part().next(i + 1)) p2.set(q.map(i));
        out.push_back(Biframe{q.frame, p1, p2});
    }
    return out;
}

inline const Bitset& closed_elements(const Biframe& b) { return b.part1; }

/// Largest first-part element below x.
inline int biframe_closure(const Biframe& b, int x) {
    return b.total->join_of(b.part1 & b.total->down_set(x));
}

inline bool is_clear_element(const Biframe& b, int x) {
    int cx = biframe_closure(b, x);
    for (int y = 0; y < b.total->size(); ++y)
        if (biframe_closure(b, y) == cx && !b.total->leq(y, x)) return false;
    return true;
}

inline Bitset clear_elements(const Biframe& b) {
    Bitset out(b.total->size());
    for (int x = 0; x < b.total->size(); ++x)
        if (is_clear_element(b, x)) out.set(x);
    return out;
}

/// Congruential test, two routes: injectivity of chi, and completeness of
/// the clear elements (one for every closure in the first part). The routes
/// must agree; finitely both always hold.
inline bool is_congruential(const Biframe& b, size_t budget = kDefaultAssemblyBudget) {
    Coreflection cr = coreflection(b, budget);
    bool injective = cr.chi.map.is_injective();
    bool complete = true;
    for (int c = b.part1.next(0); c >= 0 && complete; c = b.part1.next(c + 1)) {
        bool found = false;
        for (int x = 0; x < b.total->size() && !found; ++x)
            if (biframe_closure(b, x) == c && is_clear_element(b, x)) found = true;
        complete = found;
    }
    if (injective != complete)
        fail(Errc::validation_error, "internal: congruential routes disagree");
    return injective;
}

/// Monomorphisms between strictly zero-dimensional biframes are exactly the
/// dense maps.
inline bool hom_is_mono(const BiframeHom& f) { return f.map.is_dense(); }

/// Extremal epimorphisms are the closed quotients: part-surjective with a
/// closed kernel.
inline bool hom_is_extremal_epi(const BiframeHom& f) {
    for (const auto& [sp, tp] : {std::pair{&f.source.part1, &f.target.part1},
                                 std::pair{&f.source.part2, &f.target.part2}}) {
        Bitset img(f.target.total->size());
        for (int i = sp->next(0); i >= 0; i = sp->next(i + 1)) img.set(f.map(i));
        if (!tp->is_subset_of(img)) return false;
    }
    if (!f.map.is_surjective()) return false;
    Congruence ker = hom_kernel(f.map);
    return ker == closure(ker);
}

struct ClosedQuotient {
    Biframe biframe;
    FrameHom map;
};

/// Quotient of a biframe by nabla(a), parts imaged forward.
inline ClosedQuotient closed_quotient(const Biframe& b, int a) {
    QuotientResult q = quotient(b.total, nabla(b.total, a));
    Bitset p1(q.frame->size()), p2(q.frame->size());
    for (int i = b.part1.next(0); i >= 0; i = b.part1.next(i + 1)) p1.set(q.map(i));
    for (int i = b.part2.next(0); i >= 0; i = b.part2.next(i + 1)) p2.set(q.map(i));
    return {Biframe{q.frame, p1, p2}, std::move(q.map)};
}

/// Elements of the assembly fixed by double pseudocomplement. On a finite
/// (Boolean) assembly this is everything.
inline Bitset smooth_congruences(const Assembly& a) {
    Bitset out(a.frame()->size());
    const Frame& f = *a.frame();
    for (int i = 0; i < f.size(); ++i)
        if (f.pseudocomplement(f.pseudocomplement(i)) == i) out.set(i);
    return out;
}

/// The strictly zero-dimensional biframe over the source induced by an
/// injective hom: the image of the congruence functor inside the target
/// assembly.
inline Biframe induced_sub_biframe(const FrameHom& iota, size_t budget = kDefaultAssemblyBudget) {
    if (!iota.is_injective()) fail(Errc::not_injective, "inducing hom is not injective");
    Assembly al = assemble(iota.source, budget);
    Assembly am = assemble(iota.target, budget);
    FrameHom ci = functor_on_hom(iota, al, am);
    Bitset image = ci.image();
    SubframeView view = subframe_view(am.frame(), image);
    Bitset p1(view.frame->size()), p2(view.frame->size());
    for (int i = al.nabla_part().next(0); i >= 0; i = al.nabla_part().next(i + 1))
        p1.set(view.from_total[ci(i)]);
    for (int i = al.delta_part().next(0); i >= 0; i = al.delta_part().next(i + 1))
        p2.set(view.from_total[ci(i)]);
    Biframe b{view.frame, p1, p2};
    validate_biframe(b);
    if (!is_strictly_zero_dimensional(b))
        fail(Errc::validation_error, "internal: induced biframe not strictly zero-dimensional");
    return b;
}

/// Isomorphism of strictly zero-dimensional biframes by canonical labelling:
/// candidate isomorphisms of the first parts extend canonically to the
/// totals, where they either work or fail.
inline bool biframes_isomorphic(const Biframe& a, const Biframe& b) {
    if (a.total->size() != b.total->size()) return false;
    if (a.part1.count() != b.part1.count() || a.part2.count() != b.part2.count()) return false;
    SubframeView va = subframe_view(a.total, a.part1);
    SubframeView vb = subframe_view(b.total, b.part1);
    for (const auto& phi : frame_isomorphisms(*va.frame, *vb.frame)) {
        // Extend: x = join of { p /\ q^c : p,q in part1, p /\ q^c <= x }.
        std::vector<int> m(a.total->size(), -1);
        bool ok = true;
        for (int x = 0; x < a.total->size() && ok; ++x) {
            int img = b.total->bottom();
            for (int pi = 0; pi < va.frame->size(); ++pi)
                for (int qi = 0; qi < va.frame->size(); ++qi) {
                    int p = va.to_total[pi], q = va.to_total[qi];
                    int qc = complement_in(*a.total, q);
                    if (qc < 0) continue;
                    if (!a.total->leq(a.total->meet(p, qc), x)) continue;
                    int tp = vb.to_total[phi[pi]], tq = vb.to_total[phi[qi]];
                    int tqc = complement_in(*b.total, tq);
                    if (tqc < 0) {
                        ok = false;
                        break;
                    }
                    img = b.total->join(img, b.total->meet(tp, tqc));
                }
            m[x] = img;
        }
        if (!ok) continue;
        std::vector<char> hit(b.total->size(), 0);
        for (int x = 0; x < a.total->size() && ok; ++x) {
            if (hit[m[x]]) ok = false;
            hit[m[x]] = 1;
        }
        for (int x = 0; x < a.total->size() && ok; ++x)
            for (int y = 0; y < a.total->size() && ok; ++y)
                if (a.total->leq(x, y) != b.total->leq(m[x], m[y])) ok = false;
        for (int x = a.part2.next(0); x >= 0 && ok; x = a.part2.next(x + 1))
            if (!b.part2.test(m[x])) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace framecalc
