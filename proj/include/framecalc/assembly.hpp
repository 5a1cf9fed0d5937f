#pragma once

#include <map>
#include <vector>

#include "framecalc/congruence.hpp"

namespace framecalc {

inline constexpr size_t kDefaultAssemblyBudget = size_t{1} << 16;

/// The congruence frame of a finite frame, materialised: every congruence is
/// an element, ordered by nu-array dominance. Construction refuses frames
/// whose predicted congruence count 2^|join-irreducibles| exceeds the budget.
class Assembly {
public:
    static Assembly assemble(FramePtr base, size_t budget = kDefaultAssemblyBudget) {
        size_t predicted = size_t{1} << base->join_irreducibles().count();
        if (base->join_irreducibles().count() >= 48 || predicted > budget)
            fail_budget("assembly of " + std::to_string(base->size()) + "-element frame predicted at " +
                            std::to_string(predicted) + " congruences, budget " + std::to_string(budget),
                        predicted);

        Assembly a;
        a.base_ = base;

        // Generators: every principal congruence. Close under binary join.
        std::map<std::vector<int>, int> seen;
        std::vector<Congruence> all;
        auto add = [&](Congruence c) {
            auto [it, fresh] = seen.emplace(c.nu_array(), (int)all.size());
            if (fresh) all.push_back(std::move(c));
            return fresh;
        };
        for (int x = 0; x < base->size(); ++x)
            for (int y = x; y < base->size(); ++y)
                if (base->leq(x, y)) add(principal_congruence(base, x, y));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < i; ++j) add(join(all[i], all[j]));

        std::sort(all.begin(), all.end(),
                  [](const Congruence& x, const Congruence& y) { return x.nu_array() < y.nu_array(); });
        const int m = (int)all.size();
        std::vector<Bitset> rows(m, Bitset(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (congruence_leq(all[i], all[j])) rows[i].set(j);
        a.frame_ = frame_from_poset(poset_from_leq(std::move(rows)));
        a.congs_ = std::move(all);
        if (!a.frame_->is_boolean())
            fail(Errc::validation_error, "internal: finite congruence frame is not Boolean");

        a.nabla_ .resize(base->size());
        a.delta_.resize(base->size());
        for (int x = 0; x < base->size(); ++x) {
            a.nabla_[x] = a.index_of(nabla(base, x));
            a.delta_[x] = a.index_of(delta(base, x));
        }
        Bitset nab(m), del(m);
        for (int x = 0; x < base->size(); ++x) {
            nab.set(a.nabla_[x]);
            del.set(a.delta_[x]);
        }
        a.part_nabla_ = subframe_closure(*a.frame_, nab);
        a.part_delta_ = subframe_closure(*a.frame_, del);
        return a;
    }

    const FramePtr& base() const { return base_; }
    const FramePtr& frame() const { return frame_; }
    int size() const { return (int)congs_.size(); }
    const std::vector<Congruence>& congruences() const { return congs_; }
    const Congruence& at(int i) const { return congs_[i]; }

    /// Element index of a congruence; the canonical nu order makes this a
    /// binary search.
    int index_of(const Congruence& c) const {
        auto it = std::lower_bound(congs_.begin(), congs_.end(), c,
                                   [](const Congruence& x, const Congruence& y) { return x.nu_array() < y.nu_array(); });
        if (it == congs_.end() || !(it->nu_array() == c.nu_array()))
            fail(Errc::validation_error, "internal: congruence missing from assembly");
        return (int)(it - congs_.begin());
    }

    int nabla_index(int a) const { return nabla_[a]; }
    int delta_index(int a) const { return delta_[a]; }

    /// The embedding a -> nabla_a as a frame homomorphism into the assembly.
    FrameHom nabla_hom() const { return FrameHom{base_, frame_, nabla_}; }

    const Bitset& nabla_part() const { return part_nabla_; }
    const Bitset& delta_part() const { return part_delta_; }

private:
    FramePtr base_;
    FramePtr frame_;
    std::vector<Congruence> congs_;
    std::vector<int> nabla_, delta_;
    Bitset part_nabla_, part_delta_;
};

inline Assembly assemble(FramePtr base, size_t budget = kDefaultAssemblyBudget) {
    return Assembly::assemble(std::move(base), budget);
}

/// Smooth congruence: a regular element of the congruence frame.
inline bool is_smooth_in_assembly(const Congruence& c, const Assembly& a) {
    int i = a.index_of(c);
    const Frame& f = *a.frame();
    return f.pseudocomplement(f.pseudocomplement(i)) == i;
}

/// The congruence functor on a homomorphism: each congruence is sent to the
/// congruence generated by the images of its generating pairs.
inline FrameHom functor_on_hom(const FrameHom& f, const Assembly& src, const Assembly& dst) {
    if (f.source.get() != src.base().get() || f.target.get() != dst.base().get())
        fail(Errc::frame_mismatch, "assemblies do not match hom endpoints");
    FrameHom h{src.frame(), dst.frame(), std::vector<int>(src.size())};
    for (int i = 0; i < src.size(); ++i) {
        const Congruence& c = src.at(i);
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < c.size(); ++x) pairs.emplace_back(f(x), f(c.nu(x)));
        h.map[i] = dst.index_of(congruence_from_pairs(dst.base(), pairs));
    }
    h.validate();
    return h;
}

/// Kernel shape of any hom out of an assembly frame: the closure of the
/// kernel is the lift of the kernel of (phi composed with nabla).
inline bool kernel_lemma_check(const Assembly& a, const FrameHom& phi) {
    if (phi.source.get() != a.frame().get()) fail(Errc::frame_mismatch, "hom does not start at the assembly frame");
    Congruence ker = hom_kernel(phi);
    int closure_elem = ker.nu(a.frame()->bottom());
    Congruence restricted = hom_kernel(compose(phi, a.nabla_hom()));
    return closure_elem == a.index_of(restricted);
}

struct QuotientIso {
    bool ok = false;
    std::string detail;
    FrameHom iso;  // assemble(L)/nabla_C  ->  assemble(L/C)
};

/// Builds the canonical isomorphism between the assembly of a quotient and
/// the corresponding closed quotient of the assembly, and verifies it.
inline QuotientIso quotient_iso(FramePtr l, const Congruence& c, size_t budget = kDefaultAssemblyBudget) {
    Assembly al = assemble(l, budget);
    QuotientResult q = quotient(l, c);
    Assembly aq = assemble(q.frame, budget);

    FrameHom cq = functor_on_hom(q.map, al, aq);
    Congruence nabla_c = nabla(al.frame(), al.index_of(c));
    QuotientResult p = quotient(al.frame(), nabla_c);

    QuotientIso out;
    if (!(hom_kernel(p.map) == hom_kernel(cq))) {
        out.detail = "kernel of the congruence functor differs from nabla_C";
        return out;
    }
    // Section of p through class maxima, then transport along C q.
    FrameHom iso{p.frame, aq.frame(), std::vector<int>(p.frame->size())};
    for (int x = 0; x < al.frame()->size(); ++x)
        if (nabla_c.nu(x) == x) iso.map[p.map(x)] = cq(x);
    if (!iso.is_valid() || !iso.is_surjective() || !iso.is_injective()) {
        out.detail = "induced map is not a frame isomorphism";
        return out;
    }
    // Parts must correspond: images of the nabla/delta parts through the
    // quotient map onto the parts of the target assembly.
    Bitset part1(p.frame->size()), part2(p.frame->size());
    for (int i = al.nabla_part().next(0); i >= 0; i = al.nabla_part().next(i + 1)) part1.set(p.map(i));
    for (int i = al.delta_part().next(0); i >= 0; i = al.delta_part().next(i + 1)) part2.set(p.map(i));
    Bitset img1(aq.frame()->size()), img2(aq.frame()->size());
    for (int i = part1.next(0); i >= 0; i = part1.next(i + 1)) img1.set(iso(i));
    for (int i = part2.next(0); i >= 0; i = part2.next(i + 1)) img2.set(iso(i));
    if (!(img1 == aq.nabla_part()) || !(img2 == aq.delta_part())) {
        out.detail = "parts not preserved";
        return out;
    }
    out.ok = true;
    out.iso = std::move(iso);
    return out;
}

struct TowerResult {
    std::vector<Assembly> levels;
    std::vector<int> sizes;  // base size first, then one entry per level
    int stabilization = -1;  // first tower index whose frame is Boolean (0 = the base)
    bool budget_exceeded = false;
    size_t predicted = 0;
};

/// Iterates the assembly, stopping after the first level whose nabla
/// embedding is an isomorphism. On finite frames that happens at the first
/// level past the base at the latest.
inline TowerResult tower(FramePtr l, int steps, size_t budget = kDefaultAssemblyBudget) {
    if (steps < 1) fail(Errc::validation_error, "tower needs at least one step");
    TowerResult t;
    t.sizes.push_back(l->size());
    if (l->is_boolean()) t.stabilization = 0;
    FramePtr cur = l;
    for (int i = 0; i < steps; ++i) {
        bool nabla_iso = cur->is_boolean();
        Assembly a;
        try {
            a = assemble(cur, budget);
        } catch (const Error& e) {
            if (e.code() != Errc::size_budget_exceeded) throw;
            t.budget_exceeded = true;
            t.predicted = e.predicted;
            return t;
        }
        t.sizes.push_back(a.frame()->size());
        if (t.stabilization < 0 && a.frame()->is_boolean()) t.stabilization = i + 1;
        cur = a.frame();
        t.levels.push_back(std::move(a));
        if (nabla_iso) break;
        if (i == 0 && !cur->is_boolean())
            fail(Errc::validation_error, "internal: first assembly level is not Boolean");
    }
    return t;
}

}  // namespace framecalc
