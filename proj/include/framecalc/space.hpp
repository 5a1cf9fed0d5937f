#pragma once

#include <algorithm>
#include <vector>

#include "framecalc/biframe.hpp"

namespace framecalc {

/// Finite topological space: opens are point bitsets, kept sorted ascending,
/// closed under pairwise union and intersection, containing the empty and
/// the full set.
struct FiniteSpace {
    int points = 0;
    std::vector<Bitset> opens;

    int open_index(const Bitset& s) const {
        auto it = std::lower_bound(opens.begin(), opens.end(), s);
        if (it == opens.end() || !(*it == s)) return -1;
        return (int)(it - opens.begin());
    }

    bool operator==(const FiniteSpace& o) const { return points == o.points && opens == o.opens; }

    /// Specialization order: x <= y iff every open containing x contains y.
    bool specializes(int x, int y) const {
        for (const Bitset& u : opens)
            if (u.test(x) && !u.test(y)) return false;
        return true;
    }
};

/// Normalises (sorts, dedups) and validates the open-set family.
inline FiniteSpace finite_space(int points, std::vector<Bitset> opens) {
    FiniteSpace x;
    x.points = points;
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    for (const Bitset& u : opens)
        if (u.universe() != points) fail(Errc::validation_error, "open set over wrong universe");
    x.opens = std::move(opens);
    if (x.open_index(Bitset(points)) < 0) fail(Errc::validation_error, "empty set is not open");
    if (x.open_index(Bitset::full(points)) < 0) fail(Errc::validation_error, "full set is not open");
    for (size_t i = 0; i < x.opens.size(); ++i)
        for (size_t j = i + 1; j < x.opens.size(); ++j) {
            if (x.open_index(x.opens[i] | x.opens[j]) < 0)
                fail(Errc::validation_error,
                     "opens not closed under union: " + x.opens[i].to_string() + " | " + x.opens[j].to_string());
            if (x.open_index(x.opens[i] & x.opens[j]) < 0)
                fail(Errc::validation_error, "opens not closed under intersection: " + x.opens[i].to_string() +
                                                 " & " + x.opens[j].to_string());
        }
    return x;
}

/// Closure of a subbasis under pairwise union and intersection, with the
/// empty and full sets adjoined.
inline FiniteSpace space_from_subbasis(int points, std::vector<Bitset> sets) {
    std::vector<Bitset> fam = {Bitset(points), Bitset::full(points)};
    fam.insert(fam.end(), sets.begin(), sets.end());
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bitset> fresh;
        for (size_t i = 0; i < fam.size(); ++i)
            for (size_t j = i + 1; j < fam.size(); ++j)
                for (Bitset s : {fam[i] | fam[j], fam[i] & fam[j]})
                    if (!std::binary_search(fam.begin(), fam.end(), s)) fresh.push_back(std::move(s));
        if (!fresh.empty()) {
            grew = true;
            fam.insert(fam.end(), fresh.begin(), fresh.end());
            std::sort(fam.begin(), fam.end());
            fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
        }
    }
    return finite_space(points, std::move(fam));
}

/// The frame of opens; element i is space.opens[i].
struct OmegaResult {
    FramePtr frame;
    FiniteSpace space;
};

inline OmegaResult omega(FiniteSpace x) {
    const int m = (int)x.opens.size();
    std::vector<Bitset> rows(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (x.opens[i].is_subset_of(x.opens[j])) rows[i].set(j);
    OmegaResult r;
    r.frame = frame_from_poset(poset_from_leq(std::move(rows)));
    r.space = std::move(x);
    return r;
}

/// Subspace congruence E_A: two opens are related iff they agree on A.
inline Congruence subspace_congruence(const OmegaResult& om, const Bitset& a) {
    if (a.universe() != om.space.points) fail(Errc::space_mismatch, "subset over wrong point universe");
    const int n = om.frame->size();
    std::vector<int> cls(n);
    std::vector<Bitset> keys;
    for (int i = 0; i < n; ++i) {
        Bitset k = om.space.opens[i] & a;
        auto it = std::find(keys.begin(), keys.end(), k);
        if (it == keys.end()) {
            keys.push_back(std::move(k));
            cls[i] = (int)keys.size() - 1;
        } else {
            cls[i] = (int)(it - keys.begin());
        }
    }
    return Congruence(om.frame, detail::nu_from_class_ids(*om.frame, cls));
}

inline Congruence subspace_congruence(const OmegaResult& om, const Bitset& a, const FiniteSpace& x) {
    if (!(om.space == x)) fail(Errc::space_mismatch, "frame of opens does not belong to this space");
    return subspace_congruence(om, a);
}

/// Spectrum of a frame: points are the prime elements, opens are the U_a.
/// On finite frames a -> U_a is an isomorphism onto the topology; this is
/// verified during construction.
struct SpectrumResult {
    FiniteSpace space;
    std::vector<int> prime_of_point;  // point -> prime element of the source
    std::vector<int> point_of_prime;  // element -> point or -1
    std::vector<Bitset> u;            // element a -> U_a as a point set
    std::vector<int> open_of_element; // element a -> index of U_a in space.opens
};

inline SpectrumResult sigma(const FramePtr& l) {
    SpectrumResult r;
    const Bitset& primes = l->primes();
    r.point_of_prime.assign(l->size(), -1);
    for (int p = primes.next(0); p >= 0; p = primes.next(p + 1)) {
        r.point_of_prime[p] = (int)r.prime_of_point.size();
        r.prime_of_point.push_back(p);
    }
    const int k = (int)r.prime_of_point.size();
    r.u.assign(l->size(), Bitset(k));
    for (int a = 0; a < l->size(); ++a)
        for (int i = 0; i < k; ++i)
            if (!l->leq(a, r.prime_of_point[i])) r.u[a].set(i);
    std::vector<Bitset> opens = r.u;
    r.space = finite_space(k, std::move(opens));
    r.open_of_element.resize(l->size());
    for (int a = 0; a < l->size(); ++a) r.open_of_element[a] = r.space.open_index(r.u[a]);
    // Finite frames are spatial: a -> U_a must be an order isomorphism.
    if ((int)r.space.opens.size() != l->size())
        fail(Errc::validation_error, "internal: spectrum unit is not injective");
    for (int a = 0; a < l->size(); ++a)
        for (int b = 0; b < l->size(); ++b)
            if (l->leq(a, b) != r.u[a].is_subset_of(r.u[b]))
                fail(Errc::validation_error, "internal: spectrum unit is not an order isomorphism");
    return r;
}

struct SobrificationResult {
    OmegaResult om;            // frame of opens of the input
    SpectrumResult spectrum;   // its spectrum
    std::vector<int> sob;      // input point -> spectrum point
};

/// sob maps a point to the prime open complementing its closure.
inline SobrificationResult sobrification(const FiniteSpace& x) {
    SobrificationResult r;
    r.om = omega(x);
    r.spectrum = sigma(r.om.frame);
    r.sob.resize(x.points);
    for (int p = 0; p < x.points; ++p) {
        // Largest open missing p; it is a prime element of the open-set frame.
        int e = r.om.frame->bottom();
        for (int i = 0; i < r.om.frame->size(); ++i)
            if (!r.om.space.opens[i].test(p)) e = r.om.frame->join(e, i);
        r.sob[p] = r.spectrum.point_of_prime[e];
        if (r.sob[p] < 0) fail(Errc::validation_error, "internal: closure complement is not prime");
    }
    return r;
}

inline bool is_t0(const FiniteSpace& x) {
    for (int p = 0; p < x.points; ++p)
        for (int q = p + 1; q < x.points; ++q)
            if (x.specializes(p, q) && x.specializes(q, p)) return false;
    return true;
}

inline bool is_sober(const FiniteSpace& x) {
    SobrificationResult s = sobrification(x);
    if ((int)s.spectrum.prime_of_point.size() != x.points) return false;
    std::vector<char> hit(x.points, 0);
    for (int p : s.sob) {
        if (hit[p]) return false;
        hit[p] = 1;
    }
    return true;
}

/// T_D: every point has an open neighbourhood that stays open without it.
inline bool is_td(const FiniteSpace& x) {
    for (int p = 0; p < x.points; ++p) {
        bool ok = false;
        for (const Bitset& u : x.opens) {
            if (!u.test(p)) continue;
            Bitset v = u;
            v.reset(p);
            if (x.open_index(v) >= 0) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

/// T_D holds iff the subspace congruences separate subsets:
/// E_A <= E_B forces B to be contained in A. Requires at most 8 points.
inline bool td_congruence_lemma_check(const FiniteSpace& x) {
    if (x.points > 8) fail_budget("subset scan limited to 8 points", size_t{1} << x.points);
    OmegaResult om = omega(x);
    const int total = 1 << x.points;
    std::vector<Bitset> subsets;
    std::vector<Congruence> e;
    for (int mask = 0; mask < total; ++mask) {
        Bitset s(x.points);
        for (int i = 0; i < x.points; ++i)
            if (mask & (1 << i)) s.set(i);
        e.push_back(subspace_congruence(om, s));
        subsets.push_back(std::move(s));
    }
    bool separated = true;
    for (int i = 0; i < total && separated; ++i)
        for (int j = 0; j < total && separated; ++j)
            if (congruence_leq(e[i], e[j]) && !subsets[j].is_subset_of(subsets[i])) separated = false;
    return is_td(x) == separated;
}

/// Skula modification: the topology generated by the opens and their
/// complements.
inline FiniteSpace skula_space(const FiniteSpace& x) {
    std::vector<Bitset> sets = x.opens;
    for (const Bitset& u : x.opens) sets.push_back(u.complement());
    return space_from_subbasis(x.points, std::move(sets));
}

/// T0 reflection: identify points with identical open neighbourhoods.
inline FiniteSpace t0_reflection(const FiniteSpace& x) {
    std::vector<int> cls(x.points, -1);
    int next = 0;
    for (int p = 0; p < x.points; ++p) {
        for (int q = 0; q < p; ++q)
            if (x.specializes(p, q) && x.specializes(q, p)) {
                cls[p] = cls[q];
                break;
            }
        if (cls[p] < 0) cls[p] = next++;
    }
    std::vector<Bitset> opens;
    for (const Bitset& u : x.opens) {
        Bitset v(next);
        for (int p = u.next(0); p >= 0; p = u.next(p + 1)) v.set(cls[p]);
        opens.push_back(std::move(v));
    }
    return finite_space(next, std::move(opens));
}

struct SkulaBiframe {
    FiniteSpace base;      // the (T0) space the biframe is built over
    OmegaResult om;        // frame of Skula opens; total part of the biframe
    Biframe biframe;       // (skula, tau, upsilon)
    std::vector<int> tau_elem;  // index of each base open inside the Skula frame
};

/// The Skula biframe (sigma, tau, upsilon) of a T0 space; upsilon is
/// generated by the closed sets. NotT0 unless t0_reflect is set.
inline SkulaBiframe skula_biframe(const FiniteSpace& x0, bool t0_reflect = false) {
    FiniteSpace x = x0;
    if (!is_t0(x)) {
        if (!t0_reflect) fail(Errc::not_t0, "space is not T0; pass the reflect flag to quotient first");
        x = t0_reflection(x);
    }
    SkulaBiframe r;
    r.base = x;
    r.om = omega(skula_space(x));
    const int m = r.om.frame->size();
    Bitset tau(m), closed_seed(m);
    r.tau_elem.reserve(x.opens.size());
    for (const Bitset& u : x.opens) {
        int e = r.om.space.open_index(u);
        int c = r.om.space.open_index(u.complement());
        if (e < 0 || c < 0) fail(Errc::validation_error, "internal: skula topology misses a generator");
        r.tau_elem.push_back(e);
        tau.set(e);
        closed_seed.set(c);
    }
    Bitset upsilon = subframe_closure(*r.om.frame, closed_seed);
    r.biframe = Biframe{r.om.frame, tau, upsilon};
    validate_biframe(r.biframe);
    if (!is_strictly_zero_dimensional(r.biframe))
        fail(Errc::validation_error, "internal: skula biframe not strictly zero-dimensional");
    return r;
}

/// The canonical hom from the congruence frame onto the Skula frame of the
/// spectrum: a congruence C goes to the union of U_nu(x) minus U_x.
inline FrameHom skula_canonical_hom(const Assembly& a, const SpectrumResult& sp, const SkulaBiframe& sk) {
    FrameHom h{a.frame(), sk.om.frame, std::vector<int>(a.size())};
    const int pts = sp.space.points;
    for (int i = 0; i < a.size(); ++i) {
        const Congruence& c = a.at(i);
        Bitset s(pts);
        for (int x = 0; x < c.size(); ++x) s |= sp.u[c.nu(x)] - sp.u[x];
        int e = sk.om.space.open_index(s);
        if (e < 0) fail(Errc::validation_error, "internal: congruence image is not Skula-open");
        h.map[i] = e;
    }
    return h;
}

/// Verifies that the canonical hom is a biframe isomorphism from the
/// congruence biframe onto the Skula biframe of the spectrum.
inline bool skula_iso_check(const FramePtr& l, size_t budget = kDefaultAssemblyBudget) {
    Assembly a = assemble(l, budget);
    SpectrumResult sp = sigma(l);
    SkulaBiframe sk = skula_biframe(sp.space);
    FrameHom h = skula_canonical_hom(a, sp, sk);
    if (!h.is_valid() || !h.is_injective() || !h.is_surjective()) return false;
    Bitset img1(sk.om.frame->size()), img2(sk.om.frame->size());
    for (int i = a.nabla_part().next(0); i >= 0; i = a.nabla_part().next(i + 1)) img1.set(h(i));
    for (int i = a.delta_part().next(0); i >= 0; i = a.delta_part().next(i + 1)) img2.set(h(i));
    return img1 == sk.biframe.part1 && img2 == sk.biframe.part2;
}

/// The Skula functor on a hom f: L -> M, as a frame hom between Skula totals:
/// preimage along the prime map q -> f_*(q).
inline FrameHom skula_functor_hom(const FrameHom& f, const SpectrumResult& spl, const SkulaBiframe& skl,
                                  const SpectrumResult& spm, const SkulaBiframe& skm) {
    std::vector<int> adj = f.right_adjoint();
    // Points of Sigma M map to points of Sigma L.
    std::vector<int> pt(spm.space.points);
    for (int q = 0; q < spm.space.points; ++q) {
        int p = adj[spm.prime_of_point[q]];
        int i = spl.point_of_prime[p];
        if (i < 0) fail(Errc::validation_error, "internal: right adjoint does not preserve primes");
        pt[q] = i;
    }
    FrameHom h{skl.om.frame, skm.om.frame, std::vector<int>(skl.om.frame->size())};
    for (int e = 0; e < skl.om.frame->size(); ++e) {
        Bitset pre(spm.space.points);
        for (int q = 0; q < spm.space.points; ++q)
            if (skl.om.space.opens[e].test(pt[q])) pre.set(q);
        int i = skm.om.space.open_index(pre);
        if (i < 0) fail(Errc::validation_error, "internal: preimage is not Skula-open");
        h.map[e] = i;
    }
    return h;
}

/// Primes of the congruence frame, as assembly element indices.
inline Bitset prime_congruences(const Assembly& a) { return a.frame()->primes(); }

/// Elements of the assembly that are meets of primes.
inline Bitset spatial_congruences(const Assembly& a) {
    const Frame& f = *a.frame();
    Bitset out(f.size());
    for (int x = 0; x < f.size(); ++x)
        if (f.meet_of(f.primes() & f.up_set(x)) == x) out.set(x);
    return out;
}

/// Spatial reflection of a quotient: the meet of the prime clear congruences
/// above C.
inline Congruence spatial_reflection_of_quotient(const Assembly& a, const Congruence& c) {
    Congruence r = all_congruence(a.base());
    const Bitset& primes = a.base()->primes();
    for (int p = primes.next(0); p >= 0; p = primes.next(p + 1)) {
        Congruence cp = clear_congruence(a.base(), p);
        if (congruence_leq(c, cp)) r = meet(r, cp);
    }
    return r;
}

}  // namespace framecalc
