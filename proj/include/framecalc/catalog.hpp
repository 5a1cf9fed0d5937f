#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "framecalc/semilattice.hpp"
#include "framecalc/space.hpp"

namespace framecalc {

struct CatalogEntry {
    std::string name;
    enum class Kind { lattice, space, reject_poset } kind = Kind::lattice;
    FramePtr frame;     // kind == lattice
    FiniteSpace space;  // kind == space
    Poset poset;        // kind == reject_poset (payload expected to fail frame validation)
    std::string provenance;
};

inline FramePtr chain_frame(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return frame_from_poset(poset_from_covers(n, covers));
}

inline FramePtr boolean_frame(int k) {
    const int n = 1 << k;
    std::vector<Bitset> rows(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i & j) == i) rows[i].set(j);
    return frame_from_poset(poset_from_leq(std::move(rows)));
}

/// Product of an (a+1)-chain and a (b+1)-chain: an a-by-b grid of cells.
inline FramePtr grid_frame(int a, int b) {
    const int w = a + 1, h = b + 1, n = w * h;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < h; ++j) {
            if (i + 1 < w) covers.emplace_back(j * w + i, j * w + i + 1);
            if (j + 1 < h) covers.emplace_back(j * w + i, (j + 1) * w + i);
        }
    return frame_from_poset(poset_from_covers(n, covers));
}

inline FiniteSpace sierpinski_space() {
    Bitset t(2), full = Bitset::full(2);
    t.set(1);
    return finite_space(2, {Bitset(2), t, full});
}

inline FiniteSpace discrete_space(int n) {
    std::vector<Bitset> opens;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Bitset s(n);
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.set(i);
        opens.push_back(std::move(s));
    }
    return finite_space(n, std::move(opens));
}

inline FiniteSpace indiscrete_space(int n) { return finite_space(n, {Bitset(n), Bitset::full(n)}); }

inline Poset diamond_m3_poset() {
    return poset_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline Poset pentagon_n5_poset() {
    return poset_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

/// Registry lookup. Accepted names: chain(n) for 1<=n<=8, boolean(k) for
/// 0<=k<=4, sierpinski_frame, sierpinski_space, diamond_M3, pentagon_N5,
/// grid(2,2), free_frame(g) for g<=2.
inline CatalogEntry named(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    e.provenance = name;
    int arg = 0, arg2 = 0;
    if (std::sscanf(name.c_str(), "chain(%d)", &arg) == 1) {
        if (arg < 1 || arg > 8) fail(Errc::unknown_name, "chain size out of registry range: " + name);
        e.frame = chain_frame(arg);
        return e;
    }
    if (std::sscanf(name.c_str(), "boolean(%d)", &arg) == 1) {
        if (arg < 0 || arg > 4) fail(Errc::unknown_name, "boolean rank out of registry range: " + name);
        e.frame = boolean_frame(arg);
        return e;
    }
    if (std::sscanf(name.c_str(), "grid(%d,%d)", &arg, &arg2) == 2) {
        if (arg != 2 || arg2 != 2) fail(Errc::unknown_name, "only grid(2,2) is registered");
        e.frame = grid_frame(2, 2);
        return e;
    }
    if (std::sscanf(name.c_str(), "free_frame(%d)", &arg) == 1) {
        if (arg < 0 || arg > 2) fail(Errc::unknown_name, "free frame rank out of registry range: " + name);
        e.frame = free_frame_on_semilattice(free_meet_semilattice(arg));
        return e;
    }
    if (name == "sierpinski_frame") {
        e.frame = omega(sierpinski_space()).frame;
        return e;
    }
    if (name == "sierpinski_space") {
        e.kind = CatalogEntry::Kind::space;
        e.space = sierpinski_space();
        return e;
    }
    if (name == "diamond_M3") {
        e.kind = CatalogEntry::Kind::reject_poset;
        e.poset = diamond_m3_poset();
        return e;
    }
    if (name == "pentagon_N5") {
        e.kind = CatalogEntry::Kind::reject_poset;
        e.poset = pentagon_n5_poset();
        return e;
    }
    fail(Errc::unknown_name, "unknown catalog name: " + name);
}

/// All posets on exactly n elements up to isomorphism, by extending smaller
/// posets with a new maximal element over each downset.
inline std::vector<Poset> enumerate_posets(int n) {
    if (n < 0 || n > 6) fail_budget("poset enumeration limited to 6 elements", n < 0 ? 0 : (size_t)n);
    std::vector<Poset> out;
    if (n == 0) {
        out.push_back(poset_from_covers(0, {}));
        return out;
    }
    std::map<std::string, int> seen;
    for (const Poset& q : enumerate_posets(n - 1)) {
        const int m = n - 1;
        for (int mask = 0; mask < (1 << m); ++mask) {
            Bitset d(m);
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) d.set(i);
            bool downset = true;
            for (int i = d.next(0); i >= 0 && downset; i = d.next(i + 1))
                if (!q.down[i].is_subset_of(d)) downset = false;
            if (!downset) continue;
            std::vector<Bitset> rows(n, Bitset(n));
            for (int i = 0; i < m; ++i) {
                for (int j = q.up[i].next(0); j >= 0; j = q.up[i].next(j + 1)) rows[i].set(j);
                if (d.test(i)) rows[i].set(m);
            }
            rows[m].set(m);
            Poset p = poset_from_leq(std::move(rows));
            std::string key = poset_canonical_form(p);
            if (seen.emplace(std::move(key), 1).second) out.push_back(std::move(p));
        }
    }
    return out;
}

/// Downset frames of all posets with at most max_poset_n elements, filtered
/// by size and deduplicated by canonical lattice form.
inline std::vector<FramePtr> enumerate_distributive_lattices(int max_poset_n, int max_elements = 64) {
    if (max_elements > 64) fail_budget("lattice enumeration limited to 64 elements", (size_t)max_elements);
    std::vector<FramePtr> out;
    std::map<std::string, int> seen;
    for (int n = 0; n <= max_poset_n; ++n)
        for (const Poset& p : enumerate_posets(n)) {
            FramePtr f = downset_frame(p);
            if (f->size() > max_elements) continue;
            if (seen.emplace(frame_canonical_form(*f), 1).second) out.push_back(std::move(f));
        }
    return out;
}

/// Canonical form of a space: the least serialization of the sorted open
/// masks over all point permutations. Limited to 8 points.
inline std::string space_canonical_form(const FiniteSpace& x) {
    if (x.points > 8) fail_budget("space canonical form limited to 8 points", (size_t)x.points);
    std::vector<int> perm(x.points);
    for (int i = 0; i < x.points; ++i) perm[i] = i;
    std::string best;
    do {
        std::vector<uint64_t> masks;
        for (const Bitset& u : x.opens) {
            uint64_t m = 0;
            for (int p = u.next(0); p >= 0; p = u.next(p + 1)) m |= uint64_t{1} << perm[p];
            masks.push_back(m);
        }
        std::sort(masks.begin(), masks.end());
        std::string s;
        for (uint64_t m : masks) s += std::to_string(m) + ",";
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(x.points) + ":" + best;
}

/// All topologies on exactly n points up to homeomorphism. Limited to 4
/// points (the family scan is exponential in 2^n).
inline std::vector<FiniteSpace> enumerate_topologies(int n) {
    if (n < 0 || n > 4) fail_budget("topology enumeration limited to 4 points", n < 0 ? 0 : (size_t)n);
    std::vector<FiniteSpace> out;
    std::map<std::string, int> seen;
    const int universe = 1 << n;
    const uint64_t families = uint64_t{1} << (universe > 2 ? universe - 2 : 0);
    for (uint64_t fam = 0; fam < families; ++fam) {
        // Bits of fam pick the proper nonempty opens; empty and full are fixed.
        std::vector<int> masks = {0, universe - 1};
        if (n == 0) masks = {0};
        int bit = 0;
        for (int m = 1; m < universe - 1; ++m, ++bit)
            if (fam & (uint64_t{1} << bit)) masks.push_back(m);
        bool closed = true;
        for (size_t i = 0; i < masks.size() && closed; ++i)
            for (size_t j = i + 1; j < masks.size() && closed; ++j) {
                int u = masks[i] | masks[j], w = masks[i] & masks[j];
                if (std::find(masks.begin(), masks.end(), u) == masks.end() ||
                    std::find(masks.begin(), masks.end(), w) == masks.end())
                    closed = false;
            }
        if (!closed) continue;
        std::vector<Bitset> opens;
        for (int m : masks) {
            Bitset s(n);
            for (int i = 0; i < n; ++i)
                if (m & (1 << i)) s.set(i);
            opens.push_back(std::move(s));
        }
        FiniteSpace x = finite_space(n, std::move(opens));
        if (seen.emplace(space_canonical_form(x), 1).second) out.push_back(std::move(x));
    }
    return out;
}

struct Corpus {
    std::vector<CatalogEntry> lattices;  // sorted by (size, canonical form)
    std::vector<CatalogEntry> spaces;    // sorted by (points, open count, canonical form)
};

/// The pinned test corpus: every distributive lattice arising from a poset
/// with at most 4 elements plus the named registry entries, and spaces with
/// few points (all topologies up to 4 points plus spectra of corpus frames).
inline Corpus corpus(int max_lattice_size = 16, int max_space_points = 6) {
    Corpus c;
    std::map<std::string, int> seen_lat;
    auto add_lattice = [&](FramePtr f, const std::string& name, const std::string& prov) {
        if (f->size() > max_lattice_size) return;
        std::string key = frame_canonical_form(*f);
        if (!seen_lat.emplace(key, 1).second) return;
        CatalogEntry e;
        e.name = name;
        e.kind = CatalogEntry::Kind::lattice;
        e.frame = std::move(f);
        e.provenance = prov;
        c.lattices.push_back(std::move(e));
    };
    for (int n = 1; n <= 8; ++n) add_lattice(chain_frame(n), "chain(" + std::to_string(n) + ")", "named");
    for (int k = 0; k <= 4; ++k) add_lattice(boolean_frame(k), "boolean(" + std::to_string(k) + ")", "named");
    add_lattice(grid_frame(2, 2), "grid(2,2)", "named");
    for (int g = 0; g <= 2; ++g)
        add_lattice(free_frame_on_semilattice(free_meet_semilattice(g)), "free_frame(" + std::to_string(g) + ")",
                    "named");
    {
        int idx = 0;
        for (int n = 0; n <= 4; ++n)
            for (const Poset& p : enumerate_posets(n)) {
                add_lattice(downset_frame(p), "downsets_p" + std::to_string(n) + "_" + std::to_string(idx),
                            "downsets of a " + std::to_string(n) + "-element poset");
                ++idx;
            }
    }
    std::sort(c.lattices.begin(), c.lattices.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        auto ka = std::pair(a.frame->size(), frame_canonical_form(*a.frame));
        auto kb = std::pair(b.frame->size(), frame_canonical_form(*b.frame));
        return ka < kb;
    });

    std::map<std::string, int> seen_spc;
    auto add_space = [&](FiniteSpace x, const std::string& name, const std::string& prov) {
        if (x.points > max_space_points || x.points > 8) return;
        std::string key = space_canonical_form(x);
        if (!seen_spc.emplace(key, 1).second) return;
        CatalogEntry e;
        e.name = name;
        e.kind = CatalogEntry::Kind::space;
        e.space = std::move(x);
        e.provenance = prov;
        c.spaces.push_back(std::move(e));
    };
    add_space(sierpinski_space(), "sierpinski_space", "named");
    {
        int idx = 0;
        for (int n = 0; n <= 4; ++n)
            for (FiniteSpace& x : enumerate_topologies(n))
                add_space(std::move(x), "top" + std::to_string(n) + "_" + std::to_string(idx++),
                          "enumerated topology on " + std::to_string(n) + " points");
    }
    for (const CatalogEntry& e : c.lattices) {
        SpectrumResult sp = sigma(e.frame);
        add_space(sp.space, "spectrum_of_" + e.name, "spectrum of " + e.name);
    }
    std::sort(c.spaces.begin(), c.spaces.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        auto ka = std::tuple(a.space.points, (int)a.space.opens.size(), space_canonical_form(a.space));
        auto kb = std::tuple(b.space.points, (int)b.space.opens.size(), space_canonical_form(b.space));
        return ka < kb;
    });
    return c;
}

inline uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string corpus_manifest(const Corpus& c) {
    std::string m;
    for (const CatalogEntry& e : c.lattices)
        m += "lat " + std::to_string(e.frame->size()) + " " + frame_canonical_form(*e.frame) + " " + e.name + "\n";
    for (const CatalogEntry& e : c.spaces)
        m += "spc " + std::to_string(e.space.points) + " " + space_canonical_form(e.space) + " " + e.name + "\n";
    return m;
}

inline std::string corpus_hash(const Corpus& c) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(corpus_manifest(c)));
    return buf;
}

}  // namespace framecalc
