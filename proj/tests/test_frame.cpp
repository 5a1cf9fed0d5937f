#include <catch2/catch_amalgamated.hpp>

#include "framecalc/catalog.hpp"
#include "oracle.hpp"

using namespace framecalc;

namespace {
std::vector<FramePtr> small_corpus() {
    std::vector<FramePtr> out;
    for (const CatalogEntry& e : corpus(8, 0).lattices) out.push_back(e.frame);
    return out;
}
}  // namespace

TEST_CASE("three-chain frame basics") {
    FramePtr f = chain_frame(3);
    REQUIRE(f->bottom() == 0);
    REQUIRE(f->top() == 2);
    for (int a = 0; a < 3; ++a) {
        REQUIRE(f->meet(a, a) == a);
        REQUIRE(f->join(a, a) == a);
    }
    // Pseudocomplements recomputed by raw scan.
    for (int a = 0; a < 3; ++a) {
        int best = -1;
        for (int c = 0; c < 3; ++c)
            if (f->meet(a, c) == 0 && (best < 0 || f->leq(best, c))) best = c;
        REQUIRE(f->pseudocomplement(a) == best);
    }
    REQUIRE(f->pseudocomplement(1) == 0);
    REQUIRE(f->pseudocomplement(0) == 2);
}

TEST_CASE("pentagon and diamond are rejected with a witness triple") {
    for (const Poset& p : {pentagon_n5_poset(), diamond_m3_poset()}) {
        try {
            frame_from_poset(p);
            FAIL("expected NotDistributive");
        } catch (const Error& e) {
            REQUIRE(e.code() == Errc::not_distributive);
            REQUIRE(e.witness.size() == 3);
        }
    }
}

TEST_CASE("poset lacking joins is not a lattice") {
    // Two maximal elements: the pair {1,2} has no join.
    try {
        frame_from_poset(poset_from_covers(3, {{0, 1}, {0, 2}}));
        FAIL("expected NotALattice");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::not_a_lattice);
    }
}

TEST_CASE("heyting arrow matches the raw scan and the adjunction") {
    for (const FramePtr& f : small_corpus()) {
        for (int a = 0; a < f->size(); ++a)
            for (int b = 0; b < f->size(); ++b) {
                int arrow = f->heyting(a, b);
                REQUIRE(arrow == oracle::arrow_by_scan(*f, a, b));
                for (int c = 0; c < f->size(); ++c)
                    REQUIRE(f->leq(c, arrow) == f->leq(f->meet(a, c), b));
            }
    }
}

TEST_CASE("heyting arrow examples") {
    FramePtr three = chain_frame(3);
    REQUIRE(three->heyting(1, 0) == 0);
    REQUIRE(three->heyting(1, 1) == 2);
    FramePtr sq = boolean_frame(2);
    // Atoms are pseudocomplements of each other.
    REQUIRE(sq->heyting(1, 0) == sq->pseudocomplement(1));
    REQUIRE(sq->meet(1, sq->pseudocomplement(1)) == 0);
}

TEST_CASE("pseudocomplement identities") {
    for (const FramePtr& f : small_corpus()) {
        auto pc = [&](int a) { return f->pseudocomplement(a); };
        for (int a = 0; a < f->size(); ++a) {
            REQUIRE(f->leq(a, pc(pc(a))));
            REQUIRE(pc(pc(pc(a))) == pc(a));
            for (int b = 0; b < f->size(); ++b) {
                REQUIRE(pc(f->join(a, b)) == f->meet(pc(a), pc(b)));
                REQUIRE(pc(pc(f->meet(a, b))) == f->meet(pc(pc(a)), pc(pc(b))));
            }
        }
    }
}

TEST_CASE("rather below and completely below") {
    FramePtr three = chain_frame(3);
    REQUIRE(!three->rather_below(1, 1));
    REQUIRE(three->rather_below(0, 1));
    REQUIRE(three->completely_below(1, 2));
    FramePtr sq = boolean_frame(2);
    REQUIRE(sq->rather_below(1, 1));

    for (const FramePtr& f : small_corpus()) {
        for (int a = 0; a < f->size(); ++a)
            for (int b = 0; b < f->size(); ++b) {
                if (f->completely_below(a, b)) {
                    REQUIRE(f->rather_below(a, b));
                    // Interpolation survives in the fixpoint.
                    bool interpolates = false;
                    for (int c = 0; c < f->size(); ++c)
                        if (f->completely_below(a, c) && f->completely_below(c, b)) interpolates = true;
                    REQUIRE(interpolates);
                }
                // Complemented elements sit completely below themselves.
                if (f->complemented_part().test(a)) REQUIRE(f->completely_below(a, a));
            }
    }
}

TEST_CASE("derived element sets on the three-chain") {
    FramePtr f = chain_frame(3);
    REQUIRE(f->complemented_part().to_string() == "{0,2}");
    REQUIRE(f->primes().to_string() == "{0,1}");
    REQUIRE(f->dense_elements().to_string() == "{1,2}");
    REQUIRE(!f->is_boolean());
    REQUIRE(!f->is_zero_dimensional());
}

TEST_CASE("boolean square") {
    FramePtr f = boolean_frame(2);
    REQUIRE(f->is_boolean());
    REQUIRE(f->is_zero_dimensional());
    REQUIRE(f->dense_elements().count() == 1);
    REQUIRE(f->dense_elements().test(f->top()));
}

TEST_CASE("finite zero-dimensional frames are boolean") {
    for (const FramePtr& f : small_corpus()) REQUIRE(f->is_zero_dimensional() == f->is_boolean());
}

TEST_CASE("every element is a meet of primes") {
    for (const FramePtr& f : small_corpus())
        for (int a = 0; a < f->size(); ++a) REQUIRE(f->meet_of(f->primes() & f->up_set(a)) == a);
}

TEST_CASE("join irreducibles of chains and cubes") {
    REQUIRE(chain_frame(5)->join_irreducibles().count() == 4);
    REQUIRE(boolean_frame(3)->join_irreducibles().count() == 3);
    REQUIRE(chain_frame(1)->join_irreducibles().count() == 0);
}

TEST_CASE("frame isomorphism via canonical forms") {
    REQUIRE(frames_isomorphic(*chain_frame(3), *omega(sierpinski_space()).frame));
    REQUIRE(!frames_isomorphic(*chain_frame(4), *boolean_frame(2)));
    REQUIRE(frame_isomorphisms(*boolean_frame(2), *boolean_frame(2)).size() == 2);
    REQUIRE(frame_isomorphisms(*chain_frame(4), *chain_frame(4)).size() == 1);
}

TEST_CASE("subframe closure") {
    FramePtr f = boolean_frame(2);
    Bitset seed(4);
    seed.set(1);
    Bitset closed = subframe_closure(*f, seed);
    REQUIRE(closed.to_string() == "{0,1,3}");
}
