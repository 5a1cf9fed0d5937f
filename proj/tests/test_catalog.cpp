#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "framecalc/catalog.hpp"
#include "oracle.hpp"

using namespace framecalc;

TEST_CASE("named registry entries") {
    REQUIRE(named("chain(3)").frame->size() == 3);
    REQUIRE(named("chain(1)").frame->size() == 1);
    REQUIRE(named("boolean(2)").frame->is_boolean());
    REQUIRE(named("boolean(0)").frame->size() == 1);
    REQUIRE(frames_isomorphic(*named("sierpinski_frame").frame, *chain_frame(3)));
    REQUIRE(named("sierpinski_space").kind == CatalogEntry::Kind::space);
    REQUIRE(named("sierpinski_space").space.points == 2);
    REQUIRE(named("grid(2,2)").frame->size() == 9);
    REQUIRE(frames_isomorphic(*named("free_frame(1)").frame, *chain_frame(3)));
    REQUIRE(named("free_frame(2)").frame->size() == 6);
    REQUIRE(named("free_frame(0)").frame->size() == 2);
}

TEST_CASE("negative entries carry rejectable posets") {
    for (const char* name : {"diamond_M3", "pentagon_N5"}) {
        CatalogEntry e = named(name);
        REQUIRE(e.kind == CatalogEntry::Kind::reject_poset);
        try {
            frame_from_poset(e.poset);
            FAIL("expected NotDistributive");
        } catch (const Error& err) {
            REQUIRE(err.code() == Errc::not_distributive);
        }
    }
}

TEST_CASE("unknown names") {
    for (const char* name : {"chain(9)", "boolean(5)", "grid(3,3)", "free_frame(3)", "nonsense"}) {
        try {
            named(name);
            FAIL("expected UnknownName");
        } catch (const Error& e) {
            REQUIRE(e.code() == Errc::unknown_name);
        }
    }
}

TEST_CASE("poset counts reproduce the raw scan") {
    // Raw enumeration over every relation matrix, up to 3 points.
    REQUIRE(oracle::count_posets_raw(0) == 1);
    REQUIRE(oracle::count_posets_raw(1) == 1);
    REQUIRE(oracle::count_posets_raw(2) == 2);
    REQUIRE(oracle::count_posets_raw(3) == 5);
    for (int n = 0; n <= 3; ++n)
        REQUIRE((int)enumerate_posets(n).size() == oracle::count_posets_raw(n));
    REQUIRE(enumerate_posets(4).size() == 16);
    REQUIRE(enumerate_posets(5).size() == 63);
}

TEST_CASE("poset enumeration is duplicate free") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::string> keys;
        for (const Poset& p : enumerate_posets(n)) keys.push_back(poset_canonical_form(p));
        std::sort(keys.begin(), keys.end());
        REQUIRE(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    }
}

TEST_CASE("distributive lattice enumeration from tiny posets") {
    std::vector<FramePtr> lats = enumerate_distributive_lattices(2);
    std::vector<int> sizes;
    for (const FramePtr& f : lats) sizes.push_back(f->size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("lattice enumeration is complete at three elements") {
    // Raw scan over all orders on up to 3 labelled points.
    int raw = 0;
    for (int n = 1; n <= 3; ++n) raw += oracle::count_distributive_lattices_raw(n);
    std::vector<FramePtr> lats = enumerate_distributive_lattices(3, 3);
    REQUIRE((int)lats.size() == raw);  // 1-, 2- and 3-chains only
    REQUIRE(raw == 3);
}

TEST_CASE("lattice enumeration is duplicate free") {
    std::vector<std::string> keys;
    for (const FramePtr& f : enumerate_distributive_lattices(4)) keys.push_back(frame_canonical_form(*f));
    std::sort(keys.begin(), keys.end());
    REQUIRE(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("corpus composition is pinned") {
    Corpus c = corpus();
    REQUIRE(c.lattices.size() == 28);
    REQUIRE(c.spaces.size() == 49);
    for (const CatalogEntry& e : c.lattices) REQUIRE(e.frame->size() <= 16);
    for (const CatalogEntry& e : c.spaces) REQUIRE(e.space.points <= 6);
    // Every lattice passes validation by construction; spot the named ones.
    bool has_chain8 = false, has_grid = false;
    for (const CatalogEntry& e : c.lattices) {
        if (e.name == "chain(8)") has_chain8 = true;
        if (e.name == "grid(2,2)") has_grid = true;
    }
    REQUIRE(has_chain8);
    REQUIRE(has_grid);
}

TEST_CASE("corpus hash matches the pinned manifest") {
    Corpus c = corpus();
    std::ifstream in(std::string(FRAMECALC_DATA_DIR) + "/corpus.manifest", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    REQUIRE(ss.str() == corpus_manifest(c) + "hash " + corpus_hash(c) + "\n");
}
