#include <catch2/catch_amalgamated.hpp>

#include "framecalc/catalog.hpp"
#include "framecalc/congruence.hpp"

using namespace framecalc;

TEST_CASE("quotient map three-chain to two-chain") {
    FramePtr three = chain_frame(3), two = chain_frame(2);
    FrameHom h{three, two, {0, 1, 1}};
    h.validate();
    REQUIRE(h.is_surjective());
    Congruence k = hom_kernel(h);
    REQUIRE(k.nu_array() == std::vector<int>{0, 2, 2});
    REQUIRE(k.blocks() == std::vector<std::vector<int>>{{0}, {1, 2}});
}

TEST_CASE("identity hom has diagonal kernel") {
    FramePtr f = boolean_frame(2);
    FrameHom h = identity_hom(f);
    h.validate();
    REQUIRE(hom_kernel(h) == diagonal_congruence(f));
    REQUIRE(h.is_dense());
    REQUIRE(h.is_codense());
}

TEST_CASE("collapsing endomorphism of the three-chain") {
    FramePtr three = chain_frame(3);
    FrameHom h{three, three, {0, 0, 2}};
    REQUIRE(h.is_valid());
    REQUIRE(!h.is_dense());  // 1 is not bottom but maps to bottom
    REQUIRE(h.is_codense());
    REQUIRE(hom_kernel(h).blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("hom violations carry witnesses") {
    FramePtr three = chain_frame(3);
    try {
        FrameHom{three, three, {0, 2, 1}}.validate();
        FAIL("expected NotAHom");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::not_a_hom);
    }
    try {
        FrameHom{three, three, {0, 1}}.validate();
        FAIL("expected NotAHom");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::not_a_hom);
    }
}

TEST_CASE("right adjoint satisfies the Galois property") {
    std::vector<std::pair<FramePtr, FramePtr>> cases = {
        {chain_frame(3), chain_frame(2)},
        {boolean_frame(2), chain_frame(3)},
        {chain_frame(4), boolean_frame(2)},
    };
    for (auto& [a, b] : cases)
        for (const FrameHom& h : enumerate_homs(a, b)) {
            std::vector<int> adj = h.right_adjoint();
            for (int x = 0; x < a->size(); ++x)
                for (int y = 0; y < b->size(); ++y)
                    REQUIRE(b->leq(h(x), y) == a->leq(x, adj[y]));
            for (int x = 0; x < a->size(); ++x) REQUIRE(a->leq(x, adj[h(x)]));
            for (int y = 0; y < b->size(); ++y) REQUIRE(b->leq(h(adj[y]), y));
        }
}

TEST_CASE("hom enumeration counts") {
    REQUIRE(enumerate_homs(chain_frame(2), chain_frame(2)).size() == 1);
    REQUIRE(enumerate_homs(boolean_frame(2), chain_frame(2)).size() == 2);
    REQUIRE(enumerate_homs(chain_frame(3), chain_frame(3)).size() == 3);
}

TEST_CASE("composition") {
    FramePtr four = chain_frame(4), three = chain_frame(3), two = chain_frame(2);
    FrameHom f{four, three, {0, 1, 1, 2}};
    FrameHom g{three, two, {0, 0, 1}};
    f.validate();
    g.validate();
    FrameHom gf = compose(g, f);
    REQUIRE(gf.map == std::vector<int>{0, 0, 0, 1});
    gf.validate();
}
