#include <catch2/catch_amalgamated.hpp>

#include "framecalc/catalog.hpp"

using namespace framecalc;

TEST_CASE("frames of opens") {
    REQUIRE(frames_isomorphic(*omega(sierpinski_space()).frame, *chain_frame(3)));
    REQUIRE(frames_isomorphic(*omega(discrete_space(2)).frame, *boolean_frame(2)));
    REQUIRE(frames_isomorphic(*omega(indiscrete_space(2)).frame, *chain_frame(2)));
}

TEST_CASE("spectra of the basic frames") {
    SpectrumResult s3 = sigma(chain_frame(3));
    REQUIRE(s3.space.points == 2);
    REQUIRE(space_canonical_form(s3.space) == space_canonical_form(sierpinski_space()));

    SpectrumResult sq = sigma(boolean_frame(2));
    REQUIRE(sq.space.points == 2);
    REQUIRE(space_canonical_form(sq.space) == space_canonical_form(discrete_space(2)));

    SpectrumResult s1 = sigma(chain_frame(1));
    REQUIRE(s1.space.points == 0);
    REQUIRE(s1.space.opens.size() == 1);
}

TEST_CASE("sigma unit is an isomorphism on every corpus frame") {
    for (const CatalogEntry& e : corpus(16, 0).lattices) {
        SpectrumResult sp = sigma(e.frame);
        REQUIRE((int)sp.space.opens.size() == e.frame->size());
        REQUIRE(frames_isomorphic(*omega(sp.space).frame, *e.frame));
    }
}

TEST_CASE("sobriety and separation of small spaces") {
    REQUIRE(is_t0(sierpinski_space()));
    REQUIRE(is_sober(sierpinski_space()));
    REQUIRE(is_td(sierpinski_space()));
    REQUIRE(!is_t0(indiscrete_space(2)));
    REQUIRE(!is_sober(indiscrete_space(2)));
    REQUIRE(is_td(discrete_space(3)));
    for (const CatalogEntry& e : corpus(8, 6).spaces) REQUIRE(is_sober(e.space) == is_t0(e.space));
}

TEST_CASE("sobrification is a homeomorphism on T0 spaces") {
    for (const CatalogEntry& e : corpus(8, 5).spaces) {
        if (!is_t0(e.space)) continue;
        SobrificationResult s = sobrification(e.space);
        REQUIRE(s.spectrum.space.points == e.space.points);
        REQUIRE(space_canonical_form(s.spectrum.space) == space_canonical_form(e.space));
        std::vector<char> hit(e.space.points, 0);
        for (int p : s.sob) {
            REQUIRE(!hit[p]);
            hit[p] = 1;
        }
    }
}

TEST_CASE("T0 reflection") {
    FiniteSpace r = t0_reflection(indiscrete_space(3));
    REQUIRE(r.points == 1);
    REQUIRE(is_t0(r));
    FiniteSpace same = t0_reflection(sierpinski_space());
    REQUIRE(same.points == 2);
}

TEST_CASE("T_D separation lemma") {
    REQUIRE(td_congruence_lemma_check(sierpinski_space()));
    REQUIRE(td_congruence_lemma_check(indiscrete_space(2)));
    REQUIRE(td_congruence_lemma_check(discrete_space(3)));
    // Both sides false on the indiscrete pair.
    REQUIRE(!is_td(indiscrete_space(2)));
}

TEST_CASE("E over intersections fails on the indiscrete pair") {
    FiniteSpace x = indiscrete_space(2);
    OmegaResult om = omega(x);
    Bitset a(2), b(2);
    a.set(0);
    b.set(1);
    Congruence ea = subspace_congruence(om, a), eb = subspace_congruence(om, b);
    REQUIRE(ea == diagonal_congruence(om.frame));
    REQUIRE(eb == diagonal_congruence(om.frame));
    // A and B are disjoint, so E over the intersection is everything.
    REQUIRE(subspace_congruence(om, a & b) == all_congruence(om.frame));
    REQUIRE(!(join(ea, eb) == subspace_congruence(om, a & b)));
    // Unions always work.
    REQUIRE(subspace_congruence(om, a | b) == meet(ea, eb));
}

TEST_CASE("skula spaces") {
    FiniteSpace sk = skula_space(sierpinski_space());
    REQUIRE(sk.opens.size() == 4);  // discrete on two points
    REQUIRE(skula_space(discrete_space(2)) == discrete_space(2));
    // Three-point chain space: opens are a flag of sets.
    Bitset a(3), ab(3);
    a.set(0);
    ab.set(0);
    ab.set(1);
    FiniteSpace chain3 = finite_space(3, {Bitset(3), a, ab, Bitset::full(3)});
    FiniteSpace sk3 = skula_space(chain3);
    REQUIRE(sk3.opens.size() == 8);
    REQUIRE(skula_space(sk3) == sk3);
}

TEST_CASE("skula biframes") {
    SkulaBiframe sb = skula_biframe(sierpinski_space());
    REQUIRE(sb.om.frame->size() == 4);
    REQUIRE(is_strictly_zero_dimensional(sb.biframe));
    try {
        (void)skula_biframe(indiscrete_space(2));
        FAIL("expected NotT0");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::not_t0);
    }
    SkulaBiframe reflected = skula_biframe(indiscrete_space(2), /*t0_reflect=*/true);
    REQUIRE(reflected.base.points == 1);
}

TEST_CASE("skula comparison is an isomorphism") {
    REQUIRE(skula_iso_check(chain_frame(3)));
    REQUIRE(skula_iso_check(boolean_frame(2)));
    REQUIRE(skula_iso_check(chain_frame(1)));
    for (const CatalogEntry& e : corpus(8, 0).lattices) REQUIRE(skula_iso_check(e.frame));
}

TEST_CASE("kernel of the skula comparison is trivial") {
    FramePtr three = chain_frame(3);
    Assembly a = assemble(three);
    SpectrumResult sp = sigma(three);
    SkulaBiframe sk = skula_biframe(sp.space);
    FrameHom h = skula_canonical_hom(a, sp, sk);
    REQUIRE(hom_kernel(h) == diagonal_congruence(a.frame()));
}

TEST_CASE("primes of the congruence frame are the prime clears") {
    FramePtr three = chain_frame(3);
    Assembly a = assemble(three);
    Bitset primes = prime_congruences(a);
    REQUIRE(primes.to_string() == "{1,2}");  // delta_a and nabla_a
    Bitset expected(a.frame()->size());
    for (int p = three->primes().next(0); p >= 0; p = three->primes().next(p + 1))
        expected.set(a.index_of(clear_congruence(three, p)));
    REQUIRE(primes == expected);
}

TEST_CASE("every congruence is spatial and fixed by the reflection") {
    for (const CatalogEntry& e : corpus(6, 0).lattices) {
        Assembly a = assemble(e.frame);
        REQUIRE(spatial_congruences(a).count() == a.frame()->size());
        for (const Congruence& c : a.congruences())
            REQUIRE(spatial_reflection_of_quotient(a, c) == c);
    }
}

TEST_CASE("skula naturality square for a quotient map") {
    FramePtr three = chain_frame(3), two = chain_frame(2);
    FrameHom f{three, two, {0, 1, 1}};
    f.validate();
    Assembly a3 = assemble(three), a2 = assemble(two);
    SpectrumResult sp3 = sigma(three), sp2 = sigma(two);
    SkulaBiframe sk3 = skula_biframe(sp3.space), sk2 = skula_biframe(sp2.space);
    FrameHom h3 = skula_canonical_hom(a3, sp3, sk3);
    FrameHom h2 = skula_canonical_hom(a2, sp2, sk2);
    FrameHom cf = functor_on_hom(f, a3, a2);
    FrameHom skf = skula_functor_hom(f, sp3, sk3, sp2, sk2);
    REQUIRE(compose(h2, cf).map == compose(skf, h3).map);
}
