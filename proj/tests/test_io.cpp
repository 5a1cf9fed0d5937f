#include <catch2/catch_amalgamated.hpp>

#include "framecalc/catalog.hpp"
#include "framecalc/io.hpp"

using namespace framecalc;

TEST_CASE("lat round trip is byte identical") {
    std::string text = "lat c3 3\ncover 0 1\ncover 1 2\n";
    LatFile f = parse_lat(text);
    REQUIRE(f.name == "c3");
    REQUIRE(f.n == 3);
    REQUIRE(write_lat(f) == text);
    FramePtr frame = frame_from_lat(f);
    REQUIRE(write_lat(lat_from_frame("c3", *frame)) == text);
}

TEST_CASE("lat parsing tolerates comments and blank lines") {
    std::string text = "# a chain\nlat c3 3\n\ncover 0 1   # first step\ncover 1 2\n";
    LatFile f = parse_lat(text);
    REQUIRE(f.covers.size() == 2);
}

TEST_CASE("parse errors carry their location") {
    try {
        parse_lat("lat c3 3\ncover 0 x\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::parse_error);
        REQUIRE(e.line == 2);
        REQUIRE(e.column == 9);
    }
    try {
        parse_lat("spc wrong 2\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::parse_error);
        REQUIRE(e.line == 1);
    }
}

TEST_CASE("covers out of range fail validation, not parsing") {
    LatFile f = parse_lat("lat bad 2\ncover 0 7\n");
    try {
        frame_from_lat(f);
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::index_out_of_range);
    }
}

TEST_CASE("spc round trip") {
    SpcFile f = spc_from_space("sierp", sierpinski_space());
    std::string text = write_spc(f);
    REQUIRE(text == "spc sierp 2\nopen\nopen 1\nopen 0 1\n");
    SpcFile back = parse_spc(text);
    REQUIRE(write_spc(back) == text);
    REQUIRE(space_from_spc(back) == sierpinski_space());
}

TEST_CASE("hom files name catalog entries") {
    std::string text = "hom chain(3) chain(2)\nmap 0 0\nmap 1 1\nmap 2 1\n";
    HomFile f = parse_hom(text);
    REQUIRE(write_hom(f) == text);
    CatalogEntry s = named(f.src), d = named(f.dst);
    FrameHom h{s.frame, d.frame, f.map};
    h.validate();
}

TEST_CASE("cng fixtures") {
    std::string text = "lat c3 3\ncover 0 1\ncover 1 2\nnu 0 0\nnu 1 2\nnu 2 2\n";
    CngFile f = parse_cng(text);
    REQUIRE(write_cng(f) == text);
    FramePtr frame = frame_from_lat(f.lat);
    REQUIRE(!nucleus_violation(*frame, f.nu).has_value());
    CngFile bad = parse_cng("lat c3 3\ncover 0 1\ncover 1 2\nnu 0 0\nnu 1 0\nnu 2 2\n");
    REQUIRE(nucleus_violation(*frame_from_lat(bad.lat), bad.nu).has_value());
}

TEST_CASE("biframe parts can be auto closed") {
    Assembly a = assemble(chain_frame(3));
    Biframe b = congruence_biframe(a);
    BifFile f = bif_from_biframe("cb", b);
    f.part1 = {2};  // drop bottom and top; closure restores them
    std::string text = write_bif(f);
    try {
        (void)biframe_from_bif(parse_bif(text));
        FAIL("expected NotABiframe");
    } catch (const Error& e) {
        REQUIRE(e.code() == Errc::not_a_biframe);
    }
    Biframe repaired = biframe_from_bif(parse_bif(text), /*auto_close=*/true);
    REQUIRE(repaired.part1 == b.part1);
}

TEST_CASE("dot export ranks by height") {
    FramePtr sq = boolean_frame(2);
    std::string dot = dot_hasse(*sq);
    REQUIRE(dot.find("rankdir=BT") != std::string::npos);
    REQUIRE(dot.find("{ rank=same; n1; n2; }") != std::string::npos);
    REQUIRE(dot.find("n0 -> n1;") != std::string::npos);
    REQUIRE(dot.find("n3") != std::string::npos);
}

TEST_CASE("json-free canonical export of a quotient") {
    FramePtr three = chain_frame(3);
    QuotientResult q = quotient(three, nabla(three, 1));
    std::string text = write_lat(lat_from_frame("q", *q.frame));
    REQUIRE(text == "lat q 2\ncover 0 1\n");
}
