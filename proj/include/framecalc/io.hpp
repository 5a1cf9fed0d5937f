#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "framecalc/biframe.hpp"
#include "framecalc/space.hpp"

namespace framecalc {

// Line-oriented text formats. One record per line, `#` starts a comment.
// Writers emit the canonical form: fixed record order, members ascending,
// single spaces, trailing newline. Parsing a written file and re-writing it
// reproduces the bytes.

struct LatFile {
    std::string name;
    int n = 0;
    std::vector<std::pair<int, int>> covers;
};

struct SpcFile {
    std::string name;
    int points = 0;
    std::vector<Bitset> opens;
};

struct BifFile {
    LatFile total;
    std::vector<int> part1, part2;
};

struct HomFile {
    std::string src, dst;  // catalog names
    std::vector<int> map;
};

struct CngFile {
    LatFile lat;
    std::vector<int> nu;
};

namespace detail {

struct Token {
    std::string text;
    int line, column;
};

inline std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    int lineno = 1;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        std::vector<Token> toks;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) toks.push_back({line.substr(start, i - start), lineno, (int)start + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        if (eol == std::string::npos) break;
        pos = eol + 1;
        ++lineno;
    }
    return lines;
}

inline int parse_int(const Token& t) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t.text, &used);
    } catch (...) {
        fail_parse("expected an integer, got '" + t.text + "'", t.line, t.column);
    }
    if (used != t.text.size()) fail_parse("expected an integer, got '" + t.text + "'", t.line, t.column);
    return v;
}

inline void expect_args(const std::vector<Token>& toks, size_t count) {
    if (toks.size() != count)
        fail_parse("record '" + toks[0].text + "' expects " + std::to_string(count - 1) + " fields", toks[0].line,
                   toks[0].column);
}

}  // namespace detail

inline LatFile parse_lat(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) fail_parse("empty input", 1, 1);
    LatFile f;
    size_t i = 0;
    detail::expect_args(lines[0], 3);
    if (lines[0][0].text != "lat") fail_parse("expected 'lat' header", lines[0][0].line, lines[0][0].column);
    f.name = lines[0][1].text;
    f.n = detail::parse_int(lines[0][2]);
    for (i = 1; i < lines.size(); ++i) {
        if (lines[i][0].text != "cover") break;
        detail::expect_args(lines[i], 3);
        f.covers.emplace_back(detail::parse_int(lines[i][1]), detail::parse_int(lines[i][2]));
    }
    if (i != lines.size())
        fail_parse("unexpected record '" + lines[i][0].text + "'", lines[i][0].line, lines[i][0].column);
    return f;
}

inline std::string write_lat(const LatFile& f) {
    std::string out = "lat " + f.name + " " + std::to_string(f.n) + "\n";
    auto covers = f.covers;
    std::sort(covers.begin(), covers.end());
    for (auto [a, b] : covers) out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

inline LatFile lat_from_frame(const std::string& name, const Frame& f) {
    LatFile out;
    out.name = name;
    out.n = f.size();
    out.covers = f.poset().covers;
    return out;
}

inline FramePtr frame_from_lat(const LatFile& f) { return frame_from_poset(poset_from_covers(f.n, f.covers)); }

inline SpcFile parse_spc(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) fail_parse("empty input", 1, 1);
    SpcFile f;
    detail::expect_args(lines[0], 3);
    if (lines[0][0].text != "spc") fail_parse("expected 'spc' header", lines[0][0].line, lines[0][0].column);
    f.name = lines[0][1].text;
    f.points = detail::parse_int(lines[0][2]);
    if (f.points < 0) fail_parse("negative point count", lines[0][2].line, lines[0][2].column);
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i][0].text != "open")
            fail_parse("unexpected record '" + lines[i][0].text + "'", lines[i][0].line, lines[i][0].column);
        Bitset s(f.points);
        for (size_t j = 1; j < lines[i].size(); ++j) {
            int p = detail::parse_int(lines[i][j]);
            if (p < 0 || p >= f.points)
                fail_parse("point index out of range: " + lines[i][j].text, lines[i][j].line, lines[i][j].column);
            s.set(p);
        }
        f.opens.push_back(std::move(s));
    }
    return f;
}

inline std::string write_spc(const SpcFile& f) {
    std::string out = "spc " + f.name + " " + std::to_string(f.points) + "\n";
    auto opens = f.opens;
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    for (const Bitset& u : opens) {
        out += "open";
        for (int p = u.next(0); p >= 0; p = u.next(p + 1)) out += " " + std::to_string(p);
        out += "\n";
    }
    return out;
}

inline SpcFile spc_from_space(const std::string& name, const FiniteSpace& x) {
    return SpcFile{name, x.points, x.opens};
}

inline FiniteSpace space_from_spc(const SpcFile& f) { return finite_space(f.points, f.opens); }

inline BifFile parse_bif(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) fail_parse("empty input", 1, 1);
    BifFile f;
    size_t i = 0;
    detail::expect_args(lines[0], 3);
    if (lines[0][0].text != "lat") fail_parse("expected 'lat' header", lines[0][0].line, lines[0][0].column);
    f.total.name = lines[0][1].text;
    f.total.n = detail::parse_int(lines[0][2]);
    for (i = 1; i < lines.size() && lines[i][0].text == "cover"; ++i) {
        detail::expect_args(lines[i], 3);
        f.total.covers.emplace_back(detail::parse_int(lines[i][1]), detail::parse_int(lines[i][2]));
    }
    for (auto* part : {&f.part1, &f.part2}) {
        const char* want = part == &f.part1 ? "part1" : "part2";
        if (i >= lines.size() || lines[i][0].text != want)
            fail_parse(std::string("expected '") + want + "' record", i < lines.size() ? lines[i][0].line : 0, 1);
        for (size_t j = 1; j < lines[i].size(); ++j) part->push_back(detail::parse_int(lines[i][j]));
        ++i;
    }
    if (i != lines.size())
        fail_parse("unexpected record '" + lines[i][0].text + "'", lines[i][0].line, lines[i][0].column);
    return f;
}

inline std::string write_bif(const BifFile& f) {
    std::string out = write_lat(f.total);
    for (auto* part : {&f.part1, &f.part2}) {
        auto v = *part;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        out += part == &f.part1 ? "part1" : "part2";
        for (int e : v) out += " " + std::to_string(e);
        out += "\n";
    }
    return out;
}

inline BifFile bif_from_biframe(const std::string& name, const Biframe& b) {
    BifFile f;
    f.total = lat_from_frame(name, *b.total);
    for (int e = b.part1.next(0); e >= 0; e = b.part1.next(e + 1)) f.part1.push_back(e);
    for (int e = b.part2.next(0); e >= 0; e = b.part2.next(e + 1)) f.part2.push_back(e);
    return f;
}

/// auto_close repairs parts to their meet/join closure before validation.
inline Biframe biframe_from_bif(const BifFile& f, bool auto_close = false) {
    FramePtr total = frame_from_lat(f.total);
    Bitset p1(total->size()), p2(total->size());
    for (int e : f.part1) {
        if (e < 0 || e >= total->size()) fail(Errc::validation_error, "part1 element out of range");
        p1.set(e);
    }
    for (int e : f.part2) {
        if (e < 0 || e >= total->size()) fail(Errc::validation_error, "part2 element out of range");
        p2.set(e);
    }
    if (auto_close) {
        p1 = subframe_closure(*total, p1);
        p2 = subframe_closure(*total, p2);
    }
    Biframe b{total, p1, p2};
    validate_biframe(b);
    return b;
}

inline HomFile parse_hom(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) fail_parse("empty input", 1, 1);
    HomFile f;
    detail::expect_args(lines[0], 3);
    if (lines[0][0].text != "hom") fail_parse("expected 'hom' header", lines[0][0].line, lines[0][0].column);
    f.src = lines[0][1].text;
    f.dst = lines[0][2].text;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i][0].text != "map")
            fail_parse("unexpected record '" + lines[i][0].text + "'", lines[i][0].line, lines[i][0].column);
        detail::expect_args(lines[i], 3);
        int from = detail::parse_int(lines[i][1]);
        if (from != (int)f.map.size())
            fail_parse("map records must cover source elements in order", lines[i][1].line, lines[i][1].column);
        f.map.push_back(detail::parse_int(lines[i][2]));
    }
    return f;
}

inline std::string write_hom(const HomFile& f) {
    std::string out = "hom " + f.src + " " + f.dst + "\n";
    for (size_t i = 0; i < f.map.size(); ++i)
        out += "map " + std::to_string(i) + " " + std::to_string(f.map[i]) + "\n";
    return out;
}

inline CngFile parse_cng(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty()) fail_parse("empty input", 1, 1);
    CngFile f;
    size_t i = 0;
    detail::expect_args(lines[0], 3);
    if (lines[0][0].text != "lat") fail_parse("expected 'lat' header", lines[0][0].line, lines[0][0].column);
    f.lat.name = lines[0][1].text;
    f.lat.n = detail::parse_int(lines[0][2]);
    for (i = 1; i < lines.size() && lines[i][0].text == "cover"; ++i) {
        detail::expect_args(lines[i], 3);
        f.lat.covers.emplace_back(detail::parse_int(lines[i][1]), detail::parse_int(lines[i][2]));
    }
    f.nu.assign(f.lat.n, -1);
    for (; i < lines.size(); ++i) {
        if (lines[i][0].text != "nu")
            fail_parse("unexpected record '" + lines[i][0].text + "'", lines[i][0].line, lines[i][0].column);
        detail::expect_args(lines[i], 3);
        int x = detail::parse_int(lines[i][1]);
        if (x < 0 || x >= f.lat.n)
            fail_parse("nu index out of range: " + lines[i][1].text, lines[i][1].line, lines[i][1].column);
        f.nu[x] = detail::parse_int(lines[i][2]);
    }
    for (int v : f.nu)
        if (v < 0) fail_parse("nu records must cover every element", 1, 1);
    return f;
}

inline std::string write_cng(const CngFile& f) {
    std::string out = write_lat(f.lat);
    for (size_t i = 0; i < f.nu.size(); ++i)
        out += "nu " + std::to_string(i) + " " + std::to_string(f.nu[i]) + "\n";
    return out;
}

/// Hasse diagram in DOT, ranked by element height.
inline std::string dot_hasse(const Frame& f, const std::vector<std::string>& labels = {}) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    std::vector<int> height(f.size());
    int max_h = 0;
    for (int i = 0; i < f.size(); ++i) {
        height[i] = f.poset().height(i);
        max_h = std::max(max_h, height[i]);
    }
    for (int i = 0; i < f.size(); ++i) {
        std::string label = labels.empty() ? std::to_string(i) : labels[i];
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (int h = 0; h <= max_h; ++h) {
        std::string rank = "  { rank=same;";
        bool some = false;
        for (int i = 0; i < f.size(); ++i)
            if (height[i] == h) {
                rank += " n" + std::to_string(i) + ";";
                some = true;
            }
        if (some) out += rank + " }\n";
    }
    for (auto [a, b] : f.poset().covers)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    return out + "}\n";
}

}  // namespace framecalc
