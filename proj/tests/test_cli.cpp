#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FRAMECALC_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

RunResult run_stdout_only(const std::string& args) {
    std::string cmd = std::string(FRAMECALC_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(FRAMECALC_DATA_DIR) + "/" + name; }

std::string tmp_path(const std::string& name) {
    std::string dir = std::filesystem::temp_directory_path() / "framecalc_cli_tests";
    std::filesystem::create_directories(dir);
    return dir + "/" + name;
}

}  // namespace

TEST_CASE("validate accepts a chain and reports its size") {
    RunResult r = run("validate " + data("chain3.lat"));
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("valid distributive lattice, n=3") != std::string::npos);
}

TEST_CASE("validate rejects the pentagon with exit code 3") {
    RunResult r = run("validate " + data("pentagon.lat"));
    REQUIRE(r.exit_code == 3);
    REQUIRE(r.output.find("distributivity fails") != std::string::npos);
    REQUIRE(run("validate " + data("diamond3.lat")).exit_code == 3);
}

TEST_CASE("parse errors exit 2 and carry a location") {
    RunResult r = run("validate " + data("malformed.lat"));
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.output.find("line 2") != std::string::npos);
}

TEST_CASE("info prints the predicted congruence count") {
    RunResult r = run("info " + data("chain3.lat"));
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("size 3\n") != std::string::npos);
    REQUIRE(r.output.find("join_irreducibles {1,2}") != std::string::npos);
    REQUIRE(r.output.find("predicted_congruences 4") != std::string::npos);
}

TEST_CASE("assembly reports counts and tower sizes") {
    RunResult r = run("assembly " + data("chain3.lat") + " --tower 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("congruences 4") != std::string::npos);
    REQUIRE(r.output.find("boolean yes") != std::string::npos);
    REQUIRE(r.output.find("tower_sizes 3 4 4") != std::string::npos);
    REQUIRE(r.output.find("stable_at 1") != std::string::npos);
}

TEST_CASE("assembly json export") {
    RunResult r = run("assembly " + data("chain3.lat") + " --json -");
    REQUIRE(r.exit_code == 0);
    auto start = r.output.find('{');
    REQUIRE(start != std::string::npos);
    nlohmann::json j = nlohmann::json::parse(r.output.substr(start));
    REQUIRE(j["size"] == 4);
    REQUIRE(j["boolean"] == true);
    REQUIRE(j["congruences"].size() == 4);
}

TEST_CASE("assembly budget refusal exits 4") {
    // An eight-chain predicts 128 congruences.
    std::string lat = tmp_path("chain8.lat");
    {
        FILE* f = fopen(lat.c_str(), "w");
        REQUIRE(f);
        fputs("lat chain8 8\n", f);
        for (int i = 0; i + 1 < 8; ++i) fprintf(f, "cover %d %d\n", i, i + 1);
        fclose(f);
    }
    RunResult r = run("assembly " + lat + " --budget 64");
    REQUIRE(r.exit_code == 4);
    REQUIRE(r.output.find("128") != std::string::npos);
}

TEST_CASE("congruence blocks from generator pairs") {
    RunResult r = run("congruence " + data("chain3.lat") + " --pairs 0,1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("blocks {0,1}{2}") != std::string::npos);
    REQUIRE(r.output.find("nu 1 1 2") != std::string::npos);
}

TEST_CASE("quotient emits a canonical lattice file") {
    RunResult r = run_stdout_only("quotient " + data("chain3.lat") + " --pairs 0,1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "lat chain3_quotient 2\ncover 0 1\n");
}

TEST_CASE("spectrum of the three-chain is the sierpinski space") {
    RunResult r = run_stdout_only("spectrum " + data("chain3.lat"));
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "spc chain3_spectrum 2\nopen\nopen 0\nopen 0 1\n");
}

TEST_CASE("sobrify keeps a sober space") {
    RunResult r = run_stdout_only("sobrify " + data("sierpinski.spc"));
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("spc sierpinski_sober 2\n") == 0);
}

TEST_CASE("skula of the sierpinski space is the discrete biframe") {
    RunResult r = run_stdout_only("skula " + data("sierpinski.spc"));
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("lat sierpinski_skula 4\n") == 0);
    REQUIRE(r.output.find("part1 0 2 3\n") != std::string::npos);
    REQUIRE(r.output.find("part2 0 1 3\n") != std::string::npos);
}

TEST_CASE("skula requires T0 unless reflected") {
    REQUIRE(run("skula " + data("indiscrete2.spc")).exit_code == 3);
    REQUIRE(run("skula " + data("indiscrete2.spc") + " --t0-reflect").exit_code == 0);
}

TEST_CASE("check runs a suite and is deterministic across workers") {
    RunResult a = run_stdout_only("check --suite formulas --max-size 5");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.output.find("RESULT PASS") != std::string::npos);
    RunResult b = run_stdout_only("check --suite formulas --max-size 5 --workers 3");
    REQUIRE(b.output == a.output);
    RunResult c = run_stdout_only("check --suite formulas --max-size 5");
    REQUIRE(c.output == a.output);
}

TEST_CASE("check rejects unknown suites") {
    REQUIRE(run("check --suite bogus").exit_code == 3);
}

TEST_CASE("corrupted congruence fixtures fail with a witness and exit 5") {
    RunResult r = run("check --suite nuclei --fixture " + data("corrupt.cng"));
    REQUIRE(r.exit_code == 5);
    REQUIRE(r.output.find("FAIL nuclei/fixture-nucleus-laws") != std::string::npos);
    REQUIRE(r.output.find("not inflationary at 1") != std::string::npos);
}

TEST_CASE("validate accepts hom and cng files") {
    std::string hom = tmp_path("q.hom");
    {
        FILE* f = fopen(hom.c_str(), "w");
        REQUIRE(f);
        fputs("hom chain(3) chain(2)\nmap 0 0\nmap 1 1\nmap 2 1\n", f);
        fclose(f);
    }
    REQUIRE(run("validate " + hom).exit_code == 0);
    REQUIRE(run("validate " + data("corrupt.cng")).exit_code == 3);
}

TEST_CASE("corpus export writes a manifest") {
    std::string dir = tmp_path("corpus_export");
    RunResult r = run("corpus --out " + dir + " --max-lattice 6 --max-points 3");
    REQUIRE(r.exit_code == 0);
    FILE* f = fopen((dir + "/manifest.txt").c_str(), "r");
    REQUIRE(f);
    fclose(f);
    FILE* g = fopen((dir + "/chain_3_.lat").c_str(), "r");
    REQUIRE(g);
    fclose(g);
}
