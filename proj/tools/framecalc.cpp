// framecalc: constructions and property checks for finite frames
// (finite distributive lattices), their congruence frames, biframes and
// spectra. Batch tool; see README for the file formats.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "framecalc/check.hpp"
#include "framecalc/framecalc.hpp"

using namespace framecalc;
using nlohmann::json;

namespace {

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::parse_error:
            return 2;
        case Errc::size_budget_exceeded:
            return 4;
        default:
            return 3;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_parse("cannot open file: " + path, 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::validation_error, "cannot write file: " + path);
    out << text;
}

std::string extension(const std::string& path) {
    auto dot = path.rfind('.');
    return dot == std::string::npos ? "" : path.substr(dot + 1);
}

size_t default_budget() {
    if (const char* env = std::getenv("FRAMECALC_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return (size_t)v;
        fail(Errc::validation_error, "FRAMECALC_BUDGET is not a positive integer");
    }
    return kDefaultAssemblyBudget;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& spec) {
    std::vector<std::pair<int, int>> out;
    if (spec.empty()) return out;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t semi = spec.find(';', pos);
        std::string item = spec.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        size_t comma = item.find(',');
        if (comma == std::string::npos) fail_parse("pair '" + item + "' needs a comma", 0, (int)pos + 1);
        try {
            out.emplace_back(std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1)));
        } catch (...) {
            fail_parse("pair '" + item + "' is not numeric", 0, (int)pos + 1);
        }
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

struct LoadedLat {
    LatFile lat;
    FramePtr frame;
};

LoadedLat load_lattice(const std::string& path) {
    LoadedLat l;
    l.lat = parse_lat(read_file(path));
    l.frame = frame_from_lat(l.lat);
    return l;
}

std::string blocks_str(const Congruence& c) {
    std::string out;
    for (const auto& b : c.blocks()) {
        out += "{";
        for (size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
        out += "}";
    }
    return out;
}

json lat_json(const LatFile& f) {
    json covers = json::array();
    auto sorted = f.covers;
    std::sort(sorted.begin(), sorted.end());
    for (auto [a, b] : sorted) covers.push_back({a, b});
    return json{{"covers", covers}, {"kind", "lat"}, {"n", f.n}, {"name", f.name}};
}

int cmd_validate(const std::string& path, bool close_parts) {
    std::string ext = extension(path);
    std::string text = read_file(path);
    if (ext == "lat") {
        LatFile f = parse_lat(text);
        FramePtr frame = frame_from_lat(f);
        std::cout << "ok lat " << f.name << ": valid distributive lattice, n=" << frame->size() << "\n";
    } else if (ext == "spc") {
        SpcFile f = parse_spc(text);
        FiniteSpace x = space_from_spc(f);
        std::cout << "ok spc " << f.name << ": valid space, points=" << x.points << " opens=" << x.opens.size()
                  << "\n";
    } else if (ext == "bif") {
        BifFile f = parse_bif(text);
        Biframe b = biframe_from_bif(f, close_parts);
        std::cout << "ok bif " << f.total.name << ": valid biframe, total=" << b.total->size()
                  << " str0d=" << (is_strictly_zero_dimensional(b) ? "yes" : "no") << "\n";
    } else if (ext == "hom") {
        HomFile f = parse_hom(text);
        CatalogEntry s = named(f.src), d = named(f.dst);
        if (s.kind != CatalogEntry::Kind::lattice || d.kind != CatalogEntry::Kind::lattice)
            fail(Errc::validation_error, "hom endpoints must name lattices");
        FrameHom h{s.frame, d.frame, f.map};
        h.validate();
        std::cout << "ok hom " << f.src << " -> " << f.dst << ": valid frame homomorphism\n";
    } else if (ext == "cng") {
        CngFile f = parse_cng(text);
        FramePtr frame = frame_from_lat(f.lat);
        if (auto v = nucleus_violation(*frame, f.nu)) fail(Errc::validation_error, "not a nucleus: " + *v);
        std::cout << "ok cng " << f.lat.name << ": valid congruence\n";
    } else {
        fail_parse("unsupported file extension: " + path, 0, 0);
    }
    return 0;
}

int cmd_info(const std::string& path) {
    LoadedLat l = load_lattice(path);
    const Frame& f = *l.frame;
    std::cout << "name " << l.lat.name << "\n";
    std::cout << "size " << f.size() << "\n";
    std::cout << "bottom " << f.bottom() << "\n";
    std::cout << "top " << f.top() << "\n";
    std::cout << "join_irreducibles " << f.join_irreducibles().to_string() << "\n";
    std::cout << "primes " << f.primes().to_string() << "\n";
    std::cout << "complemented " << f.complemented_part().to_string() << "\n";
    std::cout << "dense " << f.dense_elements().to_string() << "\n";
    std::cout << "boolean " << (f.is_boolean() ? "yes" : "no") << "\n";
    std::cout << "predicted_congruences " << (size_t{1} << f.join_irreducibles().count()) << "\n";
    return 0;
}

int cmd_assembly(const std::string& path, size_t budget, int tower_steps, const std::string& dot_out,
                 const std::string& json_out) {
    LoadedLat l = load_lattice(path);
    Assembly a = assemble(l.frame, budget);

    std::vector<int> sizes;
    int stabilization = -1;
    if (tower_steps > 0) {
        TowerResult t = tower(l.frame, tower_steps, budget);
        if (t.budget_exceeded) {
            Error e(Errc::size_budget_exceeded, "tower exceeded budget after " +
                                                    std::to_string(t.levels.size()) + " levels, next predicted " +
                                                    std::to_string(t.predicted));
            e.predicted = t.predicted;
            throw e;
        }
        sizes = t.sizes;
        stabilization = t.stabilization;
    }

    std::cout << "congruences " << a.size() << "\n";
    std::cout << "boolean " << (a.frame()->is_boolean() ? "yes" : "no") << "\n";
    if (!sizes.empty()) {
        std::cout << "tower_sizes";
        for (int s : sizes) std::cout << " " << s;
        std::cout << "\nstable_at " << stabilization << "\n";
    }

    if (!dot_out.empty()) {
        std::vector<std::string> labels(a.size());
        for (int i = 0; i < a.size(); ++i) labels[i] = "C" + std::to_string(i);
        for (int x = 0; x < l.frame->size(); ++x) {
            labels[a.nabla_index(x)] += "=\xE2\x88\x87" + std::to_string(x);   // nabla
            labels[a.delta_index(x)] += "=\xCE\x94" + std::to_string(x);       // delta
        }
        write_output(dot_out, dot_hasse(*a.frame(), labels));
    }
    if (!json_out.empty()) {
        json j;
        j["base"] = lat_json(l.lat);
        j["boolean"] = a.frame()->is_boolean();
        j["congruences"] = json::array();
        for (const Congruence& c : a.congruences()) j["congruences"].push_back(c.nu_array());
        json nab = json::array(), del = json::array();
        for (int x = 0; x < l.frame->size(); ++x) {
            nab.push_back(a.nabla_index(x));
            del.push_back(a.delta_index(x));
        }
        j["nabla"] = nab;
        j["delta"] = del;
        j["size"] = a.size();
        if (!sizes.empty()) {
            j["tower_sizes"] = sizes;
            j["stable_at"] = stabilization;
        }
        write_output(json_out, j.dump(2) + "\n");
    }
    return 0;
}

std::vector<int> parse_elements(const std::string& spec) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= spec.size() && !spec.empty()) {
        size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            fail_parse("element '" + item + "' is not numeric", 0, (int)pos + 1);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// An ideal given as an element set reduces to its join; the clear congruence
// of that join is printed.
int cmd_congruence(const std::string& path, const std::string& pairs_spec, const std::string& ideal_spec) {
    LoadedLat l = load_lattice(path);
    Congruence c = diagonal_congruence(l.frame);
    if (!ideal_spec.empty()) {
        int a = l.frame->bottom();
        for (int e : parse_elements(ideal_spec)) {
            if (e < 0 || e >= l.frame->size()) fail(Errc::index_out_of_range, "ideal element out of range");
            a = l.frame->join(a, e);
        }
        c = clear_congruence(l.frame, a);
        std::cout << "clear_of " << a << "\n";
    } else {
        c = congruence_from_pairs(l.frame, parse_pairs(pairs_spec));
    }
    std::cout << "blocks " << blocks_str(c) << "\n";
    std::cout << "nu";
    for (int x : c.nu_array()) std::cout << " " << x;
    std::cout << "\n";
    return 0;
}

int cmd_quotient(const std::string& path, const std::string& pairs_spec, const std::string& out) {
    LoadedLat l = load_lattice(path);
    Congruence c = congruence_from_pairs(l.frame, parse_pairs(pairs_spec));
    QuotientResult q = quotient(l.frame, c);
    write_output(out, write_lat(lat_from_frame(l.lat.name + "_quotient", *q.frame)));
    return 0;
}

int cmd_spectrum(const std::string& path, const std::string& out) {
    LoadedLat l = load_lattice(path);
    SpectrumResult sp = sigma(l.frame);
    write_output(out, write_spc(spc_from_space(l.lat.name + "_spectrum", sp.space)));
    return 0;
}

int cmd_sobrify(const std::string& path, const std::string& out) {
    SpcFile f = parse_spc(read_file(path));
    FiniteSpace x = space_from_spc(f);
    SobrificationResult s = sobrification(x);
    std::string text = write_spc(spc_from_space(f.name + "_sober", s.spectrum.space));
    text += "# sob map:";
    for (int p : s.sob) text += " " + std::to_string(p);
    text += "\n";
    write_output(out, text);
    return 0;
}

int cmd_skula(const std::string& path, const std::string& out, bool t0_reflect) {
    SpcFile f = parse_spc(read_file(path));
    FiniteSpace x = space_from_spc(f);
    SkulaBiframe sk = skula_biframe(x, t0_reflect);
    write_output(out, write_bif(bif_from_biframe(f.name + "_skula", sk.biframe)));
    return 0;
}

int cmd_check(const check::Options& opts, const std::string& fixture) {
    auto t0 = std::chrono::steady_clock::now();
    check::Report report;
    if (!fixture.empty()) {
        CngFile f = parse_cng(read_file(fixture));
        report = check::check_fixture(frame_from_lat(f.lat), f.nu, opts);
    } else {
        report = check::run(opts);
    }
    std::cout << "check suite=" << opts.suite << " max-size=" << opts.max_size << " seed=" << opts.seed
              << " corpus=" << report.corpus_hash << "\n";
    long long cases = 0;
    for (const check::PropertyResult& r : report.results) {
        cases += r.cases;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << "/" << r.property << " instances=" << r.instances
                  << " cases=" << r.cases;
        if (!r.pass) std::cout << " witness=" << r.witness;
        if (r.pass && !r.note.empty()) std::cout << " note=" << r.note;
        std::cout << "\n";
    }
    std::cout << "RESULT " << (report.all_pass() ? "PASS" : "FAIL") << " properties=" << report.results.size()
              << " cases=" << cases << "\n";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "elapsed " << secs << "s\n";
    return report.all_pass() ? 0 : 5;
}

std::string safe_filename(std::string name) {
    for (char& c : name)
        if (c == '(' || c == ')' || c == ',' || c == ' ') c = '_';
    return name;
}

int cmd_corpus(const std::string& dir, int max_lattice, int max_points) {
    Corpus c = corpus(max_lattice, max_points);
    std::filesystem::create_directories(dir);
    for (const CatalogEntry& e : c.lattices) {
        std::ofstream out(dir + "/" + safe_filename(e.name) + ".lat", std::ios::binary);
        out << write_lat(lat_from_frame(e.name, *e.frame));
    }
    for (const CatalogEntry& e : c.spaces) {
        std::ofstream out(dir + "/" + safe_filename(e.name) + ".spc", std::ios::binary);
        out << write_spc(spc_from_space(e.name, e.space));
    }
    std::ofstream man(dir + "/manifest.txt", std::ios::binary);
    man << corpus_manifest(c);
    man << "hash " << corpus_hash(c) << "\n";
    std::cout << "wrote " << c.lattices.size() << " lattices, " << c.spaces.size() << " spaces, manifest\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framecalc: finite frames, congruence frames, biframes and spectra"};
    app.require_subcommand(1);

    std::string path, out, dot_out, json_out, pairs_spec, fixture, dir;
    bool close_parts = false, t0_reflect = false;
    size_t budget = 0;
    int tower_steps = 0;

    auto* validate = app.add_subcommand("validate", "validate a .lat/.spc/.bif/.hom/.cng file");
    validate->add_option("path", path)->required();
    validate->add_flag("--close-parts", close_parts, "repair biframe parts to their meet/join closure");

    auto* info = app.add_subcommand("info", "basic invariants of a lattice file");
    info->add_option("path", path)->required();

    auto* assemblyc = app.add_subcommand("assembly", "congruence frame of a lattice file");
    assemblyc->add_option("path", path)->required();
    assemblyc->add_option("--budget", budget, "congruence count budget");
    assemblyc->add_option("--tower", tower_steps, "iterate the assembly this many steps");
    assemblyc->add_option("--dot", dot_out, "write a Hasse diagram in DOT");
    assemblyc->add_option("--json", json_out, "write the congruence frame as JSON");

    std::string ideal_spec;
    auto* congruencec = app.add_subcommand("congruence", "congruence generated by pairs");
    congruencec->add_option("path", path)->required();
    congruencec->add_option("--pairs", pairs_spec, "generator pairs, e.g. \"0,1;2,3\"");
    congruencec->add_option("--clear-ideal", ideal_spec,
                            "clear congruence of an ideal, given as elements joined together");

    auto* quotientc = app.add_subcommand("quotient", "quotient lattice by generated congruence");
    quotientc->add_option("path", path)->required();
    quotientc->add_option("--pairs", pairs_spec, "generator pairs");
    quotientc->add_option("--out", out, "output file (default stdout)");

    auto* spectrumc = app.add_subcommand("spectrum", "spectrum space of a lattice file");
    spectrumc->add_option("path", path)->required();
    spectrumc->add_option("--out", out, "output file (default stdout)");

    auto* sobrifyc = app.add_subcommand("sobrify", "sobrification of a space file");
    sobrifyc->add_option("path", path)->required();
    sobrifyc->add_option("--out", out, "output file (default stdout)");

    auto* skulac = app.add_subcommand("skula", "Skula biframe of a space file");
    skulac->add_option("path", path)->required();
    skulac->add_option("--out", out, "output file (default stdout)");
    skulac->add_flag("--t0-reflect", t0_reflect, "apply the T0 reflection first if needed");

    check::Options copts;
    auto* checkc = app.add_subcommand("check", "run property suites against the corpus");
    checkc->add_option("--suite", copts.suite, "formulas|nuclei|assembly|clear-dense|biframe|spatial|all");
    checkc->add_option("--max-size", copts.max_size, "largest instance size");
    checkc->add_option("--seed", copts.seed, "report tag (suites are exhaustive)");
    checkc->add_option("--workers", copts.workers, "worker threads");
    checkc->add_option("--fixture", fixture, "check a congruence fixture (.cng) instead of the corpus");

    int max_lattice = 16, max_points = 6;
    auto* corpusc = app.add_subcommand("corpus", "export the pinned corpus with a manifest");
    corpusc->add_option("--out", dir, "output directory")->required();
    corpusc->add_option("--max-lattice", max_lattice, "largest lattice size");
    corpusc->add_option("--max-points", max_points, "largest space size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (budget == 0) budget = default_budget();
        copts.budget = budget;
        if (validate->parsed()) return cmd_validate(path, close_parts);
        if (info->parsed()) return cmd_info(path);
        if (assemblyc->parsed()) return cmd_assembly(path, budget, tower_steps, dot_out, json_out);
        if (congruencec->parsed()) return cmd_congruence(path, pairs_spec, ideal_spec);
        if (quotientc->parsed()) return cmd_quotient(path, pairs_spec, out);
        if (spectrumc->parsed()) return cmd_spectrum(path, out);
        if (sobrifyc->parsed()) return cmd_sobrify(path, out);
        if (skulac->parsed()) return cmd_skula(path, out, t0_reflect);
        if (checkc->parsed()) return cmd_check(copts, fixture);
        if (corpusc->parsed()) return cmd_corpus(dir, max_lattice, max_points);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what();
        if (e.line > 0) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << "\n";
        return exit_code_for(e);
    }
    return 0;
}
