#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <future>
#include <numeric>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotwidth/branchwidth.hpp"
#include "knotwidth/bubble.hpp"
#include "knotwidth/codecs.hpp"
#include "knotwidth/errors.hpp"
#include "knotwidth/json_io.hpp"
#include "knotwidth/reidemeister.hpp"
#include "knotwidth/sphere_sketch.hpp"
#include "knotwidth/torus_map.hpp"

#ifndef KNOTW_DEFAULT_FIXTURES
#define KNOTW_DEFAULT_FIXTURES "fixtures"
#endif

namespace knotwidth::cli {

using json = nlohmann::json;

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const UnsupportedInput& e) {
        err << "unsupported input: " << e.what() << "\n";
        return unsupported;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return unsupported;
    } catch (const InternalError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return io_error;
    }
}

Diagram load_diagram(const std::string& path, const std::string& format) {
    const std::string text = path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(path);
    if (format == "pd") return parse_pd(text);
    if (format == "gauss") return parse_gauss(text);
    if (format == "json") return diagram_from_json(text);
    throw ParseError("unknown format '" + format + "' (pd, gauss or json)");
}

std::string rational_text(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_coprime(int p, int q) {
    if (p < 1 || q < 1) throw InvalidInput("p and q must be positive");
    if (std::gcd(p, q) != 1)
        throw UnsupportedInput(std::to_string(p) + " and " + std::to_string(q) + " are not coprime; T(p,q) would be a link");
}

struct Row {
    std::string kind;
    std::uint64_t walk_seed = 0;
    int crossings = 0;
    int bw = 0;
    TreewidthBounds tw;
    int sketch = 0;
    std::optional<int> lower;
    std::string decomposition;
};

std::string check_text(const Row& r) {
    if (!r.lower) return "n/a";
    return r.bw >= *r.lower ? "true" : "false";
}

Row measure(const Diagram& d, std::string kind, std::uint64_t walk_seed, std::optional<int> lower) {
    Row r;
    r.kind = std::move(kind);
    r.walk_seed = walk_seed;
    r.crossings = d.num_crossings();
    const Shadow g = shadow(d);
    r.bw = branchwidth(g);
    r.tw = treewidth_bounds(g);
    r.lower = lower;
    if (is_tree_diagram(d)) {
        r.sketch = 1;
    } else {
        const BranchDecomposition bd = spherecut_decomposition(g);
        r.sketch = width(lift(d, bd));
        r.decomposition = decomposition_to_json(bd);
    }
    return r;
}

}  // namespace

std::string resolve_fixture(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    if (const char* env = std::getenv("KNOTW_FIXTURES")) {
        fs::path p = fs::path(env) / name;
        if (fs::exists(p)) return p.string();
    }
    fs::path p = fs::path(KNOTW_DEFAULT_FIXTURES) / name;
    if (fs::exists(p)) return p.string();
    throw Error("fixture '" + name + "' not found (set KNOTW_FIXTURES to its directory)");
}

int cmd_bw(const std::string& input, const std::string& format, const std::string& decomp_path,
           const std::string& sketch_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Diagram d = load_diagram(input, format);
        if (d.split) throw UnsupportedInput("split diagram; width is computed per connected diagram");
        if (is_tree_diagram(d)) {
            err << "tree diagram: spherewidth 1\n";
            return static_cast<int>(unsupported);
        }
        const Shadow g = shadow(d);
        const int bw = branchwidth(g);
        const TreewidthBounds tw = treewidth_bounds(g);
        out << "bw=" << bw << " tw∈[" << tw.lo << "," << tw.hi << "]\n";
        if (!decomp_path.empty() || !sketch_path.empty()) {
            const BranchDecomposition bd = spherecut_decomposition(g);
            if (!decomp_path.empty()) write_file(decomp_path, decomposition_to_json(bd));
            if (!sketch_path.empty()) {
                const auto s = lift(d, bd);
                write_file(sketch_path, sketch_to_json(s));
                out << "sketch width=" << width(s) << "\n";
            }
        }
        return static_cast<int>(ok);
    });
}

int cmd_bound(int p, int q, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_coprime(p, q);
        const int m = std::min(p, q);
        const int crep = c_rep_torus(torus_embedding_of_torus_knot(p, q));
        if (crep != m) throw InternalError("c-rep " + std::to_string(crep) + " differs from min(p,q)");
        const Rational sw(2 * m, 3);
        out << "T(" << p << "," << q << "): c-rep=" << crep << ", sw≥" << rational_text(sw) << ", tw≥" << ceil_div(m, 3) << "\n";
        const Diagram d = torus_knot_diagram(p, q);
        if (is_tree_diagram(d)) {
            out << "canonical diagram: crossings=0 tree diagram, spherewidth 1\n";
            return static_cast<int>(ok);
        }
        const Shadow g = shadow(d);
        const int bw = branchwidth(g);
        const TreewidthBounds tw = treewidth_bounds(g);
        out << "canonical diagram: crossings=" << d.num_crossings() << " bw=" << bw << " tw∈[" << tw.lo << ","
            << tw.hi << "] sketch width=" << spherewidth_upper(d) << "\n";
        return static_cast<int>(ok);
    });
}

int cmd_experiment(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!cfg.seed_given) throw InvalidInput("--seed is required");
        if (cfg.mutations < 0 || cfg.walk_length < 0) throw InvalidInput("counts must be non-negative");
        Diagram base;
        std::optional<int> lower;
        std::string label;
        if (cfg.torus) {
            auto [p, q] = *cfg.torus;
            require_coprime(p, q);
            base = torus_knot_diagram(p, q);
            lower = ceil_div(std::min(p, q), 3);
            label = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
        } else {
            if (cfg.input.empty()) throw InvalidInput("give --torus p q or --input file");
            base = load_diagram(cfg.input, cfg.format);
            label = cfg.input;
        }
        // seeds are drawn up front so rows do not depend on scheduling
        std::mt19937_64 seeds(cfg.seed);
        const int cap = base.num_crossings() + cfg.extra_crossings;
        std::vector<std::future<Row>> jobs;
        jobs.push_back(std::async(std::launch::async, [&] { return measure(base, "canonical", 0, lower); }));
        for (int i = 0; i < cfg.mutations; ++i) {
            const std::uint64_t s = seeds();
            jobs.push_back(std::async(std::launch::async, [&, s] {
                return measure(random_walk(base, cfg.walk_length, s, cap), "mutation", s, lower);
            }));
        }
        std::vector<Row> rows;
        for (auto& j : jobs) rows.push_back(j.get());

        std::ostringstream csv;
        csv << "row,kind,walk_seed,crossings,bw,tw_lo,tw_hi,sketch_width,bw_lower_bound,check\n";
        bool all = true;
        int lo_bw = rows.front().bw, hi_bw = rows.front().bw;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Row& r = rows[i];
            csv << i << "," << r.kind << "," << r.walk_seed << "," << r.crossings << "," << r.bw << "," << r.tw.lo << ","
                << r.tw.hi << "," << r.sketch << "," << (r.lower ? std::to_string(*r.lower) : "") << ","
                << check_text(r) << "\n";
            all = all && check_text(r) != "false";
            lo_bw = std::min(lo_bw, r.bw);
            hi_bw = std::max(hi_bw, r.bw);
        }
        csv << "summary,rows=" << rows.size() << ",,,min_bw=" << lo_bw << ",,,max_bw=" << hi_bw << ","
            << (lower ? std::to_string(*lower) : "") << "," << (lower ? (all ? "true" : "false") : "n/a") << "\n";

        if (!cfg.csv_path.empty()) write_file(cfg.csv_path, csv.str());
        else out << csv.str();
        if (!cfg.json_path.empty()) {
            json j;
            j["schema"] = "experiment.v1";
            j["knot"] = label;
            j["seed"] = cfg.seed;
            j["mutations"] = cfg.mutations;
            j["walk_length"] = cfg.walk_length;
            j["max_crossings"] = cap;
            j["rows"] = json::array();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const Row& r = rows[i];
                json jr = {{"row", i},         {"kind", r.kind},      {"walk_seed", r.walk_seed},
                           {"crossings", r.crossings}, {"bw", r.bw},  {"tw_lo", r.tw.lo},
                           {"tw_hi", r.tw.hi}, {"sketch_width", r.sketch}, {"check", check_text(r)}};
                jr["bw_lower_bound"] = r.lower ? json(*r.lower) : json(nullptr);
                jr["decomposition"] = r.decomposition.empty() ? json(nullptr) : json::parse(r.decomposition);
                j["rows"].push_back(jr);
            }
            j["summary"] = {{"rows", rows.size()}, {"min_bw", lo_bw}, {"max_bw", hi_bw},
                            {"all_checks", lower ? json(all) : json(nullptr)}};
            write_file(cfg.json_path, j.dump(2) + "\n");
        }
        if (!cfg.csv_path.empty())
            out << label << ": " << rows.size() << " rows, bw in [" << lo_bw << "," << hi_bw << "], checks "
                << (lower ? (all ? "pass" : "FAIL") : "n/a") << "\n";
        return static_cast<int>(all ? ok : internal);
    });
}

int cmd_bubble(const std::string& trace_name, int p, int q, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_coprime(p, q);
        DoubleBubbleTrace tr = trace_from_json(read_file(resolve_fixture(trace_name)));
        bool pass = true;
        auto line = [&](bool good, const std::string& what) {
            out << (good ? "PASS " : "FAIL ") << what << "\n";
            pass = pass && good;
        };
        const TraceReport rep = validate_trace(tr);
        line(rep.trivalent, "trivalent");
        line(rep.non_crossing, "non-crossing membranes");
        line(rep.chords_match_edges, "chords match Gamma edges");
        line(rep.cellular, "cellular on the torus");
        line(rep.ownership_ok, "face ownership");
        for (const auto& s : rep.problems) out << "  " << s << "\n";
        if (!rep.ok()) return static_cast<int>(unsupported);

        overlay_trace(tr, p, q);
        const int total = total_weight(tr);
        const auto w = sphere_weights(tr);
        line(w[0] + w[1] + w[2] == 2 * total, "identity 2*" + std::to_string(total) + " = " + std::to_string(w[0]) +
                                                  "+" + std::to_string(w[1]) + "+" + std::to_string(w[2]));
        const int m = std::min(p, q);
        const MembraneTree mt = membrane_tree(tr.circle, tr.chords[0]);
        for (int root = 0; root < mt.num_vertices; ++root) {
            const AnnulusCertificate c = find_annulus_certificate(tr, Membrane::m12, root);
            std::ostringstream what;
            what << "annulus from root " << root << ": classes " << to_string(c.classes[0]) << " "
                 << to_string(c.classes[1]) << ", bound " << rational_text(c.bound) << " >= " << m;
            if (!c.hypothesis_met) what << " (hypothesis-unmet fixture)";
            line(c.hypothesis_met ? c.bound >= Rational(m) : true, what.str());
        }
        const ConsistencyReport cr = check_theorem_consistency(tr, torus_embedding_of_torus_knot(p, q));
        line(cr.total_ok, "total weight " + std::to_string(cr.total) + " >= c-rep " + std::to_string(cr.c_rep));
        line(cr.max_ok, "max sphere weight " + std::to_string(std::max({cr.w[0], cr.w[1], cr.w[2]})) +
                            " >= " + std::to_string(ceil_div(2 * cr.c_rep, 3)));
        return static_cast<int>(pass ? ok : internal);
    });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Widths of knot diagrams and torus-knot bounds"};
    app.require_subcommand(1);

    std::string input, format = "pd", decomp, sketch;
    auto* bw = app.add_subcommand("bw", "branchwidth and treewidth bounds of a diagram");
    bw->add_option("input", input, "diagram file, - for stdin")->required();
    bw->add_option("--format", format, "pd, gauss or json")->check(CLI::IsMember({"pd", "gauss", "json"}));
    bw->add_option("--decomp", decomp, "write the sphere-cut decomposition here");
    bw->add_option("--sketch", sketch, "write the lifted sphere sketch here");

    std::vector<int> tk;
    auto* bound = app.add_subcommand("bound", "lower bounds for a torus knot");
    bound->add_option("--torus-knot", tk, "p q")->expected(2)->required();

    ExperimentConfig cfg;
    std::vector<int> torus;
    auto* exp = app.add_subcommand("experiment", "mutate a diagram and tabulate widths");
    exp->add_option("--torus", torus, "p q")->expected(2);
    exp->add_option("--input", cfg.input, "diagram file instead of a torus knot");
    exp->add_option("--format", cfg.format, "format of --input")->check(CLI::IsMember({"pd", "gauss", "json"}));
    exp->add_option("-n,--mutations", cfg.mutations, "number of mutated diagrams");
    exp->add_option("--walk-length", cfg.walk_length, "Reidemeister moves per mutation");
    auto* seed_opt = exp->add_option("--seed", cfg.seed, "random seed")->required();
    exp->add_option("--extra-crossings", cfg.extra_crossings, "crossing budget above the base diagram");
    exp->add_option("--csv", cfg.csv_path, "CSV output path (stdout if omitted)");
    exp->add_option("--json", cfg.json_path, "JSON output path");

    std::string trace;
    std::vector<int> overlay;
    auto* bub = app.add_subcommand("bubble", "checks on a double-bubble trace");
    bub->add_option("--trace", trace, "bubbletrace.v1 file or fixture name")->required();
    bub->add_option("--overlay", overlay, "p q")->expected(2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return parse_error;
    }

    if (bw->parsed()) return cmd_bw(input, format, decomp, sketch, out, err);
    if (bound->parsed()) return cmd_bound(tk[0], tk[1], out, err);
    if (exp->parsed()) {
        if (!torus.empty()) cfg.torus = std::pair{torus[0], torus[1]};
        cfg.seed_given = seed_opt->count() > 0;
        return cmd_experiment(cfg, out, err);
    }
    return cmd_bubble(trace, overlay[0], overlay[1], out, err);
}

}  // namespace knotwidth::cli
