// Acceptance run: one PASS/FAIL line per criterion. Every check is an exact
// integer or rational comparison; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "knotwidth/branchwidth.hpp"
#include "knotwidth/bubble.hpp"
#include "knotwidth/codecs.hpp"
#include "knotwidth/errors.hpp"
#include "knotwidth/json_io.hpp"
#include "knotwidth/reidemeister.hpp"
#include "knotwidth/sphere_sketch.hpp"
#include "knotwidth/torus_map.hpp"
#include "oracles.hpp"

using namespace knotwidth;
using namespace knotwidth::testing;

namespace {

constexpr double kLimitCatalog = 300.0;
constexpr double kLimitCrep = 10.0;
constexpr double kLimitSketch = 300.0;
constexpr double kLimitLowerBound = 900.0;
constexpr double kLimitBubble = 60.0;
constexpr double kLimitProperties = 300.0;

constexpr int kWalkLength = 20;
constexpr int kExtraCrossings = 20;

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

Diagram trefoil() { return parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"); }

std::string pair_name(int p, int q) { return "T(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

Outcome catalog_equivalence() {
    Outcome o;
    // unrooted sensed planar maps with n edges, n = 0..7
    const std::vector<std::size_t> known = {1, 2, 4, 14, 57, 312, 2071, 15030};
    std::size_t total = 0;
    for (int n = 0; n <= 7; ++n) {
        const auto maps = planar_maps(n);
        o.require(maps.size() == known[n], "catalog size for " + std::to_string(n) + " edges is " + std::to_string(maps.size()));
        for (const auto& m : maps) {
            const PlaneGraph g = to_plane_graph(m);
            const int fast = branchwidth(g), slow = brute_force_branchwidth(g);
            o.require(fast == slow, "map " + map_code(m) + ": bw " + std::to_string(fast) + " vs brute force " + std::to_string(slow));
        }
        total += maps.size();
    }
    o.detail = std::to_string(total) + " maps with at most 7 edges";
    return o;
}

Outcome crep_torus_knots() {
    Outcome o;
    int pairs = 0;
    for (int p = 2; p <= 8; ++p) {
        for (int q = 2; q <= 8; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const int c = c_rep_torus(torus_embedding_of_torus_knot(p, q));
            o.require(c == std::min(p, q), pair_name(p, q) + ": c-rep " + std::to_string(c));
            ++pairs;
        }
    }
    o.detail = std::to_string(pairs) + " coprime pairs";
    return o;
}

void check_sketch(Outcome& o, const Diagram& d, const std::string& name) {
    const Shadow g = shadow(d);
    if (is_tree_diagram(d)) {
        o.require(spherewidth_upper(d) == 1, name + ": tree diagram width");
        return;
    }
    const BranchDecomposition bd = spherecut_decomposition(g);
    const DecompositionReport rep = check_decomposition(g, bd);
    o.require(rep.ok(), name + ": decomposition rejected by checker");
    const int w = width(lift(d, bd));
    o.require(w <= 2 * bd.width, name + ": sketch width " + std::to_string(w) + " > 2*" + std::to_string(bd.width));
}

Outcome sketch_bound() {
    Outcome o;
    int count = 0;
    for (int p = 2; p <= 6; ++p) {
        for (int q = p + 1; q <= 8; ++q) {
            if (std::gcd(p, q) != 1) continue;
            check_sketch(o, torus_knot_diagram(p, q), pair_name(p, q));
            ++count;
        }
    }
    const Diagram base = trefoil();
    std::mt19937_64 seeds(3);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t s = seeds();
        check_sketch(o, random_walk(base, kWalkLength, s, base.num_crossings() + kExtraCrossings),
                     "trefoil walk " + std::to_string(s));
    }
    o.detail = std::to_string(count) + " canonical diagrams, 100 trefoil mutations";
    return o;
}

Outcome lower_bound_consistency() {
    Outcome o;
    std::ostringstream detail;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 5}, {5, 6}, {6, 7}, {7, 8}}) {
        const int need = ceil_div(std::min(p, q), 3);
        const Diagram base = torus_knot_diagram(p, q);
        std::mt19937_64 seeds(static_cast<std::uint64_t>(100 * p + q));
        int lo = branchwidth(shadow(base)), hi = lo;
        o.require(lo >= need, pair_name(p, q) + " canonical: bw " + std::to_string(lo));
        for (int i = 0; i < 25; ++i) {
            const std::uint64_t s = seeds();
            const Diagram d = random_walk(base, kWalkLength, s, base.num_crossings() + kExtraCrossings);
            const int bw = branchwidth(shadow(d));
            o.require(bw >= need, pair_name(p, q) + " walk " + std::to_string(s) + ": bw " + std::to_string(bw));
            lo = std::min(lo, bw);
            hi = std::max(hi, bw);
        }
        detail << pair_name(p, q) << " bw " << lo << ".." << hi << " >= " << need << "; ";
    }
    o.detail = detail.str();
    return o;
}

Outcome double_bubble() {
    Outcome o;
    const DoubleBubbleTrace base = trace_from_json(read_file(fixture_path("appendixA.bubbletrace.json")));
    o.require(validate_trace(base).ok(), "fixture does not validate");
    int pairs = 0, certificates = 0;
    for (int p = 1; p <= 6; ++p) {
        for (int q = 1; q <= 6; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            const int m = std::min(p, q);
            DoubleBubbleTrace tr = base;
            overlay_trace(tr, p, q);
            const auto w = sphere_weights(tr);
            o.require(w[0] + w[1] + w[2] == 2 * total_weight(tr), pair_name(p, q) + ": sphere weight identity");
            o.require(std::max({w[0], w[1], w[2]}) >= ceil_div(2 * m, 3), pair_name(p, q) + ": max sphere weight");
            const ConsistencyReport cr = check_theorem_consistency(tr, torus_embedding_of_torus_knot(p, q));
            o.require(cr.ok(), pair_name(p, q) + ": consistency report");
            const int regions = membrane_tree(tr.circle, tr.chords[0]).num_vertices;
            for (int root = 0; root < regions; ++root) {
                const std::string name = pair_name(p, q) + " root " + std::to_string(root);
                try {
                    const AnnulusCertificate c = find_annulus_certificate(tr, Membrane::m12, root);
                    for (const Vec2& k : c.classes) o.require(is_compressible(k), name + ": class " + to_string(k));
                    o.require(c.bound >= Rational(m), name + ": bound below min(p,q)");
                    o.require(Rational(c.support_weight) >= c.bound, name + ": support lighter than bound");
                    ++certificates;
                } catch (const Error& e) {
                    o.require(false, name + ": " + e.what());
                }
            }
        }
    }
    o.detail = std::to_string(pairs) + " overlays, " + std::to_string(certificates) + " certificates";
    return o;
}

Outcome property_suites() {
    Outcome o;
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const auto chords = random_matching(n, rng);
        std::vector<int> circle(2 * n);
        std::iota(circle.begin(), circle.end(), 0);
        const MembraneTree t = membrane_tree(circle, chords);
        o.require(is_spanning_tree(t.num_vertices, t.edges), "membrane tree " + std::to_string(i) + " is not a tree");
    }

    int files = 0;
    for (const auto& f : corpus_files()) {
        const std::string text = read_file(f);
        Diagram d;
        if (f.ends_with(".pd")) d = parse_pd(text);
        else if (f.ends_with(".gauss")) d = parse_gauss(text);
        else d = diagram_from_json(text);
        o.require(isomorphic(diagram_from_json(diagram_to_json(d)), d), f + ": JSON round trip");
        if (d.true_vertices.empty() || d.num_crossings() == 0)
            o.require(isomorphic(parse_pd(emit_pd(d)), d), f + ": PD round trip");
        ++files;
    }

    const std::vector<Move> moves = {Move::r1_add, Move::r1_remove, Move::r2_add, Move::r2_remove, Move::r3};
    int applied = 0;
    for (const Diagram& d : random_diagrams(40, 12, 77)) {
        for (Move mv : moves) {
            for (const Site& s : enumerate_sites(d, mv)) {
                const Diagram e = reidemeister(d, s);
                o.require(validate(e).valid, describe(s) + ": invalid result");
                o.require(e.num_crossings() - d.num_crossings() == crossing_delta(mv), describe(s) + ": crossing delta");
                ++applied;
            }
        }
    }

    for (const Diagram& d : random_diagrams(50, 20, 4242)) {
        const Shadow g = shadow(d);
        bool prev = false;
        for (int k = 0; k <= 10; ++k) {
            const bool now = ratcatcher_decision(g, k);
            o.require(!prev || now, "decision not monotone at k=" + std::to_string(k));
            prev = now;
        }
    }
    o.detail = "1000 matchings, " + std::to_string(files) + " corpus files, " + std::to_string(applied) +
               " moves, 50 shadows";
    return o;
}

bool report(int index, const std::string& name, double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < limit;
    const bool pass = o.ok && in_time;
    std::cout << (pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << o.detail << " [" << std::fixed
              << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << limit << " s]\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    if (!in_time) std::cout << "    over the time limit\n";
    std::cout.flush();
    return pass;
}

}  // namespace

int main() {
    bool all = true;
    all &= report(1, "branchwidth equals brute force on planar maps", kLimitCatalog, catalog_equivalence);
    all &= report(2, "c-rep of T(p,q) equals min(p,q)", kLimitCrep, crep_torus_knots);
    all &= report(3, "sketch width at most twice branchwidth", kLimitSketch, sketch_bound);
    all &= report(4, "bw >= ceil(min(p,q)/3) on torus knot diagrams", kLimitLowerBound, lower_bound_consistency);
    all &= report(5, "double bubble arithmetic on the torus fixture", kLimitBubble, double_bubble);
    all &= report(6, "property suites", kLimitProperties, property_suites);
    return all ? 0 : 1;
}
