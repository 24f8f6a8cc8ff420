#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "knotwidth/torus_map.hpp"

namespace knotwidth {

// Membrane M_ij separates balls B_i and B_j; balls are numbered 0, 1, 2 for B1, B2, B3.
enum class Membrane : std::uint8_t { m12, m13, m23 };

std::string to_string(Membrane m);
Membrane membrane_from_string(const std::string& s);
std::array<int, 2> balls_of(Membrane m);

// Combinatorial trace of a double bubble on the torus.
// circle: the points of the common boundary circle on the torus, in cyclic order (Gamma vertex ids).
// chords[m]: the matching cut on membrane m, as pairs of Gamma vertex ids.
// gamma: the induced graph; edge e lies on membrane edge_membrane[e].
// face_owner[f]: ball owning face f of Embedding(gamma.map).
struct DoubleBubbleTrace {
    std::vector<int> circle;
    std::array<std::vector<std::array<int, 2>>, 3> chords;
    TorusMap gamma;
    std::vector<Membrane> edge_membrane;
    std::vector<int> face_owner;
};

struct TraceReport {
    bool trivalent = true;
    bool non_crossing = true;
    bool chords_match_edges = true;
    bool cellular = true;
    bool ownership_ok = true;
    std::vector<std::string> problems;

    bool ok() const { return trivalent && non_crossing && chords_match_edges && cellular && ownership_ok; }
};

TraceReport validate_trace(const DoubleBubbleTrace& tr);

// Gamma edge carrying chord i of membrane m, or -1.
int edge_of_chord(const DoubleBubbleTrace& tr, Membrane m, int chord);

// Sets every Gamma edge weight to its crossing count with the (p,q) curve.
void overlay_trace(DoubleBubbleTrace& tr, int p, int q);

// w[i]: weight of sphere S_i, summed over the two membranes bounding B_i.
std::array<int, 3> sphere_weights(const DoubleBubbleTrace& tr);
int total_weight(const DoubleBubbleTrace& tr);

// Dual tree of a chord diagram. Region r is numbered by the first circle arc
// it touches (arc i runs from circle[i] to circle[i+1]); tree edge i is chord i.
struct MembraneTree {
    int num_vertices = 1;
    std::vector<std::array<int, 2>> edges;  // {inside region, outside region}
    std::vector<int> region_of_arc;
};

MembraneTree membrane_tree(const std::vector<int>& circle, const std::vector<std::array<int, 2>>& chords);

bool is_tree(const MembraneTree& t);

struct BoundaryCycle {
    std::vector<int> darts;       // Gamma darts, each seen from the surface face it bounds
    std::vector<char> duplicate;  // dart lies on an uncovered arc of the merged membrane
    Vec2 signature;
    bool capped = false;

    int weight(const TorusMap& gamma) const;
};

struct SurfaceComponent {
    std::vector<int> faces;
    int vertices = 0;
    int edges = 0;
    int euler = 0;
    bool orientable = true;
    std::vector<BoundaryCycle> boundaries;

    int open_boundaries() const;
};

// Faces of the two balls bounding `membrane`, glued along the covered chords.
struct MergeSurface {
    Membrane membrane = Membrane::m12;
    std::vector<int> covered;  // chord ids
    std::vector<SurfaceComponent> components;
};

// covered: chord ids forming a connected edge set of the membrane tree (empty = root only).
MergeSurface merge(const DoubleBubbleTrace& tr, Membrane membrane, const std::vector<int>& covered);

// Caps boundaries of signature (0,0) on components with at least two open
// boundaries or with Euler characteristic <= 0.
MergeSurface fill(MergeSurface s);

bool is_union_of_disks(const MergeSurface& s);

struct AnnulusCertificate {
    Membrane membrane = Membrane::m12;
    int root = 0;
    std::vector<int> covered;  // chords of the minimal tree, in growth order
    std::array<std::vector<int>, 2> boundary_edges;
    std::array<Vec2, 2> classes;
    std::array<int, 2> boundary_weights{};
    std::vector<int> support;  // distinct Gamma edges on either boundary
    int support_weight = 0;
    Rational bound;
    bool degenerate = false;           // every boundary weight is zero
    bool hypothesis_met = true;        // both classes compressible
};

// Grows the covered tree from `root` in breadth-first order (ties by chord id) until the
// filled surface stops being a union of disks, then certifies the annulus that appeared.
// Throws InternalError when the first non-disk component is not an annulus.
AnnulusCertificate find_annulus_certificate(const DoubleBubbleTrace& tr, Membrane membrane, int root);

struct ConsistencyReport {
    int total = 0;
    std::array<int, 3> w{};
    int c_rep = 0;
    bool total_ok = false;
    bool max_ok = false;

    bool ok() const { return total_ok && max_ok; }
};

// total weight >= c_rep(t) and max w_i >= ceil(2 c_rep(t) / 3).
ConsistencyReport check_theorem_consistency(const DoubleBubbleTrace& tr, const TorusMap& t);

}  // namespace knotwidth
