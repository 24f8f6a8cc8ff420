#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotwidth/branchwidth.hpp"
#include "knotwidth/diagram.hpp"

namespace knotwidth {

// Per noose: c1 true vertices and c2 crossings on it.
struct NooseCounts {
    int c1 = 0;
    int c2 = 0;

    int backbone() const { return c1 + 2 * c2; }
    int interpolation() const { return 2 * c1 + 2 * c2; }
};

enum class SegmentKind : std::uint8_t { backbone, interpolation, leaf_sweep };

std::string to_string(SegmentKind k);

// One stretch of the subdivided tree. Backbone segments sit on the tree edge above
// `node`; interpolation segments sit next to the pant `node` on the edge above `edge_node`;
// leaf sweeps sit at leaf `node`.
struct SketchSegment {
    SegmentKind kind = SegmentKind::backbone;
    int node = -1;
    int edge_node = -1;
    int weight = 0;
};

// Symbolic sphere decomposition: only weight bounds of the level spheres are kept.
struct SphereDecompositionSketch {
    BranchDecomposition tree;
    std::vector<std::optional<NooseCounts>> counts;  // per node, for the tree edge above it
    std::vector<SketchSegment> segments;
    bool tree_diagram = false;
};

// Shadow without cycles apart from loops at true vertices.
bool is_tree_diagram(const Diagram& d);

// Throws InvalidInput when bd is not a sphere-cut decomposition of shadow(d),
// UnsupportedInput for tree diagrams (spherewidth one).
SphereDecompositionSketch lift(const Diagram& d, const BranchDecomposition& bd);

// Largest segment weight; 1 for the tree-diagram sketch.
int width(const SphereDecompositionSketch& s);

SphereDecompositionSketch tree_diagram_sketch();

// Width of the lifted optimal sphere-cut decomposition, 1 for tree diagrams.
int spherewidth_upper(const Diagram& d);

}  // namespace knotwidth
