#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotwidth/plane_graph.hpp"

namespace knotwidth {

// Closed curve through faces and vertices: faces[0], vertices[0], faces[1], vertices[1], ...
// corners[2i] joins faces[i] to vertices[i], corners[2i+1] joins vertices[i] to faces[i+1]
// (corner ids as in Embedding).
struct Noose {
    std::vector<int> faces;
    std::vector<int> vertices;
    std::vector<int> corners;

    int weight() const { return static_cast<int>(vertices.size()); }
};

// Rooted at node `root`; the tree edge of node v joins v to parent[v].
// leaf_edge[v] is the graph edge of a leaf, -1 for inner nodes.
// noose[v] describes the tree edge above v, if present.
struct BranchDecomposition {
    std::vector<int> parent;
    std::vector<int> leaf_edge;
    std::vector<std::optional<Noose>> noose;
    int root = -1;
    int width = 0;

    int num_nodes() const { return static_cast<int>(parent.size()); }
};

struct TreewidthBounds {
    int lo = 0;
    int hi = 0;
};

// Number of vertices with edges on both sides of the bipartition (in_set, rest).
int separation_order(const PlaneGraph& g, const std::vector<char>& in_set);

// Graph edges in the region enclosed by the noose on the side of its first corner's edge.
// Throws InvalidInput if the noose is not a closed curve of g's embedding.
std::vector<char> noose_side(const PlaneGraph& g, const Noose& n);

bool ratcatcher_decision(const Shadow& g, int k);
int branchwidth(const Shadow& g);
BranchDecomposition spherecut_decomposition(const Shadow& g);
int brute_force_branchwidth(const Shadow& g);
TreewidthBounds treewidth_bounds(const Shadow& g);

// True if g has no cycle (loops and parallel edges count as cycles).
bool is_forest(const PlaneGraph& g);
bool has_bridge(const PlaneGraph& g);
// A loop with other edges on both of its sides, or -1.
int enclosing_loop(const PlaneGraph& g);

struct DecompositionReport {
    bool tree_ok = true;
    bool leaves_ok = true;
    bool nooses_ok = true;
    bool width_ok = true;
    bool non_crossing = true;
    int max_separation = 0;
    std::vector<std::string> problems;

    bool ok() const { return tree_ok && leaves_ok && nooses_ok && width_ok && non_crossing; }
};

// Structural check: trivalent tree, leaves in bijection with edges, each noose a
// simple radial cycle whose side equals the leaf set below its tree edge, width
// equal to the largest noose weight, and no two nooses crossing at a vertex or in a face.
DecompositionReport check_decomposition(const PlaneGraph& g, const BranchDecomposition& bd);

}  // namespace knotwidth
