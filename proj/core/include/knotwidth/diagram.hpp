#pragma once

#include <string>
#include <vector>

#include "knotwidth/plane_graph.hpp"

namespace knotwidth {

// Node ids run over crossings first, then true vertices.
struct SlotRef {
    int node = -1;
    int slot = -1;

    friend bool operator==(const SlotRef&, const SlotRef&) = default;
    friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

// Slots 0..3 in counterclockwise order; the over strand uses slots over and over+2.
struct Crossing {
    int over = 1;
};

// Thickened vertex with slots 0..degree-1 in counterclockwise order.
struct TrueVertex {
    int degree = 0;
};

struct Arc {
    SlotRef a;
    SlotRef b;
};

struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<TrueVertex> true_vertices;
    std::vector<Arc> arcs;
    bool split = false;

    int num_crossings() const { return static_cast<int>(crossings.size()); }
    int num_nodes() const { return static_cast<int>(crossings.size() + true_vertices.size()); }
    int num_arcs() const { return static_cast<int>(arcs.size()); }
    bool is_crossing(int node) const { return node < num_crossings(); }
    int degree(int node) const;
};

struct ValidationReport {
    bool slots_ok = true;
    bool euler_ok = true;
    bool connected = true;
    int faces = 0;
    int components = 0;
    // V - E + F per connected component, in order of lowest node id.
    std::vector<int> component_euler;
    std::vector<std::string> problems;

    // Connectivity is only required when the diagram is not flagged split.
    bool valid = true;
};

ValidationReport validate(const Diagram& d);

// Throws InvalidInput listing the problems when validate fails.
void require_valid(const Diagram& d);

// Arc id at every slot, indexed [node][slot]; -1 for an unused slot.
std::vector<std::vector<int>> slot_arcs(const Diagram& d);

// The other end of the arc at s.
SlotRef partner(const Diagram& d, const std::vector<std::vector<int>>& at, SlotRef s);

Shadow shadow(const Diagram& d);

// One true vertex of degree 2 carrying a loop arc.
Diagram unknot_diagram();

// Closure of the braid (s1 s2 ... s_{p-1})^q on p strands.
Diagram torus_knot_diagram(int p, int q);

// Number of closed strands; a strand runs straight through crossings and
// ends at true vertices. Closed strands through no true vertex are counted.
int count_link_components(const Diagram& d);

// Orientation-preserving isomorphism test, including over/under data.
bool isomorphic(const Diagram& x, const Diagram& y);

}  // namespace knotwidth
