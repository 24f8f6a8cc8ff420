#include "knotwidth/sphere_sketch.hpp"

#include <algorithm>

#include "knotwidth/errors.hpp"

namespace knotwidth {

std::string to_string(SegmentKind k) {
    switch (k) {
        case SegmentKind::backbone: return "backbone";
        case SegmentKind::interpolation: return "interpolation";
        case SegmentKind::leaf_sweep: return "leaf_sweep";
    }
    return "?";
}

bool is_tree_diagram(const Diagram& d) {
    const Shadow g = shadow(d);
    std::vector<int> keep;
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& [a, b] = g.edges[e];
        if (a == b && g.kind[a] == VertexKind::true_vertex) continue;
        keep.push_back(e);
    }
    if (keep.empty()) return true;
    return is_forest(subgraph(g, keep));
}

SphereDecompositionSketch tree_diagram_sketch() {
    SphereDecompositionSketch s;
    s.tree_diagram = true;
    return s;
}

SphereDecompositionSketch lift(const Diagram& d, const BranchDecomposition& bd) {
    if (is_tree_diagram(d)) throw UnsupportedInput("tree diagram: spherewidth 1, nothing to lift");
    const Shadow g = shadow(d);
    const DecompositionReport rep = check_decomposition(g, bd);
    if (!rep.ok()) throw InvalidInput("decomposition does not match the diagram: " + rep.problems.front());
    const int n = bd.num_nodes();
    for (int v = 0; v < n; ++v)
        if (bd.parent[v] >= 0 && !bd.noose[v])
            throw InvalidInput("tree edge above node " + std::to_string(v) + " has no noose");

    SphereDecompositionSketch s;
    s.tree = bd;
    s.counts.assign(n, std::nullopt);
    for (int v = 0; v < n; ++v) {
        if (bd.parent[v] < 0) continue;
        NooseCounts c;
        for (int x : bd.noose[v]->vertices) (g.kind[x] == VertexKind::crossing ? c.c2 : c.c1) += 1;
        s.counts[v] = c;
    }

    std::vector<std::vector<int>> around(n);  // tree edges (by lower node) at each node
    for (int v = 0; v < n; ++v)
        if (bd.parent[v] >= 0) {
            around[v].push_back(v);
            around[bd.parent[v]].push_back(v);
        }
    auto pant_bound = [&](int node) {
        int w = 0;
        for (int e : around[node]) w = std::max(w, s.counts[e]->interpolation());
        return w;
    };
    for (int v = 0; v < n; ++v) {
        if (bd.leaf_edge[v] >= 0) s.segments.push_back({SegmentKind::leaf_sweep, v, -1, 2});
        if (bd.parent[v] < 0) continue;
        const int p = bd.parent[v];
        if (bd.leaf_edge[v] < 0) s.segments.push_back({SegmentKind::interpolation, v, v, pant_bound(v)});
        s.segments.push_back({SegmentKind::backbone, v, v, s.counts[v]->backbone()});
        if (bd.leaf_edge[p] < 0) s.segments.push_back({SegmentKind::interpolation, p, v, pant_bound(p)});
    }
    return s;
}

int width(const SphereDecompositionSketch& s) {
    if (s.tree_diagram) return 1;
    int w = 0;
    for (const auto& seg : s.segments) w = std::max(w, seg.weight);
    return w;
}

int spherewidth_upper(const Diagram& d) {
    require_valid(d);
    if (is_tree_diagram(d)) return 1;
    return width(lift(d, spherecut_decomposition(shadow(d))));
}

}  // namespace knotwidth
