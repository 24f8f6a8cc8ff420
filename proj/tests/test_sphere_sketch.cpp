#include <gtest/gtest.h>

#include "knotwidth/branchwidth.hpp"
#include "knotwidth/codecs.hpp"
#include "knotwidth/errors.hpp"
#include "knotwidth/json_io.hpp"
#include "knotwidth/sphere_sketch.hpp"
#include "oracles.hpp"

using namespace knotwidth;
using namespace knotwidth::testing;

namespace {

// Recomputes every segment weight from the nooses alone.
int reference_width(const Diagram& d, const BranchDecomposition& bd) {
    const int n = bd.num_nodes();
    std::vector<int> c1(n, 0), c2(n, 0);
    std::vector<std::vector<int>> touching(n);
    for (int v = 0; v < n; ++v) {
        if (v == bd.root) continue;
        for (int x : bd.noose[v]->vertices) (d.is_crossing(x) ? c2 : c1)[v] += 1;
        touching[v].push_back(v);
        touching[bd.parent[v]].push_back(v);
    }
    int w = 2;  // leaf sweeps
    for (int v = 0; v < n; ++v) {
        if (v == bd.root) continue;
        w = std::max(w, c1[v] + 2 * c2[v]);
    }
    for (int v = 0; v < n; ++v) {
        if (bd.leaf_edge[v] >= 0) continue;
        for (int e : touching[v]) w = std::max(w, 2 * c1[e] + 2 * c2[e]);
    }
    return w;
}

}  // namespace

TEST(Sketch, TrefoilWidth) {
    const Diagram d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const auto bd = spherecut_decomposition(shadow(d));
    const auto s = lift(d, bd);
    EXPECT_EQ(width(s), reference_width(d, bd));
    EXPECT_EQ(width(s), 4);
    EXPECT_FALSE(s.tree_diagram);
}

TEST(Sketch, WidthMatchesReferenceAndBound) {
    for (const Diagram& d : random_diagrams(30, 16, 21)) {
        const Shadow g = shadow(d);
        const auto bd = spherecut_decomposition(g);
        const auto s = lift(d, bd);
        EXPECT_EQ(width(s), reference_width(d, bd));
        EXPECT_LE(width(s), 2 * bd.width);
        EXPECT_EQ(spherewidth_upper(d), width(s));
    }
}

TEST(Sketch, SegmentsCoverEveryNode) {
    const Diagram d = torus_knot_diagram(3, 5);
    const auto bd = spherecut_decomposition(shadow(d));
    const auto s = lift(d, bd);
    std::vector<int> backbone(bd.num_nodes(), 0), sweep(bd.num_nodes(), 0);
    for (const auto& seg : s.segments) {
        if (seg.kind == SegmentKind::backbone) ++backbone[seg.node];
        if (seg.kind == SegmentKind::leaf_sweep) {
            ++sweep[seg.node];
            EXPECT_EQ(seg.weight, 2);
        }
    }
    for (int v = 0; v < bd.num_nodes(); ++v) {
        EXPECT_EQ(backbone[v], v == bd.root ? 0 : 1);
        EXPECT_EQ(sweep[v], bd.leaf_edge[v] >= 0 ? 1 : 0);
        if (v != bd.root) {
            ASSERT_TRUE(s.counts[v].has_value());
            EXPECT_EQ(s.counts[v]->c1 + s.counts[v]->c2, bd.noose[v]->weight());
        }
    }
}

TEST(Sketch, TreeDiagrams) {
    const Diagram u = unknot_diagram();
    EXPECT_TRUE(is_tree_diagram(u));
    EXPECT_EQ(spherewidth_upper(u), 1);
    EXPECT_EQ(width(tree_diagram_sketch()), 1);
    EXPECT_TRUE(tree_diagram_sketch().tree_diagram);
    EXPECT_THROW(lift(u, BranchDecomposition{}), UnsupportedInput);
    EXPECT_FALSE(is_tree_diagram(parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")));
}

TEST(Sketch, ThetaGraphIsNotATree) {
    Diagram theta;
    theta.true_vertices = {{3}, {3}};
    theta.arcs = {{{0, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 0}}};
    ASSERT_TRUE(validate(theta).valid);
    EXPECT_FALSE(is_tree_diagram(theta));
    EXPECT_EQ(spherewidth_upper(theta), reference_width(theta, spherecut_decomposition(shadow(theta))));
}

TEST(Sketch, ForeignDecompositionRejected) {
    const Diagram a = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const Diagram b = torus_knot_diagram(2, 5);
    EXPECT_THROW(lift(a, spherecut_decomposition(shadow(b))), InvalidInput);
}

TEST(Sketch, JsonHasSegments) {
    const Diagram d = torus_knot_diagram(2, 5);
    const std::string text = sketch_to_json(lift(d, spherecut_decomposition(shadow(d))));
    EXPECT_NE(text.find("spheresketch.v1"), std::string::npos);
    EXPECT_NE(text.find("leaf_sweep"), std::string::npos);
}
