#include <gtest/gtest.h>

#include "knotwidth/branchwidth.hpp"
#include "knotwidth/codecs.hpp"
#include "knotwidth/errors.hpp"
#include "knotwidth/json_io.hpp"
#include "oracles.hpp"

using namespace knotwidth;
using namespace knotwidth::testing;

namespace {

PlaneGraph cycle(int n) {
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        rot[i] = {i, (i + n - 1) % n};
    }
    return make_plane_graph(n, edges, rot);
}

PlaneGraph grid(int rows, int cols) {
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rot(rows * cols);
    auto id = [&](int r, int c) { return r * cols + c; };
    // rotation by direction: east, north, west, south
    std::vector<std::array<int, 4>> at(rows * cols, {-1, -1, -1, -1});
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                at[id(r, c)][0] = at[id(r, c + 1)][2] = static_cast<int>(edges.size());
                edges.push_back({id(r, c), id(r, c + 1)});
            }
            if (r + 1 < rows) {
                at[id(r, c)][1] = at[id(r + 1, c)][3] = static_cast<int>(edges.size());
                edges.push_back({id(r, c), id(r + 1, c)});
            }
        }
    }
    for (int v = 0; v < rows * cols; ++v)
        for (int e : at[v])
            if (e >= 0) rot[v].push_back(e);
    return make_plane_graph(rows * cols, edges, rot);
}

PlaneGraph wheel(int n) {
    // hub n, rim 0..n-1
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rot(n + 1);
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({n, i});
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, i, n + i};
    for (int i = n - 1; i >= 0; --i) rot[n].push_back(n + i);
    std::reverse(rot[n].begin(), rot[n].end());
    return make_plane_graph(n + 1, edges, rot);
}

void expect_sound(const PlaneGraph& g) {
    const int bw = branchwidth(g);
    const BranchDecomposition bd = spherecut_decomposition(g);
    const DecompositionReport r = check_decomposition(g, bd);
    EXPECT_TRUE(r.ok()) << (r.problems.empty() ? "" : r.problems.front());
    EXPECT_EQ(bd.width, bw);
    EXPECT_EQ(r.max_separation, bw);
}

}  // namespace

TEST(Branchwidth, SmallFamilies) {
    EXPECT_EQ(branchwidth(cycle(2)), 2);
    EXPECT_EQ(branchwidth(cycle(5)), 2);
    EXPECT_EQ(branchwidth(grid(3, 3)), 3);
    EXPECT_EQ(branchwidth(grid(4, 4)), 4);
    EXPECT_EQ(branchwidth(grid(2, 5)), 2);
    EXPECT_EQ(branchwidth(wheel(6)), 3);
    EXPECT_EQ(branchwidth(wheel(3)), 3);  // K4
}

TEST(Branchwidth, AgreesWithBruteForceOnFamilies) {
    for (const PlaneGraph& g : {cycle(4), grid(2, 3), wheel(4), wheel(5)})
        EXPECT_EQ(branchwidth(g), brute_force_branchwidth(g));
}

TEST(Branchwidth, Forests) {
    const PlaneGraph star = make_plane_graph(4, {{0, 1}, {0, 2}, {0, 3}}, {{0, 1, 2}, {0}, {1}, {2}});
    const PlaneGraph path = make_plane_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {{0}, {0, 1}, {1, 2}, {2}});
    const PlaneGraph edge = make_plane_graph(2, {{0, 1}}, {{0}, {0}});
    EXPECT_EQ(branchwidth(star), 1);
    EXPECT_EQ(branchwidth(path), 2);
    EXPECT_EQ(branchwidth(edge), 0);
    EXPECT_EQ(brute_force_branchwidth(star), 1);
    EXPECT_EQ(brute_force_branchwidth(path), 2);
    EXPECT_TRUE(is_forest(path));
    EXPECT_THROW(spherecut_decomposition(path), InvalidInput);
}

TEST(Branchwidth, LoopsAndParallelEdgesAreAbsorbed) {
    const PlaneGraph loops = make_plane_graph(1, {{0, 0}, {0, 0}}, {{0, 0, 1, 1}});
    EXPECT_EQ(branchwidth(loops), brute_force_branchwidth(loops));
    const PlaneGraph bundle = make_plane_graph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, {{0, 1, 2, 3}, {3, 2, 1, 0}});
    EXPECT_EQ(branchwidth(bundle), 2);
    EXPECT_EQ(brute_force_branchwidth(bundle), 2);
}

TEST(Branchwidth, DisconnectedRejected) {
    const PlaneGraph g = make_plane_graph(4, {{0, 1}, {2, 3}}, {{0}, {0}, {1}, {1}});
    EXPECT_THROW(branchwidth(g), InvalidInput);
}

TEST(Branchwidth, BruteForceSizeLimit) {
    EXPECT_THROW(brute_force_branchwidth(grid(3, 4)), InvalidInput);
}

TEST(Branchwidth, KnotShadows) {
    const Diagram trefoil = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const Diagram eight = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
    EXPECT_EQ(branchwidth(shadow(trefoil)), brute_force_branchwidth(shadow(trefoil)));
    EXPECT_EQ(branchwidth(shadow(eight)), brute_force_branchwidth(shadow(eight)));
    const auto tw = treewidth_bounds(shadow(trefoil));
    EXPECT_EQ(tw.lo, 1);
    EXPECT_EQ(tw.hi, 2);
}

TEST(Branchwidth, DecisionMonotoneInK) {
    for (const Diagram& d : random_diagrams(10, 12, 3)) {
        const Shadow g = shadow(d);
        bool prev = false;
        for (int k = 0; k <= 8; ++k) {
            const bool now = ratcatcher_decision(g, k);
            EXPECT_TRUE(!prev || now) << k;
            prev = now;
        }
        EXPECT_TRUE(ratcatcher_decision(g, branchwidth(g)));
        EXPECT_FALSE(ratcatcher_decision(g, branchwidth(g) - 1));
    }
}

TEST(SphereCut, DecompositionsPassTheChecker) {
    expect_sound(cycle(3));
    expect_sound(grid(3, 3));
    expect_sound(grid(4, 5));
    expect_sound(wheel(7));
    for (const Diagram& d : random_diagrams(15, 16, 11)) expect_sound(shadow(d));
    for (int n = 2; n <= 5; ++n) {
        for (const auto& m : planar_maps(n)) {
            const PlaneGraph g = to_plane_graph(m);
            if (is_forest(g) || has_bridge(g) || enclosing_loop(g) >= 0) continue;
            expect_sound(g);
        }
    }
}

TEST(SphereCut, EnclosingLoopRejected) {
    // two nested loops at one vertex of a digon
    const PlaneGraph g = make_plane_graph(2, {{0, 1}, {0, 0}, {0, 0}, {0, 1}}, {{0, 3, 2, 1, 1, 2}, {0, 3}});
    ASSERT_EQ(euler_characteristic(g), 2);
    EXPECT_EQ(enclosing_loop(g), 2);
    EXPECT_THROW(spherecut_decomposition(g), InvalidInput);
    EXPECT_EQ(branchwidth(g), brute_force_branchwidth(g));
}

TEST(SphereCut, CheckerRejectsTamperedDecomposition) {
    const PlaneGraph g = grid(3, 3);
    BranchDecomposition bd = spherecut_decomposition(g);
    BranchDecomposition wrong_width = bd;
    wrong_width.width += 1;
    EXPECT_FALSE(check_decomposition(g, wrong_width).ok());
    BranchDecomposition swapped = bd;
    int a = -1, b = -1;
    for (int v = 0; v < swapped.num_nodes(); ++v) {
        if (swapped.leaf_edge[v] < 0) continue;
        if (a < 0) a = v;
        else if (swapped.parent[v] != swapped.parent[a]) b = v;
    }
    ASSERT_GE(b, 0);
    std::swap(swapped.leaf_edge[a], swapped.leaf_edge[b]);
    EXPECT_FALSE(check_decomposition(g, swapped).ok());
}

TEST(SphereCut, JsonRoundTrip) {
    const PlaneGraph g = grid(3, 4);
    const BranchDecomposition bd = spherecut_decomposition(g);
    const BranchDecomposition back = decomposition_from_json(decomposition_to_json(bd));
    EXPECT_EQ(back.parent, bd.parent);
    EXPECT_EQ(back.leaf_edge, bd.leaf_edge);
    EXPECT_EQ(back.width, bd.width);
    EXPECT_TRUE(check_decomposition(g, back).ok());
}

TEST(Treewidth, BoundsBracketKnownValues) {
    // grid k x k has treewidth k, K4 has 3, a cycle 2
    for (auto [g, tw] : std::vector<std::pair<PlaneGraph, int>>{{grid(3, 3), 3}, {grid(4, 4), 4}, {wheel(3), 3}, {cycle(6), 2}}) {
        const auto b = treewidth_bounds(g);
        EXPECT_LE(b.lo, tw);
        EXPECT_GE(b.hi, tw);
    }
}

TEST(SeparationOrder, CountsSharedVertices) {
    const PlaneGraph g = cycle(4);
    EXPECT_EQ(separation_order(g, {1, 1, 0, 0}), 2);
    EXPECT_EQ(separation_order(g, {1, 0, 0, 0}), 2);
    EXPECT_EQ(separation_order(g, {1, 1, 1, 1}), 0);
}
