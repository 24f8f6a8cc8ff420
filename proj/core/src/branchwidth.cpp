#include "knotwidth/branchwidth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "knotwidth/errors.hpp"
#include "noose_solver.hpp"

namespace knotwidth {

int separation_order(const PlaneGraph& g, const std::vector<char>& in_set) {
    int order = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool in = false, out = false;
        for (int d : g.rotation[v]) (in_set[dart_edge(d)] ? in : out) = true;
        if (in && out) ++order;
    }
    return order;
}

std::vector<char> noose_side(const PlaneGraph& g, const Noose& n) {
    Embedding emb(g);
    const int m = n.weight();
    if (m == 0 || static_cast<int>(n.faces.size()) != m || static_cast<int>(n.corners.size()) != 2 * m)
        throw InvalidInput("noose must list as many faces as vertices and two corners per vertex");
    std::vector<char> cut(g.num_darts(), 0);
    for (int i = 0; i < m; ++i) {
        const int c_in = n.corners[2 * i], c_out = n.corners[2 * i + 1];
        for (int c : {c_in, c_out})
            if (c < 0 || c >= g.num_darts()) throw InvalidInput("noose corner out of range");
        if (dart_vertex(g, c_in) != n.vertices[i] || emb.corner_face(c_in) != n.faces[i] ||
            dart_vertex(g, c_out) != n.vertices[i] || emb.corner_face(c_out) != n.faces[(i + 1) % m])
            throw InvalidInput("noose corners do not match its face/vertex sequence");
        cut[c_in] = cut[c_out] = 1;
    }
    std::vector<std::vector<std::pair<int, int>>> medial(g.num_edges());
    for (int c = 0; c < g.num_darts(); ++c) {
        int a = dart_edge(c), b = dart_edge(emb.succ(c));
        medial[a].push_back({b, c});
        medial[b].push_back({a, c});
    }
    std::vector<char> side(g.num_edges(), 0);
    std::vector<int> stack{dart_edge(n.corners[0])};
    side[stack[0]] = 1;
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        for (auto [f, c] : medial[e])
            if (!cut[c] && !side[f]) {
                side[f] = 1;
                stack.push_back(f);
            }
    }
    return side;
}

bool is_forest(const PlaneGraph& g) {
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges) {
        int a = find(e[0]), b = find(e[1]);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

namespace {

// Biconnected components of the loop-free part, as edge lists.
std::vector<std::vector<int>> blocks(const PlaneGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edges[e];
        if (a == b) continue;
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> out;
    int time = 0;
    struct Frame {
        int v, parent_edge;
        std::size_t next;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0}};
        disc[s] = low[s] = time++;
        while (!st.empty()) {
            Frame& fr = st.back();
            if (fr.next < adj[fr.v].size()) {
                auto [w, e] = adj[fr.v][fr.next++];
                if (e == fr.parent_edge) continue;
                if (disc[w] < 0) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = time++;
                    st.push_back({w, e, 0});
                } else if (disc[w] < disc[fr.v]) {
                    edge_stack.push_back(e);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
                continue;
            }
            const int v = fr.v, pe = fr.parent_edge;
            st.pop_back();
            if (st.empty()) break;
            const int u = st.back().v;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                std::vector<int> comp;
                while (true) {
                    int e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e);
                    if (e == pe) break;
                }
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

// Series and parallel reductions keep branchwidth once it is at least 2.
PlaneGraph reduce_block(const PlaneGraph& block) {
    std::vector<std::array<int, 2>> ends = block.edges;
    std::vector<std::vector<int>> rot = block.rotation;
    std::vector<char> alive(ends.size(), 1);
    int edges_left = static_cast<int>(ends.size());
    auto remove_dart = [&](int v, int d) { rot[v].erase(std::find(rot[v].begin(), rot[v].end(), d)); };
    bool changed = true;
    while (changed && edges_left > 3) {
        changed = false;
        std::map<std::pair<int, int>, int> seen;
        for (int e = 0; e < static_cast<int>(ends.size()) && edges_left > 3; ++e) {
            if (!alive[e]) continue;
            auto key = std::minmax(ends[e][0], ends[e][1]);
            auto [it, fresh] = seen.emplace(std::pair{key.first, key.second}, e);
            if (fresh) continue;
            remove_dart(ends[e][0], 2 * e);
            remove_dart(ends[e][1], 2 * e + 1);
            alive[e] = 0;
            --edges_left;
            changed = true;
        }
        for (int v = 0; v < static_cast<int>(rot.size()) && edges_left > 3; ++v) {
            if (rot[v].size() != 2) continue;
            const int d1 = rot[v][0], d2 = rot[v][1];
            const int e1 = d1 >> 1, e2 = d2 >> 1;
            if (e1 == e2) continue;
            const int w = ends[e2][(d2 & 1) ^ 1];
            const int u = ends[e1][(d1 & 1) ^ 1];
            if (u == w || u == v || w == v) continue;
            // Edge e1 takes over e2's far end.
            const int far = d2 ^ 1;
            auto& rw = rot[w];
            *std::find(rw.begin(), rw.end(), far) = d1;
            ends[e1][d1 & 1] = w;
            rot[v].clear();
            alive[e2] = 0;
            --edges_left;
            changed = true;
        }
    }
    PlaneGraph out;
    std::vector<int> new_edge(ends.size(), -1), new_vertex(rot.size(), -1);
    for (std::size_t e = 0; e < ends.size(); ++e)
        if (alive[e]) {
            new_edge[e] = out.num_edges();
            out.edges.push_back(ends[e]);
        }
    for (std::size_t v = 0; v < rot.size(); ++v)
        if (!rot[v].empty()) {
            new_vertex[v] = out.num_vertices();
            out.kind.push_back(block.kind[v]);
        }
    for (auto& e : out.edges) e = {new_vertex[e[0]], new_vertex[e[1]]};
    out.rotation.resize(out.num_vertices());
    for (std::size_t v = 0; v < rot.size(); ++v)
        for (int d : rot[v]) out.rotation[new_vertex[v]].push_back(2 * new_edge[d >> 1] + (d & 1));
    return out;
}

struct Prepared {
    bool forest_like = false;
    int forest_bw = 0;
    std::vector<PlaneGraph> cores;  // reduced blocks with at least 2 edges
};

// Loops behave like pendant edges; a graph whose only cycles are loops is
// handled directly, everything else reduces to its nontrivial blocks.
Prepared prepare(const PlaneGraph& g) {
    if (!is_connected(g)) throw InvalidInput("graph is disconnected");
    Prepared p;
    auto bl = blocks(g);
    for (const auto& b : bl)
        if (b.size() >= 2) p.cores.push_back(reduce_block(subgraph(g, b)));
    if (!p.cores.empty()) {
        std::stable_sort(p.cores.begin(), p.cores.end(),
                         [](const PlaneGraph& a, const PlaneGraph& b) { return a.num_edges() > b.num_edges(); });
        return p;
    }
    p.forest_like = true;
    const int E = g.num_edges();
    if (E <= 1) {
        p.forest_bw = 0;
        return p;
    }
    bool star = false;
    for (int v = 0; v < g.num_vertices() && !star; ++v) {
        bool all = true;
        for (const auto& e : g.edges)
            if (e[0] != v && e[1] != v) all = false;
        star = all;
    }
    p.forest_bw = star ? 1 : 2;
    return p;
}

bool core_within(const PlaneGraph& core, int k) {
    if (k < 2) return false;
    if (core.num_edges() <= 3) return true;
    detail::NooseSolver solver(core, k);
    return solver.decide();
}

}  // namespace

int enclosing_loop(const PlaneGraph& g) {
    std::vector<int> pos(g.num_darts(), 0);
    for (const auto& rot : g.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i) pos[rot[i]] = static_cast<int>(i);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.edges[e][0] != g.edges[e][1]) continue;
        const int n = static_cast<int>(g.rotation[g.edges[e][0]].size());
        const int gap = (pos[2 * e + 1] - pos[2 * e] + n) % n;
        if (gap != 1 && gap != n - 1) return e;
    }
    return -1;
}

bool has_bridge(const PlaneGraph& g) {
    for (const auto& b : blocks(g))
        if (b.size() == 1) return true;
    return false;
}

bool ratcatcher_decision(const Shadow& g, int k) {
    Prepared p = prepare(g);
    if (p.forest_like) return p.forest_bw <= k;
    for (const auto& core : p.cores)
        if (!core_within(core, k)) return false;
    return true;
}

int branchwidth(const Shadow& g) {
    Prepared p = prepare(g);
    if (p.forest_like) return p.forest_bw;
    int bw = 2;
    for (const auto& core : p.cores)
        while (!core_within(core, bw)) ++bw;
    return bw;
}

BranchDecomposition spherecut_decomposition(const Shadow& g) {
    if (!is_connected(g)) throw InvalidInput("graph is disconnected");
    if (is_forest(g)) throw InvalidInput("graph is a tree; tree diagrams have no sphere-cut decomposition to lift");
    if (has_bridge(g)) throw InvalidInput("graph has a bridge; split at bridges before decomposing");
    // such a loop cannot be cut off by a noose meeting its vertex once
    if (const int e = enclosing_loop(g); e >= 0)
        throw InvalidInput("loop " + std::to_string(e) + " has edges on both sides; remove loops before decomposing");
    const int bw = branchwidth(g);
    detail::NooseSolver solver(g, bw);
    if (!solver.decide())
        throw InternalError("no sphere-cut decomposition of width " + std::to_string(bw) + " found");
    BranchDecomposition bd = solver.decomposition();
    bd.width = std::max(bd.width, 0);
    return bd;
}

int brute_force_branchwidth(const Shadow& g) {
    const int E = g.num_edges();
    if (E > 10)
        throw InvalidInput("brute force supports at most 10 edges, got " + std::to_string(E) +
                           "; use branchwidth() for larger graphs");
    if (E <= 1) return 0;
    const unsigned full = (1u << E) - 1;
    std::vector<unsigned> inc(g.num_vertices(), 0);
    for (int e = 0; e < E; ++e) {
        inc[g.edges[e][0]] |= 1u << e;
        inc[g.edges[e][1]] |= 1u << e;
    }
    std::vector<int> mid(full + 1, 0);
    for (unsigned x = 1; x <= full; ++x)
        for (unsigned m : inc)
            if ((m & x) && (m & ~x & full)) ++mid[x];
    // best[x]: least width of a rooted binary tree over x, counting x's own separation.
    std::vector<int> best(full + 1, 0);
    for (unsigned x = 1; x <= full; ++x) {
        if ((x & (x - 1)) == 0) {
            best[x] = mid[x];
            continue;
        }
        const unsigned low = x & (~x + 1);
        int split = E + 1;
        for (unsigned a = (x - 1) & x; a; a = (a - 1) & x) {
            if (!(a & low)) continue;
            split = std::min(split, std::max(best[a], best[x ^ a]));
        }
        best[x] = std::max(mid[x], split);
    }
    return best[full ^ 1u];
}

TreewidthBounds treewidth_bounds(const Shadow& g) {
    const int bw = branchwidth(g);
    bool has_edge = false;
    for (const auto& e : g.edges) has_edge = has_edge || e[0] != e[1];
    TreewidthBounds t;
    t.lo = std::max(bw - 1, has_edge ? 1 : 0);
    t.hi = std::max({bw, 3 * bw / 2 - 1, t.lo});
    return t;
}

DecompositionReport check_decomposition(const PlaneGraph& g, const BranchDecomposition& bd) {
    DecompositionReport r;
    auto problem = [&](std::string msg) { r.problems.push_back(std::move(msg)); };
    const int n = bd.num_nodes();
    const int E = g.num_edges();
    if (static_cast<int>(bd.leaf_edge.size()) != n || static_cast<int>(bd.noose.size()) != n) {
        r.tree_ok = false;
        problem("node arrays have different lengths");
        return r;
    }
    if (E == 0) {
        r.tree_ok = n == 0;
        return r;
    }
    std::vector<std::vector<int>> children(n);
    int roots = 0;
    for (int v = 0; v < n; ++v) {
        if (bd.parent[v] < 0) {
            ++roots;
            if (v != bd.root) r.tree_ok = false;
        } else if (bd.parent[v] >= n) {
            r.tree_ok = false;
        } else {
            children[bd.parent[v]].push_back(v);
        }
    }
    if (roots != 1 || !r.tree_ok) {
        r.tree_ok = false;
        problem("parent array does not describe a rooted tree");
        return r;
    }
    // Reachability from the root also rules out cycles in the parent array.
    std::vector<int> order{bd.root};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : children[order[i]]) order.push_back(c);
    if (static_cast<int>(order.size()) != n) {
        r.tree_ok = false;
        problem("tree is not connected");
        return r;
    }
    for (int v = 0; v < n; ++v) {
        int deg = static_cast<int>(children[v].size()) + (bd.parent[v] >= 0 ? 1 : 0);
        bool leaf = bd.leaf_edge[v] >= 0;
        if (leaf && deg != 1 && !(n == 1 && deg == 0)) {
            r.tree_ok = false;
            problem("leaf node " + std::to_string(v) + " has degree " + std::to_string(deg));
        }
        if (!leaf && deg != 3) {
            r.tree_ok = false;
            problem("inner node " + std::to_string(v) + " has degree " + std::to_string(deg));
        }
    }
    std::vector<int> hits(E, 0);
    for (int v = 0; v < n; ++v) {
        if (bd.leaf_edge[v] >= E) r.leaves_ok = false;
        else if (bd.leaf_edge[v] >= 0) ++hits[bd.leaf_edge[v]];
    }
    for (int e = 0; e < E; ++e)
        if (hits[e] != 1) r.leaves_ok = false;
    if (!r.leaves_ok) {
        problem("leaves are not in bijection with graph edges");
        return r;
    }

    // Leaf set below every node.
    std::vector<std::vector<char>> below(n, std::vector<char>(E, 0));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (bd.leaf_edge[v] >= 0) below[v][bd.leaf_edge[v]] = 1;
        for (int c : children[v])
            for (int e = 0; e < E; ++e) below[v][e] |= below[c][e];
    }
    int max_weight = 0;
    bool all_nooses = true;
    Embedding emb(g);
    std::vector<int> pos_in_face(g.num_darts(), 0);
    for (const auto& face : emb.faces)
        for (std::size_t i = 0; i < face.size(); ++i) pos_in_face[face[i]] = static_cast<int>(i);
    std::vector<int> pos_at_vertex(g.num_darts(), 0);
    for (const auto& rot : g.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i) pos_at_vertex[rot[i]] = static_cast<int>(i);

    for (int v = 0; v < n; ++v) {
        if (bd.parent[v] < 0) continue;
        r.max_separation = std::max(r.max_separation, separation_order(g, below[v]));
        if (!bd.noose[v]) {
            all_nooses = false;
            continue;
        }
        const Noose& nz = *bd.noose[v];
        std::vector<char> side;
        try {
            side = noose_side(g, nz);
        } catch (const InvalidInput& e) {
            r.nooses_ok = false;
            problem("noose above node " + std::to_string(v) + ": " + e.what());
            continue;
        }
        auto sorted_f = nz.faces, sorted_v = nz.vertices;
        std::sort(sorted_f.begin(), sorted_f.end());
        std::sort(sorted_v.begin(), sorted_v.end());
        if (std::adjacent_find(sorted_f.begin(), sorted_f.end()) != sorted_f.end() ||
            std::adjacent_find(sorted_v.begin(), sorted_v.end()) != sorted_v.end()) {
            r.nooses_ok = false;
            problem("noose above node " + std::to_string(v) + " repeats a face or vertex");
        }
        bool same = side == below[v];
        bool complement = true;
        for (int e = 0; e < E; ++e) complement = complement && side[e] != below[v][e];
        if (!same && !complement) {
            r.nooses_ok = false;
            problem("noose above node " + std::to_string(v) + " does not match the leaf bipartition");
        }
        if (nz.weight() != separation_order(g, below[v])) {
            r.nooses_ok = false;
            problem("noose above node " + std::to_string(v) + " has weight " + std::to_string(nz.weight()) +
                    " but separation order " + std::to_string(separation_order(g, below[v])));
        }
        max_weight = std::max(max_weight, nz.weight());
    }
    const int expected = all_nooses ? max_weight : r.max_separation;
    if (bd.width != expected) {
        r.width_ok = false;
        problem("declared width " + std::to_string(bd.width) + " differs from " + std::to_string(expected));
    }

    // Passages of two nooses may touch but never interleave.
    auto interleaved = [](int a1, int a2, int b1, int b2, int len) {
        if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
        auto inside = [&](int x) { return ((x - a1 + len) % len) < ((a2 - a1 + len) % len); };
        return inside(b1) != inside(b2);
    };
    struct Passage {
        int owner, where, a, b;
    };
    std::vector<Passage> at_vertex, in_face;
    for (int v = 0; v < n; ++v) {
        if (!bd.noose[v] || bd.parent[v] < 0) continue;
        const Noose& nz = *bd.noose[v];
        const int m = nz.weight();
        for (int i = 0; i < m; ++i) {
            at_vertex.push_back({v, nz.vertices[i], nz.corners[2 * i], nz.corners[2 * i + 1]});
            in_face.push_back({v, nz.faces[i], nz.corners[(2 * i - 1 + 2 * m) % (2 * m)], nz.corners[2 * i]});
        }
    }
    auto scan = [&](std::vector<Passage>& list, bool vertex_side) {
        std::sort(list.begin(), list.end(), [](const Passage& x, const Passage& y) { return x.where < y.where; });
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size() && list[j].where == list[i].where; ++j) {
                if (list[i].owner == list[j].owner) continue;
                int len, a1, a2, b1, b2;
                if (vertex_side) {
                    len = static_cast<int>(g.rotation[list[i].where].size());
                    a1 = pos_at_vertex[list[i].a];
                    a2 = pos_at_vertex[list[i].b];
                    b1 = pos_at_vertex[list[j].a];
                    b2 = pos_at_vertex[list[j].b];
                } else {
                    len = static_cast<int>(emb.faces[list[i].where].size());
                    a1 = pos_in_face[list[i].a ^ 1];
                    a2 = pos_in_face[list[i].b ^ 1];
                    b1 = pos_in_face[list[j].a ^ 1];
                    b2 = pos_in_face[list[j].b ^ 1];
                }
                if (interleaved(a1, a2, b1, b2, len)) {
                    r.non_crossing = false;
                    problem("nooses above nodes " + std::to_string(list[i].owner) + " and " +
                            std::to_string(list[j].owner) + " cross at " + (vertex_side ? "vertex " : "face ") +
                            std::to_string(list[i].where));
                    return;
                }
            }
    };
    scan(at_vertex, true);
    scan(in_face, false);
    return r;
}

}  // namespace knotwidth
