#include "knotwidth/plane_graph.hpp"

#include <algorithm>
#include <numeric>

#include "knotwidth/errors.hpp"

namespace knotwidth {

Embedding::Embedding(const PlaneGraph& g)
    : succ_(g.num_darts(), -1), pred_(g.num_darts(), -1) {
    for (const auto& rot : g.rotation) {
        const int n = static_cast<int>(rot.size());
        for (int i = 0; i < n; ++i) {
            succ_[rot[i]] = rot[(i + 1) % n];
            pred_[rot[(i + 1) % n]] = rot[i];
        }
    }
    face_of.assign(g.num_darts(), -1);
    for (int d0 = 0; d0 < g.num_darts(); ++d0) {
        if (face_of[d0] >= 0) continue;
        const int f = static_cast<int>(faces.size());
        faces.emplace_back();
        for (int d = d0; face_of[d] < 0; d = next_in_face(d)) {
            face_of[d] = f;
            faces.back().push_back(d);
        }
    }
}

bool rotation_consistent(const PlaneGraph& g, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(g.rotation.size()) != g.num_vertices())
        return fail("rotation list count differs from vertex count");
    std::vector<int> seen(g.num_darts(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        for (int d : g.rotation[v]) {
            if (d < 0 || d >= g.num_darts()) return fail("dart id out of range at vertex " + std::to_string(v));
            if (dart_vertex(g, d) != v) return fail("dart " + std::to_string(d) + " listed at wrong vertex");
            if (seen[d]++) return fail("dart " + std::to_string(d) + " listed twice");
        }
    }
    for (int d = 0; d < g.num_darts(); ++d)
        if (!seen[d]) return fail("dart " + std::to_string(d) + " missing from rotation");
    return true;
}

bool is_connected(const PlaneGraph& g) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

int count_faces(const PlaneGraph& g) {
    Embedding emb(g);
    int isolated = 0;
    for (const auto& rot : g.rotation)
        if (rot.empty()) ++isolated;
    return emb.num_faces() + isolated;
}

int euler_characteristic(const PlaneGraph& g) {
    return g.num_vertices() - g.num_edges() + count_faces(g);
}

PlaneGraph subgraph(const PlaneGraph& g, const std::vector<int>& edge_ids,
                    std::vector<int>* vertex_map, std::vector<int>* edge_map) {
    std::vector<int> new_edge(g.num_edges(), -1);
    std::vector<int> new_vertex(g.num_vertices(), -1);
    PlaneGraph h;
    std::vector<int> vmap, emap;
    for (int e : edge_ids) {
        if (new_edge[e] >= 0) continue;
        new_edge[e] = static_cast<int>(emap.size());
        emap.push_back(e);
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool used = false;
        for (int d : g.rotation[v]) used = used || new_edge[d >> 1] >= 0;
        if (!used) continue;
        new_vertex[v] = static_cast<int>(vmap.size());
        vmap.push_back(v);
        h.kind.push_back(g.kind[v]);
    }
    for (int e : emap) h.edges.push_back({new_vertex[g.edges[e][0]], new_vertex[g.edges[e][1]]});
    h.rotation.resize(vmap.size());
    for (std::size_t i = 0; i < vmap.size(); ++i)
        for (int d : g.rotation[vmap[i]])
            if (new_edge[d >> 1] >= 0) h.rotation[i].push_back(2 * new_edge[d >> 1] + (d & 1));
    if (vertex_map) *vertex_map = std::move(vmap);
    if (edge_map) *edge_map = std::move(emap);
    return h;
}

namespace {

std::vector<int> code_from(const PlaneGraph& g, const std::vector<int>& pos, int d0) {
    std::vector<int> label(g.num_vertices(), -1);
    std::vector<int> ref(g.num_vertices(), -1);
    std::vector<int> order;
    std::vector<int> code;
    auto visit = [&](int d) {
        int v = dart_vertex(g, d);
        label[v] = static_cast<int>(order.size());
        ref[v] = d;
        order.push_back(v);
    };
    visit(d0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        const auto& rot = g.rotation[v];
        const int deg = static_cast<int>(rot.size());
        code.push_back(static_cast<int>(g.kind[v]));
        code.push_back(deg);
        for (int k = 0; k < deg; ++k) {
            int d = rot[(pos[ref[v]] + k) % deg];
            int t = d ^ 1;
            int w = dart_vertex(g, t);
            if (label[w] < 0) visit(t);
            int deg_w = static_cast<int>(g.rotation[w].size());
            code.push_back(label[w]);
            code.push_back((pos[t] - pos[ref[w]] + deg_w) % deg_w);
        }
    }
    return code;
}

}  // namespace

std::string canonical_code(const PlaneGraph& g) {
    std::vector<int> pos(g.num_darts(), 0);
    for (const auto& rot : g.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i) pos[rot[i]] = static_cast<int>(i);

    // Components are coded separately and the codes sorted.
    std::vector<int> comp(g.num_vertices(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.rotation[v]) {
                int w = dart_vertex(g, d ^ 1);
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> codes(ncomp);
    std::vector<char> have(ncomp, 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.rotation[v].empty()) {
            codes[comp[v]] = {static_cast<int>(g.kind[v]), 0};
            have[comp[v]] = 1;
        }
    }
    for (int d = 0; d < g.num_darts(); ++d) {
        int c = comp[dart_vertex(g, d)];
        auto code = code_from(g, pos, d);
        if (!have[c] || code < codes[c]) {
            codes[c] = std::move(code);
            have[c] = 1;
        }
    }
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const auto& code : codes) {
        out += '[';
        for (int x : code) {
            out += std::to_string(x);
            out += ',';
        }
        out += ']';
    }
    return out;
}

PlaneGraph make_plane_graph(int num_vertices, const std::vector<std::array<int, 2>>& edges,
                            const std::vector<std::vector<int>>& rotation_by_edge) {
    PlaneGraph g;
    g.kind.assign(num_vertices, VertexKind::true_vertex);
    g.edges = edges;
    g.rotation.resize(num_vertices);
    std::vector<int> used(edges.size(), 0);
    for (int v = 0; v < num_vertices; ++v) {
        for (int e : rotation_by_edge.at(v)) {
            const auto& ends = edges.at(e);
            int side;
            if (ends[0] == ends[1]) {
                side = used[e]++;
                if (side > 1) throw InvalidInput("loop edge listed more than twice");
            } else {
                side = ends[0] == v ? 0 : 1;
                if (ends[side] != v) throw InvalidInput("edge listed at a vertex it does not touch");
            }
            g.rotation[v].push_back(2 * e + side);
        }
    }
    std::string why;
    if (!rotation_consistent(g, &why)) throw InvalidInput(why);
    return g;
}

}  // namespace knotwidth
