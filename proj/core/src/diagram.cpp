#include "knotwidth/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knotwidth/errors.hpp"

namespace knotwidth {

int Diagram::degree(int node) const {
    if (node < num_crossings()) return 4;
    return true_vertices[node - num_crossings()].degree;
}

std::vector<std::vector<int>> slot_arcs(const Diagram& d) {
    std::vector<std::vector<int>> at(d.num_nodes());
    for (int v = 0; v < d.num_nodes(); ++v) at[v].assign(std::max(d.degree(v), 0), -1);
    for (int i = 0; i < d.num_arcs(); ++i)
        for (const SlotRef& s : {d.arcs[i].a, d.arcs[i].b})
            if (s.node >= 0 && s.node < d.num_nodes() && s.slot >= 0 && s.slot < d.degree(s.node))
                at[s.node][s.slot] = i;
    return at;
}

SlotRef partner(const Diagram& d, const std::vector<std::vector<int>>& at, SlotRef s) {
    const Arc& a = d.arcs[at[s.node][s.slot]];
    // A loop between two slots of one node needs the slot comparison.
    return (a.a == s) ? a.b : a.a;
}

namespace {

int find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

PlaneGraph graph_of(const Diagram& d) {
    PlaneGraph g;
    for (int v = 0; v < d.num_nodes(); ++v) {
        g.kind.push_back(d.is_crossing(v) ? VertexKind::crossing : VertexKind::true_vertex);
        g.rotation.emplace_back(d.degree(v), -1);
    }
    for (int i = 0; i < d.num_arcs(); ++i) {
        const Arc& a = d.arcs[i];
        g.edges.push_back({a.a.node, a.b.node});
        g.rotation[a.a.node][a.a.slot] = 2 * i;
        g.rotation[a.b.node][a.b.slot] = 2 * i + 1;
    }
    return g;
}

}  // namespace

ValidationReport validate(const Diagram& d) {
    ValidationReport r;
    auto problem = [&](std::string msg) { r.problems.push_back(std::move(msg)); };

    for (int c = 0; c < d.num_crossings(); ++c)
        if (d.crossings[c].over != 0 && d.crossings[c].over != 1) {
            r.slots_ok = false;
            problem("crossing " + std::to_string(c) + ": over marking must be 0 or 1");
        }
    for (std::size_t t = 0; t < d.true_vertices.size(); ++t)
        if (d.true_vertices[t].degree < 1) {
            r.slots_ok = false;
            problem("true vertex " + std::to_string(t) + ": degree must be at least 1");
        }
    if (d.num_nodes() == 0) {
        r.slots_ok = false;
        problem("diagram has no vertices");
    }
    std::vector<std::vector<int>> use(d.num_nodes());
    for (int v = 0; v < d.num_nodes(); ++v) use[v].assign(std::max(d.degree(v), 0), 0);
    for (int i = 0; i < d.num_arcs(); ++i) {
        for (const SlotRef& s : {d.arcs[i].a, d.arcs[i].b}) {
            if (s.node < 0 || s.node >= d.num_nodes() || s.slot < 0 || s.slot >= d.degree(s.node)) {
                r.slots_ok = false;
                problem("arc " + std::to_string(i) + " references nonexistent slot (" +
                        std::to_string(s.node) + "," + std::to_string(s.slot) + ")");
                continue;
            }
            ++use[s.node][s.slot];
        }
    }
    for (int v = 0; v < d.num_nodes(); ++v)
        for (std::size_t s = 0; s < use[v].size(); ++s)
            if (use[v][s] != 1) {
                r.slots_ok = false;
                problem("slot (" + std::to_string(v) + "," + std::to_string(s) + ") used " +
                        std::to_string(use[v][s]) + " times");
            }
    if (!r.slots_ok) {
        r.euler_ok = false;
        r.connected = false;
        r.valid = false;
        return r;
    }

    PlaneGraph g = graph_of(d);
    Embedding emb(g);
    r.faces = emb.num_faces();

    std::vector<int> parent(d.num_nodes());
    std::iota(parent.begin(), parent.end(), 0);
    for (const Arc& a : d.arcs) parent[find(parent, a.a.node)] = find(parent, a.b.node);
    std::map<int, int> comp_index;
    std::vector<int> comp(d.num_nodes());
    for (int v = 0; v < d.num_nodes(); ++v) {
        int root = find(parent, v);
        auto it = comp_index.emplace(root, static_cast<int>(comp_index.size())).first;
        comp[v] = it->second;
    }
    r.components = static_cast<int>(comp_index.size());
    r.component_euler.assign(r.components, 0);
    for (int v = 0; v < d.num_nodes(); ++v) ++r.component_euler[comp[v]];
    for (const Arc& a : d.arcs) --r.component_euler[comp[a.a.node]];
    for (const auto& face : emb.faces) ++r.component_euler[comp[dart_vertex(g, face.front())]];
    for (int c = 0; c < r.components; ++c)
        if (r.component_euler[c] != 2) {
            r.euler_ok = false;
            problem("component " + std::to_string(c) + ": V - E + F = " +
                    std::to_string(r.component_euler[c]) + ", expected 2");
        }
    r.connected = r.components == 1;
    if (!r.connected && !d.split) problem("diagram is disconnected and not flagged split");
    r.valid = r.slots_ok && r.euler_ok && (r.connected || d.split);
    return r;
}

void require_valid(const Diagram& d) {
    ValidationReport r = validate(d);
    if (r.valid) return;
    std::string msg = "invalid diagram";
    for (const auto& p : r.problems) msg += "; " + p;
    throw InvalidInput(msg);
}

Shadow shadow(const Diagram& d) {
    require_valid(d);
    return graph_of(d);
}

Diagram unknot_diagram() {
    Diagram d;
    d.true_vertices.push_back({2});
    d.arcs.push_back({{0, 0}, {0, 1}});
    return d;
}

Diagram torus_knot_diagram(int p, int q) {
    if (p < 1 || q < 1) throw InvalidInput("torus knot parameters must be positive");
    if (p == 1) return unknot_diagram();
    // Braid slots: 0 bottom-right, 1 top-right, 2 top-left, 3 bottom-left.
    // Strand positions 1..p; letter s_i crosses positions i and i+1.
    Diagram d;
    std::map<int, SlotRef> last_top, first_bottom;
    int c = 0;
    for (int rep = 0; rep < q; ++rep) {
        for (int i = 1; i < p; ++i, ++c) {
            d.crossings.push_back({1});
            for (auto [pos, slot] : {std::pair{i, 3}, std::pair{i + 1, 0}}) {
                auto it = last_top.find(pos);
                if (it != last_top.end())
                    d.arcs.push_back({it->second, {c, slot}});
                else
                    first_bottom[pos] = {c, slot};
            }
            last_top[i] = {c, 2};
            last_top[i + 1] = {c, 1};
        }
    }
    for (const auto& [pos, bottom] : first_bottom) d.arcs.push_back({last_top.at(pos), bottom});
    return d;
}

int count_link_components(const Diagram& d) {
    auto at = slot_arcs(d);
    std::vector<char> used(d.num_arcs(), 0);
    int count = 0;
    for (int i = 0; i < d.num_arcs(); ++i) {
        if (used[i]) continue;
        ++count;
        // Walk both directions until a true vertex or the start.
        for (SlotRef s : {d.arcs[i].a, d.arcs[i].b}) {
            SlotRef cur = s;
            int arc = i;
            used[arc] = 1;
            while (d.is_crossing(cur.node)) {
                SlotRef through{cur.node, (cur.slot + 2) % 4};
                arc = at[through.node][through.slot];
                if (used[arc]) break;
                used[arc] = 1;
                cur = partner(d, at, through);
            }
        }
    }
    return count;
}

namespace {

std::vector<int> diagram_code(const Diagram& d, const std::vector<std::vector<int>>& at, SlotRef start) {
    std::vector<int> label(d.num_nodes(), -1), ref(d.num_nodes(), -1), order, code;
    auto visit = [&](SlotRef s) {
        label[s.node] = static_cast<int>(order.size());
        ref[s.node] = s.slot;
        order.push_back(s.node);
    };
    visit(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        const int deg = d.degree(v);
        code.push_back(d.is_crossing(v) ? 0 : 1);
        code.push_back(deg);
        code.push_back(d.is_crossing(v) ? ((d.crossings[v].over - ref[v]) % 2 + 2) % 2 : 0);
        for (int k = 0; k < deg; ++k) {
            SlotRef s{v, (ref[v] + k) % deg};
            SlotRef t = partner(d, at, s);
            if (label[t.node] < 0) visit(t);
            int deg_t = d.degree(t.node);
            code.push_back(label[t.node]);
            code.push_back((t.slot - ref[t.node] + deg_t) % deg_t);
        }
    }
    return code;
}

std::vector<std::vector<int>> component_codes(const Diagram& d) {
    auto at = slot_arcs(d);
    std::vector<int> parent(d.num_nodes());
    std::iota(parent.begin(), parent.end(), 0);
    for (const Arc& a : d.arcs) parent[find(parent, a.a.node)] = find(parent, a.b.node);
    std::map<int, std::vector<int>> best;
    for (int v = 0; v < d.num_nodes(); ++v) {
        int root = find(parent, v);
        for (int s = 0; s < d.degree(v); ++s) {
            auto code = diagram_code(d, at, {v, s});
            auto it = best.find(root);
            if (it == best.end() || code < it->second) best[root] = std::move(code);
        }
    }
    std::vector<std::vector<int>> out;
    for (auto& [root, code] : best) out.push_back(std::move(code));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool isomorphic(const Diagram& x, const Diagram& y) {
    if (x.num_crossings() != y.num_crossings() || x.true_vertices.size() != y.true_vertices.size() ||
        x.num_arcs() != y.num_arcs())
        return false;
    if (!validate(x).slots_ok || !validate(y).slots_ok) return false;
    return component_codes(x) == component_codes(y);
}

}  // namespace knotwidth
