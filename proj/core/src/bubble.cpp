#include "knotwidth/bubble.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "knotwidth/errors.hpp"

namespace knotwidth {

std::string to_string(Membrane m) {
    switch (m) {
        case Membrane::m12: return "M12";
        case Membrane::m13: return "M13";
        case Membrane::m23: return "M23";
    }
    return "?";
}

Membrane membrane_from_string(const std::string& s) {
    if (s == "M12") return Membrane::m12;
    if (s == "M13") return Membrane::m13;
    if (s == "M23") return Membrane::m23;
    throw ParseError("unknown membrane '" + s + "' (expected M12, M13 or M23)");
}

std::array<int, 2> balls_of(Membrane m) {
    switch (m) {
        case Membrane::m12: return {0, 1};
        case Membrane::m13: return {0, 2};
        case Membrane::m23: return {1, 2};
    }
    return {0, 1};
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

bool touches(Membrane m, int ball) {
    auto b = balls_of(m);
    return b[0] == ball || b[1] == ball;
}

std::vector<int> circle_positions(const std::vector<int>& circle) {
    int top = circle.empty() ? 0 : *std::max_element(circle.begin(), circle.end()) + 1;
    std::vector<int> pos(top, -1);
    for (std::size_t i = 0; i < circle.size(); ++i) {
        if (circle[i] < 0) throw InvalidInput("negative vertex id on the circle");
        if (pos[circle[i]] >= 0) throw InvalidInput("vertex " + std::to_string(circle[i]) + " repeats on the circle");
        pos[circle[i]] = static_cast<int>(i);
    }
    return pos;
}

}  // namespace

TraceReport validate_trace(const DoubleBubbleTrace& tr) {
    TraceReport r;
    const TorusMap& g = tr.gamma;
    const int V = g.num_vertices(), E = g.num_edges();
    auto problem = [&](bool& flag, std::string msg) {
        flag = false;
        r.problems.push_back(std::move(msg));
    };

    std::vector<int> pos;
    try {
        pos = circle_positions(tr.circle);
    } catch (const InvalidInput& e) {
        problem(r.trivalent, e.what());
        return r;
    }
    if (static_cast<int>(tr.circle.size()) != V || static_cast<int>(pos.size()) != V)
        problem(r.trivalent, "circle must list every Gamma vertex exactly once");
    if (static_cast<int>(tr.edge_membrane.size()) != E) {
        problem(r.chords_match_edges, "edge membrane tags missing");
        return r;
    }
    if (!r.trivalent) return r;

    for (int mi = 0; mi < 3; ++mi) {
        const auto m = static_cast<Membrane>(mi);
        std::vector<int> seen(V, 0);
        for (const auto& c : tr.chords[mi])
            for (int v : c) {
                if (v < 0 || v >= V) {
                    problem(r.trivalent, to_string(m) + " chord uses unknown vertex " + std::to_string(v));
                    continue;
                }
                ++seen[v];
            }
        for (int v = 0; v < V; ++v)
            if (seen[v] != 1)
                problem(r.trivalent, "vertex " + std::to_string(v) + " is an endpoint of " + std::to_string(seen[v]) +
                                         " chords of " + to_string(m));
        std::vector<int> deg(V, 0);
        for (int e = 0; e < E; ++e)
            if (tr.edge_membrane[e] == m)
                for (int v : g.map.edges[e]) ++deg[v];
        for (int v = 0; v < V; ++v)
            if (deg[v] != 1)
                problem(r.trivalent, "vertex " + std::to_string(v) + " meets " + std::to_string(deg[v]) + " " +
                                         to_string(m) + " edges");
    }
    if (!r.trivalent) return r;

    for (int mi = 0; mi < 3; ++mi) {
        const auto& ch = tr.chords[mi];
        for (std::size_t i = 0; i < ch.size(); ++i)
            for (std::size_t j = i + 1; j < ch.size(); ++j) {
                auto [a, b] = std::minmax(pos[ch[i][0]], pos[ch[i][1]]);
                auto [c, d] = std::minmax(pos[ch[j][0]], pos[ch[j][1]]);
                if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                    problem(r.non_crossing, to_string(static_cast<Membrane>(mi)) + " chords " + std::to_string(i) +
                                                " and " + std::to_string(j) + " cross");
            }
    }

    for (int mi = 0; mi < 3; ++mi) {
        const auto m = static_cast<Membrane>(mi);
        for (int i = 0; i < static_cast<int>(tr.chords[mi].size()); ++i)
            if (edge_of_chord(tr, m, i) < 0)
                problem(r.chords_match_edges, to_string(m) + " chord " + std::to_string(i) + " has no Gamma edge");
    }

    const TorusReport tm = validate_torus_map(g);
    if (!tm.ok()) {
        r.cellular = false;
        for (const auto& s : tm.problems) r.problems.push_back("Gamma: " + s);
        return r;
    }

    Embedding emb(g.map);
    if (static_cast<int>(tr.face_owner.size()) != emb.num_faces()) {
        problem(r.ownership_ok, "face ownership lists " + std::to_string(tr.face_owner.size()) + " faces, Gamma has " +
                                    std::to_string(emb.num_faces()));
        return r;
    }
    for (int f = 0; f < emb.num_faces(); ++f) {
        const int owner = tr.face_owner[f];
        if (owner < 0 || owner > 2) {
            problem(r.ownership_ok, "face " + std::to_string(f) + " has no valid owner");
            continue;
        }
        for (int d : emb.faces[f]) {
            const Membrane m = tr.edge_membrane[dart_edge(d)];
            if (!touches(m, owner)) {
                problem(r.ownership_ok, "face " + std::to_string(f) + " of B" + std::to_string(owner + 1) +
                                            " touches " + to_string(m) + " edge " + std::to_string(dart_edge(d)));
                continue;
            }
            auto balls = balls_of(m);
            const int other = balls[0] == owner ? balls[1] : balls[0];
            const int across = tr.face_owner[emb.face_of[d ^ 1]];
            if (across != other)
                problem(r.ownership_ok, "edge " + std::to_string(dart_edge(d)) + " on " + to_string(m) +
                                            " does not separate B" + std::to_string(owner + 1) + " from B" +
                                            std::to_string(other + 1));
        }
    }
    return r;
}

int edge_of_chord(const DoubleBubbleTrace& tr, Membrane m, int chord) {
    const auto& c = tr.chords[static_cast<int>(m)][chord];
    const auto want = std::minmax(c[0], c[1]);
    int found = -1;
    for (int e = 0; e < tr.gamma.num_edges(); ++e) {
        if (tr.edge_membrane[e] != m) continue;
        if (std::minmax(tr.gamma.map.edges[e][0], tr.gamma.map.edges[e][1]) == want) {
            if (found >= 0) return -1;
            found = e;
        }
    }
    return found;
}

void overlay_trace(DoubleBubbleTrace& tr, int p, int q) {
    for (int e = 0; e < tr.gamma.num_edges(); ++e)
        if (tr.gamma.polyline[e].empty())
            throw InvalidInput("Gamma edge " + std::to_string(e) + " has no polyline to overlay");
    tr.gamma.weight = overlay_weights(tr.gamma.polyline, p, q);
}

std::array<int, 3> sphere_weights(const DoubleBubbleTrace& tr) {
    std::array<int, 3> w{0, 0, 0};
    for (int e = 0; e < tr.gamma.num_edges(); ++e)
        for (int b : balls_of(tr.edge_membrane[e])) w[b] += tr.gamma.weight[e];
    const int total = total_weight(tr);
    if (w[0] + w[1] + w[2] != 2 * total)
        throw InternalError("sphere weights do not sum to twice the Gamma weight");
    return w;
}

int total_weight(const DoubleBubbleTrace& tr) {
    return std::accumulate(tr.gamma.weight.begin(), tr.gamma.weight.end(), 0);
}

MembraneTree membrane_tree(const std::vector<int>& circle, const std::vector<std::array<int, 2>>& chords) {
    const auto pos = circle_positions(circle);
    const int N = static_cast<int>(circle.size());
    std::vector<std::array<int, 2>> span;  // circle positions, low first
    std::vector<char> used(N, 0);
    for (const auto& c : chords) {
        for (int v : c)
            if (v < 0 || v >= static_cast<int>(pos.size()) || pos[v] < 0)
                throw InvalidInput("chord endpoint " + std::to_string(v) + " is not on the circle");
        auto [a, b] = std::minmax(pos[c[0]], pos[c[1]]);
        if (a == b) throw InvalidInput("chord joins a point to itself");
        for (int x : {a, b}) {
            if (used[x]) throw InvalidInput("two chords share an endpoint");
            used[x] = 1;
        }
        span.push_back({a, b});
    }
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = i + 1; j < span.size(); ++j) {
            auto [a, b] = span[i];
            auto [c, d] = span[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw InvalidInput("chords " + std::to_string(i) + " and " + std::to_string(j) + " cross");
        }

    MembraneTree t;
    if (N == 0) return t;
    // Arcs with the same set of enclosing chords lie in one region.
    std::map<std::vector<char>, int> ids;
    t.region_of_arc.resize(N);
    for (int i = 0; i < N; ++i) {
        std::vector<char> key(span.size());
        for (std::size_t c = 0; c < span.size(); ++c) key[c] = span[c][0] <= i && i < span[c][1];
        auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
        t.region_of_arc[i] = it->second;
    }
    t.num_vertices = static_cast<int>(ids.size());
    for (const auto& [a, b] : span) t.edges.push_back({t.region_of_arc[a], t.region_of_arc[(a - 1 + N) % N]});
    return t;
}

bool is_tree(const MembraneTree& t) {
    if (static_cast<int>(t.edges.size()) != t.num_vertices - 1) return false;
    UnionFind uf(t.num_vertices);
    for (const auto& [a, b] : t.edges)
        if (!uf.unite(a, b)) return false;
    return true;
}

int BoundaryCycle::weight(const TorusMap& gamma) const {
    int w = 0;
    for (int d : darts) w += gamma.weight[dart_edge(d)];
    return w;
}

int SurfaceComponent::open_boundaries() const {
    return static_cast<int>(std::count_if(boundaries.begin(), boundaries.end(),
                                          [](const BoundaryCycle& b) { return !b.capped; }));
}

MergeSurface merge(const DoubleBubbleTrace& tr, Membrane membrane, const std::vector<int>& covered) {
    const int mi = static_cast<int>(membrane);
    const MembraneTree mt = membrane_tree(tr.circle, tr.chords[mi]);
    const int nchords = static_cast<int>(tr.chords[mi].size());
    {
        std::set<int> regions;
        UnionFind uf(mt.num_vertices);
        std::set<int> distinct(covered.begin(), covered.end());
        if (distinct.size() != covered.size()) throw InvalidInput("covered chord listed twice");
        for (int c : covered) {
            if (c < 0 || c >= nchords) throw InvalidInput("covered chord " + std::to_string(c) + " out of range");
            uf.unite(mt.edges[c][0], mt.edges[c][1]);
            regions.insert(mt.edges[c][0]);
            regions.insert(mt.edges[c][1]);
        }
        std::set<int> roots;
        for (int r : regions) roots.insert(uf.find(r));
        if (roots.size() > 1) throw InvalidInput("covered chords do not form a connected subtree");
    }

    const TorusMap& g = tr.gamma;
    Embedding emb(g.map);
    const int F = emb.num_faces();
    const auto balls = balls_of(membrane);
    std::vector<char> in_surface(F, 0);
    for (int f = 0; f < F; ++f) in_surface[f] = tr.face_owner[f] == balls[0] || tr.face_owner[f] == balls[1];
    std::vector<char> glued(g.num_edges(), 0);
    for (int c : covered) {
        const int e = edge_of_chord(tr, membrane, c);
        if (e < 0) throw InvalidInput("chord " + std::to_string(c) + " has no Gamma edge");
        glued[e] = 1;
    }

    UnionFind faces(F);
    for (int e = 0; e < g.num_edges(); ++e)
        if (glued[e]) faces.unite(emb.face_of[2 * e], emb.face_of[2 * e + 1]);
    UnionFind corners(g.map.num_darts());
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!glued[e]) continue;
        const int a = 2 * e, b = 2 * e + 1;
        corners.unite(a, emb.next_in_face(b));
        corners.unite(b, emb.next_in_face(a));
    }

    MergeSurface s;
    s.membrane = membrane;
    s.covered = covered;
    std::map<int, int> comp_of_root;
    std::vector<int> comp(F, -1);
    for (int f = 0; f < F; ++f) {
        if (!in_surface[f]) continue;
        auto [it, fresh] = comp_of_root.emplace(faces.find(f), static_cast<int>(s.components.size()));
        if (fresh) s.components.emplace_back();
        comp[f] = it->second;
        s.components[comp[f]].faces.push_back(f);
    }
    std::vector<std::set<int>> vertex_classes(s.components.size());
    std::vector<char> seen(g.map.num_darts(), 0);
    for (int d = 0; d < g.map.num_darts(); ++d) {
        const int f = emb.face_of[d];
        if (!in_surface[f]) continue;
        auto& c = s.components[comp[f]];
        vertex_classes[comp[f]].insert(corners.find(d));
        if (glued[dart_edge(d)]) {
            if (d % 2 == 0) ++c.edges;
            continue;
        }
        ++c.edges;
        if (seen[d]) continue;
        BoundaryCycle b;
        int x = d;
        do {
            seen[x] = 1;
            b.darts.push_back(x);
            b.duplicate.push_back(tr.edge_membrane[dart_edge(x)] == membrane);
            b.signature += g.dart_signature(x);
            int y = emb.next_in_face(x);
            while (glued[dart_edge(y)]) y = emb.next_in_face(y ^ 1);
            x = y;
        } while (x != d);
        c.boundaries.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        auto& c = s.components[i];
        c.vertices = static_cast<int>(vertex_classes[i].size());
        c.euler = c.vertices - c.edges + static_cast<int>(c.faces.size());
    }
    return s;
}

MergeSurface fill(MergeSurface s) {
    for (auto& c : s.components)
        for (auto& b : c.boundaries) {
            if (b.capped || b.signature != Vec2{}) continue;
            if (c.open_boundaries() >= 2 || c.euler <= 0) {
                b.capped = true;
                ++c.euler;
            }
        }
    return s;
}

bool is_union_of_disks(const MergeSurface& s) {
    return std::all_of(s.components.begin(), s.components.end(), [](const SurfaceComponent& c) {
        return c.orientable && c.euler == 1 && c.open_boundaries() == 1;
    });
}

AnnulusCertificate find_annulus_certificate(const DoubleBubbleTrace& tr, Membrane membrane, int root) {
    const int mi = static_cast<int>(membrane);
    const MembraneTree mt = membrane_tree(tr.circle, tr.chords[mi]);
    if (root < 0 || root >= mt.num_vertices)
        throw InvalidInput("root region " + std::to_string(root) + " out of range (membrane tree has " +
                           std::to_string(mt.num_vertices) + " regions)");
    std::vector<std::vector<int>> incident(mt.num_vertices);
    for (int c = 0; c < static_cast<int>(mt.edges.size()); ++c)
        for (int r : mt.edges[c]) incident[r].push_back(c);

    std::vector<int> order;
    std::vector<char> reached(mt.num_vertices, 0), used(mt.edges.size(), 0);
    std::vector<int> queue{root};
    reached[root] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int c : incident[queue[i]]) {
            if (used[c]) continue;
            used[c] = 1;
            order.push_back(c);
            const int next = mt.edges[c][0] == queue[i] ? mt.edges[c][1] : mt.edges[c][0];
            if (!reached[next]) {
                reached[next] = 1;
                queue.push_back(next);
            }
        }

    std::vector<int> covered;
    for (std::size_t step = 0; step <= order.size(); ++step) {
        if (step > 0) covered.push_back(order[step - 1]);
        const MergeSurface s = fill(merge(tr, membrane, covered));
        if (is_union_of_disks(s)) continue;

        std::vector<const SurfaceComponent*> bad;
        for (const auto& c : s.components)
            if (!(c.euler == 1 && c.open_boundaries() == 1)) bad.push_back(&c);
        if (bad.size() != 1)
            throw InternalError(std::to_string(bad.size()) + " non-disk components appeared at once");
        const SurfaceComponent& a = *bad[0];
        if (!a.orientable || a.euler != 0 || a.open_boundaries() != 2)
            throw InternalError("first non-disk component is not an annulus (euler " + std::to_string(a.euler) +
                                ", " + std::to_string(a.open_boundaries()) + " boundaries)");

        AnnulusCertificate cert;
        cert.membrane = membrane;
        cert.root = root;
        cert.covered = covered;
        int k = 0;
        std::set<int> support;
        for (const auto& b : a.boundaries) {
            if (b.capped) continue;
            for (int d : b.darts) {
                cert.boundary_edges[k].push_back(dart_edge(d));
                support.insert(dart_edge(d));
            }
            std::sort(cert.boundary_edges[k].begin(), cert.boundary_edges[k].end());
            cert.classes[k] = b.signature;
            cert.boundary_weights[k] = b.weight(tr.gamma);
            ++k;
        }
        cert.support.assign(support.begin(), support.end());
        for (int e : cert.support) cert.support_weight += tr.gamma.weight[e];
        cert.bound = Rational(cert.boundary_weights[0] + cert.boundary_weights[1], 2);
        cert.degenerate = cert.boundary_weights[0] == 0 && cert.boundary_weights[1] == 0;
        cert.hypothesis_met = is_compressible(cert.classes[0]) && is_compressible(cert.classes[1]);
        if (Rational(cert.support_weight) < cert.bound)
            throw InternalError("support weight " + std::to_string(cert.support_weight) + " is below the bound");
        return cert;
    }
    throw InternalError("the merged surface stays a union of disks over the whole membrane tree");
}

ConsistencyReport check_theorem_consistency(const DoubleBubbleTrace& tr, const TorusMap& t) {
    ConsistencyReport r;
    r.total = total_weight(tr);
    r.w = sphere_weights(tr);
    r.c_rep = c_rep_torus(t);
    r.total_ok = r.total >= r.c_rep;
    const int need = (2 * r.c_rep + 2) / 3;
    r.max_ok = *std::max_element(r.w.begin(), r.w.end()) >= need;
    return r;
}

}  // namespace knotwidth
