#include "knotwidth/torus_map.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "knotwidth/errors.hpp"

namespace knotwidth {

std::string to_string(const Vec2& v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

bool is_compressible(const CurveClass& c) {
    return (std::abs(c.x) == 1 && c.y == 0) || (c.x == 0 && std::abs(c.y) == 1);
}

int add_vertex(TorusMap& t, TorusVertexKind kind, std::optional<Point> pos) {
    t.map.kind.push_back(VertexKind::true_vertex);
    t.map.rotation.emplace_back();
    t.vertex_kind.push_back(kind);
    t.position.push_back(pos);
    return t.num_vertices() - 1;
}

int add_edge(TorusMap& t, int tail, int head, Vec2 signature, int weight, std::vector<Point> polyline) {
    t.map.edges.push_back({tail, head});
    t.signature.push_back(signature);
    t.weight.push_back(weight);
    t.polyline.push_back(std::move(polyline));
    return t.num_edges() - 1;
}

namespace {

// Comparisons stay Rational-to-Rational: mixed int overloads recurse under C++20 rewriting.
const Rational kZero(0);
const Rational kOne(1);

struct Direction {
    Rational dx, dy;
};

bool upper_half(const Direction& d) { return d.dy > kZero || (d.dy == kZero && d.dx > kZero); }

bool angle_less(const Direction& a, const Direction& b) {
    const bool ua = upper_half(a), ub = upper_half(b);
    if (ua != ub) return ua;
    return a.dx * b.dy - a.dy * b.dx > kZero;
}

Rational floor_of(const Rational& r) {
    std::int64_t n = r.numerator(), d = r.denominator();
    std::int64_t q = n / d;
    if ((n % d != 0) && (n < 0)) --q;
    return Rational(q);
}

bool in_unit_square(const Point& p) { return p.x >= kZero && p.x < kOne && p.y >= kZero && p.y < kOne; }

// Cumulative lift offset of every dart's tail within its face walk.
std::vector<Vec2> face_offsets(const TorusMap& t, const Embedding& emb) {
    std::vector<Vec2> off(t.map.num_darts());
    for (const auto& face : emb.faces) {
        Vec2 acc;
        for (int d : face) {
            off[d] = acc;
            acc += t.dart_signature(d);
        }
    }
    return off;
}

}  // namespace

void rotation_from_geometry(TorusMap& t) {
    const int V = t.num_vertices();
    std::vector<std::vector<std::pair<Direction, int>>> around(V);
    for (int e = 0; e < t.num_edges(); ++e) {
        const auto& pl = t.polyline[e];
        if (pl.size() < 2) throw InvalidInput("edge " + std::to_string(e) + " has no polyline to orient by");
        Direction out{pl[1].x - pl[0].x, pl[1].y - pl[0].y};
        const auto& a = pl[pl.size() - 1];
        const auto& b = pl[pl.size() - 2];
        Direction back{b.x - a.x, b.y - a.y};
        if ((out.dx == kZero && out.dy == kZero) || (back.dx == kZero && back.dy == kZero))
            throw InvalidInput("edge " + std::to_string(e) + " starts or ends with a zero-length segment");
        around[t.map.edges[e][0]].push_back({out, 2 * e});
        around[t.map.edges[e][1]].push_back({back, 2 * e + 1});
    }
    for (int v = 0; v < V; ++v) {
        auto& list = around[v];
        std::stable_sort(list.begin(), list.end(),
                         [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
        for (std::size_t i = 1; i < list.size(); ++i)
            if (!angle_less(list[i - 1].first, list[i].first))
                throw InvalidInput("two edges leave vertex " + std::to_string(v) + " in the same direction");
        t.map.rotation[v].clear();
        for (const auto& [dir, d] : list) t.map.rotation[v].push_back(d);
    }
}

TorusReport validate_torus_map(const TorusMap& t) {
    TorusReport r;
    const int V = t.num_vertices(), E = t.num_edges();
    if (static_cast<int>(t.vertex_kind.size()) != V || static_cast<int>(t.position.size()) != V ||
        static_cast<int>(t.signature.size()) != E || static_cast<int>(t.weight.size()) != E ||
        static_cast<int>(t.polyline.size()) != E) {
        r.rotation_ok = false;
        r.problems.push_back("per-vertex or per-edge arrays have the wrong length");
        return r;
    }
    std::string why;
    if (!rotation_consistent(t.map, &why)) {
        r.rotation_ok = false;
        r.problems.push_back(why);
        return r;
    }
    for (int e = 0; e < E; ++e)
        if (t.weight[e] < 0) {
            r.rotation_ok = false;
            r.problems.push_back("edge " + std::to_string(e) + " has negative weight");
        }
    r.connected = is_connected(t.map);
    if (!r.connected) r.problems.push_back("map is disconnected");
    Embedding emb(t.map);
    r.faces = emb.num_faces();
    if (V - E + r.faces != 0) {
        r.euler_ok = false;
        r.problems.push_back("V - E + F = " + std::to_string(V - E + r.faces) + ", expected 0 on the torus");
    }
    for (int f = 0; f < r.faces; ++f) {
        Vec2 sum;
        for (int d : emb.faces[f]) sum += t.dart_signature(d);
        if (sum != Vec2{}) {
            r.face_sums_ok = false;
            r.problems.push_back("face " + std::to_string(f) + " has signature sum " + to_string(sum));
        }
    }
    for (int e = 0; e < E; ++e) {
        const auto& pl = t.polyline[e];
        if (pl.empty()) continue;
        // Signed crossings of the lines x = n and y = n, segment by segment.
        Vec2 counted;
        for (std::size_t i = 1; i < pl.size(); ++i) {
            counted.x += (floor_of(pl[i].x) - floor_of(pl[i - 1].x)).numerator();
            counted.y += (floor_of(pl[i].y) - floor_of(pl[i - 1].y)).numerator();
        }
        bool ok = in_unit_square(pl.front()) && counted == t.signature[e];
        const auto& tail = t.position[t.map.edges[e][0]];
        const auto& head = t.position[t.map.edges[e][1]];
        if (tail && !(*tail == pl.front())) ok = false;
        if (head) {
            Point end{head->x + Rational(t.signature[e].x), head->y + Rational(t.signature[e].y)};
            if (!(end == pl.back())) ok = false;
        }
        if (!ok) {
            r.polylines_ok = false;
            r.problems.push_back("polyline of edge " + std::to_string(e) + " disagrees with signature " +
                                 to_string(t.signature[e]) + " (segments give " + to_string(counted) + ")");
        }
    }
    return r;
}

CrossingGraph crossing_graph(const TorusMap& t) {
    Embedding emb(t.map);
    const auto off = face_offsets(t, emb);
    CrossingGraph cg;
    cg.num_faces = emb.num_faces();
    cg.out.resize(cg.num_faces);
    auto push = [&](Transition m) {
        cg.out[m.from].push_back(static_cast<int>(cg.moves.size()));
        cg.moves.push_back(m);
    };
    for (int d = 0; d < t.map.num_darts(); ++d) {
        const int tw = d ^ 1;
        Transition m;
        m.kind = Transition::Kind::edge;
        m.id = dart_edge(d);
        m.from = emb.face_of[d];
        m.to = emb.face_of[tw];
        m.cost = t.weight[m.id];
        m.shift = off[d] + t.dart_signature(d) - off[tw];
        push(m);
    }
    for (int v = 0; v < t.num_vertices(); ++v) {
        const int cost = t.vertex_kind[v] == TorusVertexKind::graph ? 1 : 0;
        for (int a : t.map.rotation[v])
            for (int b : t.map.rotation[v]) {
                if (a == b) continue;
                Transition m;
                m.kind = Transition::Kind::vertex;
                m.id = v;
                m.from = emb.face_of[a];
                m.to = emb.face_of[b];
                m.cost = cost;
                m.shift = off[a] - off[b];
                push(m);
            }
    }
    return cg;
}

CycleResult min_weight_cycle_in_class(const TorusMap& t, const CurveClass& c, int window) {
    if (!is_compressible(c))
        throw InvalidInput("class " + to_string(c) +
                           " is not compressible on the standard torus; use (+-1,0) or (0,+-1)");
    const CrossingGraph cg = crossing_graph(t);
    const int W = window > 0 ? window : 2 + static_cast<int>(std::max(std::abs(c.x), std::abs(c.y)));
    const int S = 2 * W + 1;
    const int F = cg.num_faces;
    auto state = [&](int f, const Vec2& z) { return (f * S + static_cast<int>(z.x + W)) * S + static_cast<int>(z.y + W); };
    const int INF = std::numeric_limits<int>::max();

    CycleResult best;
    best.weight = INF;
    std::vector<int> dist(static_cast<std::size_t>(F) * S * S);
    std::vector<int> via(dist.size());
    using Item = std::pair<int, int>;
    for (int f0 = 0; f0 < F; ++f0) {
        std::fill(dist.begin(), dist.end(), INF);
        std::fill(via.begin(), via.end(), -1);
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        const int src = state(f0, {0, 0});
        const int dst = state(f0, c);
        dist[src] = 0;
        pq.push({0, src});
        while (!pq.empty()) {
            auto [du, u] = pq.top();
            pq.pop();
            if (du != dist[u]) continue;
            if (du >= best.weight) break;
            if (u == dst) break;
            const int f = u / (S * S);
            const Vec2 z{(u / S) % S - W, u % S - W};
            for (int mi : cg.out[f]) {
                const Transition& m = cg.moves[mi];
                const Vec2 nz = z + m.shift;
                if (std::abs(nz.x) > W || std::abs(nz.y) > W) continue;
                const int v = state(m.to, nz);
                if (du + m.cost < dist[v]) {
                    dist[v] = du + m.cost;
                    via[v] = mi;
                    pq.push({dist[v], v});
                }
            }
        }
        if (dist[dst] < best.weight) {
            best.weight = dist[dst];
            best.start_face = f0;
            best.moves.clear();
            // Walk the parent moves back to the source.
            int u = dst;
            Vec2 z = c;
            while (u != src) {
                const Transition& m = cg.moves[via[u]];
                best.moves.push_back(via[u]);
                z = z - m.shift;
                u = state(m.from, z);
            }
            std::reverse(best.moves.begin(), best.moves.end());
        }
    }
    if (best.weight == INF)
        throw InternalError("no closed walk of class " + to_string(c) + " within the search window");
    return best;
}

int c_rep_torus(const TorusMap& t) {
    return std::min(min_weight_cycle_in_class(t, {1, 0}).weight, min_weight_cycle_in_class(t, {0, 1}).weight);
}

Rational curve_offset() { return Rational(1, 97); }

TorusMap torus_embedding_of_torus_knot(int p, int q) {
    if (p < 1 || q < 1) throw InvalidInput("torus knot needs p, q >= 1");
    if (std::gcd(p, q) != 1)
        throw UnsupportedInput("gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1 gives a link, not a knot");
    const Rational c = curve_offset();
    TorusMap t;
    const int origin = add_vertex(t, TorusVertexKind::auxiliary, Point{0, 0});
    // Curve points on x = 0 satisfy p y = -c mod 1, on y = 0 they satisfy q x = c mod 1.
    std::vector<int> on_x(p), on_y(q);
    for (int m = 1; m <= p; ++m) on_x[m - 1] = add_vertex(t, TorusVertexKind::graph, Point{0, (Rational(m) - c) / p});
    for (int m = 0; m < q; ++m) on_y[m] = add_vertex(t, TorusVertexKind::graph, Point{(Rational(m) + c) / q, 0});

    auto pos = [&](int v) { return *t.position[v]; };
    auto cut_chain = [&](const std::vector<int>& pts, Vec2 wrap) {
        int prev = origin;
        for (int v : pts) {
            add_edge(t, prev, v, {}, 0, {pos(prev), pos(v)});
            prev = v;
        }
        Point end{Rational(wrap.x), Rational(wrap.y)};
        add_edge(t, prev, origin, wrap, 0, {pos(prev), end});
    };
    cut_chain(on_x, {0, 1});
    cut_chain(on_y, {1, 0});

    auto locate = [&](const Point& at) {
        for (int v = 1; v < t.num_vertices(); ++v)
            if (pos(v) == at) return v;
        throw InternalError("curve point missing from the cut vertices");
    };
    for (int v = 1; v < t.num_vertices(); ++v) {
        const Point a = pos(v);
        // Run along direction (p,q) to the first of x = 1, y = 1.
        const Rational sx = (Rational(1) - a.x) / p, sy = (Rational(1) - a.y) / q;
        const Rational s = std::min(sx, sy);
        const Point b{a.x + s * p, a.y + s * q};
        const Vec2 wrap = sx < sy ? Vec2{1, 0} : Vec2{0, 1};
        const Point at{b.x - wrap.x, b.y - wrap.y};
        add_edge(t, v, locate(at), wrap, 1, {a, b});
    }
    rotation_from_geometry(t);
    return t;
}

TorusMap empty_torus_map() {
    TorusMap t;
    add_vertex(t, TorusVertexKind::auxiliary, Point{0, 0});
    add_edge(t, 0, 0, {1, 0}, 0, {Point{0, 0}, Point{1, 0}});
    add_edge(t, 0, 0, {0, 1}, 0, {Point{0, 0}, Point{0, 1}});
    rotation_from_geometry(t);
    return t;
}

std::vector<int> overlay_weights(const std::vector<std::vector<Point>>& polylines, int p, int q) {
    if (p < 0 || q < 0 || (p == 0 && q == 0)) throw InvalidInput("overlay needs a nonzero class (p,q)");
    const Rational c = curve_offset();
    auto level = [&](const Point& pt) { return pt.x * q - pt.y * p - c; };
    auto is_integer = [](const Rational& r) { return r.denominator() == 1; };
    std::vector<int> out;
    out.reserve(polylines.size());
    for (std::size_t e = 0; e < polylines.size(); ++e) {
        const auto& pl = polylines[e];
        int count = 0;
        for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
            const Rational a = level(pl[i]), b = level(pl[i + 1]);
            const std::string where = "edge " + std::to_string(e) + " segment " + std::to_string(i);
            if (a == b) {
                if (is_integer(a)) throw InvalidInput(where + " runs along the curve; perturb it");
                continue;
            }
            if (is_integer(a) || is_integer(b)) throw InvalidInput(where + " ends on the curve; perturb it");
            const Rational lo = std::min(a, b), hi = std::max(a, b);
            count += static_cast<int>((floor_of(hi) - floor_of(lo)).numerator());
        }
        out.push_back(count);
    }
    return out;
}

}  // namespace knotwidth
