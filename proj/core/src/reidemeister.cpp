#include "knotwidth/reidemeister.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "knotwidth/errors.hpp"

namespace knotwidth {

std::string to_string(Move m) {
    switch (m) {
        case Move::r1_add: return "R1+";
        case Move::r1_remove: return "R1-";
        case Move::r2_add: return "R2+";
        case Move::r2_remove: return "R2-";
        case Move::r3: return "R3";
    }
    return "?";
}

Move move_from_string(const std::string& s) {
    for (Move m : {Move::r1_add, Move::r1_remove, Move::r2_add, Move::r2_remove, Move::r3})
        if (to_string(m) == s) return m;
    throw InvalidInput("unknown Reidemeister move '" + s + "'");
}

int crossing_delta(Move m) {
    switch (m) {
        case Move::r1_add: return 1;
        case Move::r1_remove: return -1;
        case Move::r2_add: return 2;
        case Move::r2_remove: return -2;
        case Move::r3: return 0;
    }
    return 0;
}

std::string describe(const Site& s) {
    auto slot = [](SlotRef r) { return "(" + std::to_string(r.node) + "," + std::to_string(r.slot) + ")"; };
    std::string out = to_string(s.move);
    switch (s.move) {
        case Move::r1_add:
            out += " arc=" + std::to_string(s.arc) + " side=" + std::to_string(s.side) +
                   " over=" + std::to_string(s.over);
            break;
        case Move::r2_add:
            out += " a=" + slot(s.dart_a) + " b=" + slot(s.dart_b) + " over=" + std::to_string(s.over);
            break;
        default:
            out += " at=" + slot({s.node, s.slot});
    }
    return out;
}

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

// Mutable copy used while rewriting; node ids are stable until finish().
struct Work {
    struct Node {
        bool crossing;
        int over;
        int degree;
        bool alive = true;
    };
    std::vector<Node> nodes;
    std::vector<Arc> arcs;
    std::vector<char> arc_alive;
    bool split;

    explicit Work(const Diagram& d) : arcs(d.arcs), arc_alive(d.arcs.size(), 1), split(d.split) {
        for (const auto& c : d.crossings) nodes.push_back({true, c.over, 4});
        for (const auto& t : d.true_vertices) nodes.push_back({false, 0, t.degree});
    }
    int add_crossing(int over) {
        nodes.push_back({true, over, 4});
        return static_cast<int>(nodes.size()) - 1;
    }
    void add_arc(SlotRef a, SlotRef b) {
        arcs.push_back({a, b});
        arc_alive.push_back(1);
    }
    Diagram finish() const {
        std::vector<int> id(nodes.size(), -1);
        Diagram d;
        d.split = split;
        for (std::size_t v = 0; v < nodes.size(); ++v)
            if (nodes[v].alive && nodes[v].crossing) {
                id[v] = static_cast<int>(d.crossings.size());
                d.crossings.push_back({nodes[v].over});
            }
        const int nc = static_cast<int>(d.crossings.size());
        for (std::size_t v = 0; v < nodes.size(); ++v)
            if (nodes[v].alive && !nodes[v].crossing) {
                id[v] = nc + static_cast<int>(d.true_vertices.size());
                d.true_vertices.push_back({nodes[v].degree});
            }
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (!arc_alive[i]) continue;
            const Arc& a = arcs[i];
            d.arcs.push_back({{id[a.a.node], a.a.slot}, {id[a.b.node], a.b.slot}});
        }
        return d;
    }
};

using SlotTable = std::vector<std::vector<int>>;

SlotRef next_in_face(const Diagram& d, const SlotTable& at, SlotRef h) {
    SlotRef t = partner(d, at, h);
    return {t.node, (t.slot + 1) % d.degree(t.node)};
}

std::vector<std::vector<SlotRef>> faces_of(const Diagram& d, const SlotTable& at) {
    std::vector<std::vector<int>> seen(d.num_nodes());
    for (int v = 0; v < d.num_nodes(); ++v) seen[v].assign(d.degree(v), 0);
    std::vector<std::vector<SlotRef>> faces;
    for (int v = 0; v < d.num_nodes(); ++v)
        for (int s = 0; s < d.degree(v); ++s) {
            if (seen[v][s]) continue;
            faces.emplace_back();
            for (SlotRef h{v, s}; !seen[h.node][h.slot]; h = next_in_face(d, at, h)) {
                seen[h.node][h.slot] = 1;
                faces.back().push_back(h);
            }
        }
    return faces;
}

int face_index(const std::vector<std::vector<SlotRef>>& faces, SlotRef h) {
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (SlotRef x : faces[f])
            if (x == h) return static_cast<int>(f);
    return -1;
}

[[noreturn]] void illegal(const Site& s, const std::string& why) {
    throw InvalidInput("illegal site " + describe(s) + ": " + why);
}

bool valid_slot(const Diagram& d, SlotRef r) {
    return r.node >= 0 && r.node < d.num_nodes() && r.slot >= 0 && r.slot < d.degree(r.node);
}

bool over_on(const Diagram& d, int c, int slot) { return mod4(d.crossings[c].over) % 2 == mod4(slot) % 2; }

Diagram apply_r1_add(const Diagram& d, const Site& s) {
    if (s.arc < 0 || s.arc >= d.num_arcs()) illegal(s, "R1+ needs an existing arc");
    if ((s.side != 0 && s.side != 1) || (s.over != 0 && s.over != 1)) illegal(s, "side and over must be 0 or 1");
    Work w(d);
    const Arc old = d.arcs[s.arc];
    w.arc_alive[s.arc] = 0;
    int c = w.add_crossing(s.over);
    w.add_arc(old.a, {c, 0});
    if (s.side == 0) {
        w.add_arc({c, 2}, {c, 1});
        w.add_arc({c, 3}, old.b);
    } else {
        w.add_arc({c, 2}, {c, 3});
        w.add_arc({c, 1}, old.b);
    }
    return w.finish();
}

std::string r1_remove_problem(const Diagram& d, const SlotTable& at, int c, int s) {
    if (c < 0 || c >= d.num_crossings()) return "R1- needs a crossing";
    if (s < 0 || s > 3) return "slot out of range";
    if (partner(d, at, {c, s}) != SlotRef{c, mod4(s + 1)}) return "no kink loop joining adjacent slots";
    if (partner(d, at, {c, mod4(s + 2)}) == SlotRef{c, mod4(s + 3)} && d.num_nodes() > 1)
        return "kink removal would leave a crossing-free split component";
    return {};
}

Diagram apply_r1_remove(const Diagram& d, const Site& s) {
    auto at = slot_arcs(d);
    if (auto why = r1_remove_problem(d, at, s.node, s.slot); !why.empty()) illegal(s, why);
    const int c = s.node;
    SlotRef x = partner(d, at, {c, mod4(s.slot + 2)});
    SlotRef y = partner(d, at, {c, mod4(s.slot + 3)});
    if (x.node == c) return unknot_diagram();
    Work w(d);
    for (int k = 0; k < 4; ++k) w.arc_alive[at[c][k]] = 0;
    w.nodes[c].alive = false;
    w.add_arc(x, y);
    return w.finish();
}

Diagram apply_r2_add(const Diagram& d, const Site& s) {
    if (!valid_slot(d, s.dart_a) || !valid_slot(d, s.dart_b)) illegal(s, "darts must be existing slots");
    if (s.over != 0 && s.over != 1) illegal(s, "over must be 0 or 1");
    auto at = slot_arcs(d);
    const int arc_a = at[s.dart_a.node][s.dart_a.slot];
    const int arc_b = at[s.dart_b.node][s.dart_b.slot];
    if (arc_a == arc_b) illegal(s, "R2+ needs two distinct arcs");
    auto faces = faces_of(d, at);
    if (face_index(faces, s.dart_a) != face_index(faces, s.dart_b))
        illegal(s, "the two arcs do not border a common face on these sides");
    const SlotRef ha = s.dart_a, ta = partner(d, at, ha);
    const SlotRef hb = s.dart_b, tb = partner(d, at, hb);
    Work w(d);
    w.arc_alive[arc_a] = 0;
    w.arc_alive[arc_b] = 0;
    // Strand a uses slots {1,3} of both new crossings, strand b uses {0,2}.
    const int over = s.over == 0 ? 1 : 0;
    int x = w.add_crossing(over);
    int y = w.add_crossing(over);
    w.add_arc(ha, {x, 3});
    w.add_arc({x, 1}, {y, 1});
    w.add_arc({y, 3}, ta);
    w.add_arc(hb, {y, 2});
    w.add_arc({y, 0}, {x, 2});
    w.add_arc({x, 0}, tb);
    return w.finish();
}

struct Bigon {
    int x, s, y, b;
};

std::string bigon_problem(const Diagram& d, const SlotTable& at, SlotRef h, Bigon* out) {
    if (!valid_slot(d, h)) return "dart is not an existing slot";
    const int x = h.node, s = h.slot;
    if (!d.is_crossing(x)) return "bigon corner is not a crossing";
    SlotRef t1 = partner(d, at, h);
    if (!d.is_crossing(t1.node) || t1.node == x) return "no bigon between two distinct crossings";
    const int y = t1.node, b = t1.slot;
    SlotRef t2 = partner(d, at, {y, mod4(b + 1)});
    if (t2 != SlotRef{x, mod4(s - 1)}) return "face at this dart is not a bigon";
    bool strand1_x = over_on(d, x, s), strand1_y = over_on(d, y, b);
    if (strand1_x != strand1_y) return "bigon strands alternate over/under";
    for (SlotRef e : {SlotRef{x, mod4(s + 2)}, SlotRef{y, mod4(b + 2)}, SlotRef{y, mod4(b + 3)},
                      SlotRef{x, mod4(s + 1)}}) {
        SlotRef p = partner(d, at, e);
        if (p.node == x || p.node == y) return "bigon strands close up locally";
    }
    if (out) *out = {x, s, y, b};
    return {};
}

Diagram apply_r2_remove(const Diagram& d, const Site& s) {
    auto at = slot_arcs(d);
    Bigon g{};
    if (auto why = bigon_problem(d, at, {s.node, s.slot}, &g); !why.empty()) illegal(s, why);
    SlotRef p1 = partner(d, at, {g.x, mod4(g.s + 2)});
    SlotRef q1 = partner(d, at, {g.y, mod4(g.b + 2)});
    SlotRef p2 = partner(d, at, {g.y, mod4(g.b + 3)});
    SlotRef q2 = partner(d, at, {g.x, mod4(g.s + 1)});
    Work w(d);
    for (int k = 0; k < 4; ++k) {
        w.arc_alive[at[g.x][k]] = 0;
        w.arc_alive[at[g.y][k]] = 0;
    }
    w.nodes[g.x].alive = false;
    w.nodes[g.y].alive = false;
    w.add_arc(p1, q1);
    w.add_arc(p2, q2);
    Diagram out = w.finish();
    if (!validate(out).valid) illegal(s, "removing the bigon disconnects the diagram");
    return out;
}

struct Triangle {
    int x, a, y, b, z, c;
};

std::string triangle_problem(const Diagram& d, const SlotTable& at, SlotRef h, Triangle* out) {
    if (!valid_slot(d, h)) return "dart is not an existing slot";
    const int x = h.node, a = h.slot;
    if (!d.is_crossing(x)) return "triangle corner is not a crossing";
    SlotRef t1 = partner(d, at, h);
    if (!d.is_crossing(t1.node)) return "triangle corner is not a crossing";
    const int y = t1.node, b = mod4(t1.slot + 1);
    SlotRef t2 = partner(d, at, {y, b});
    if (!d.is_crossing(t2.node)) return "triangle corner is not a crossing";
    const int z = t2.node, c = mod4(t2.slot + 1);
    SlotRef t3 = partner(d, at, {z, c});
    if (t3 != SlotRef{x, mod4(a - 1)}) return "face at this dart is not a triangle";
    if (x == y || y == z || x == z) return "triangle corners are not three distinct crossings";
    // Strand p runs x-y, q runs y-z, r runs z-x.
    bool p_top = over_on(d, x, a) && over_on(d, y, b - 1);
    bool q_top = over_on(d, y, b) && over_on(d, z, c - 1);
    bool r_top = over_on(d, z, c) && over_on(d, x, a - 1);
    if (!p_top && !q_top && !r_top) return "no strand passes over both of its triangle crossings";
    if (out) *out = {x, a, y, b, z, c};
    return {};
}

Diagram apply_r3(const Diagram& d, const Site& s) {
    auto at = slot_arcs(d);
    Triangle t{};
    if (auto why = triangle_problem(d, at, {s.node, s.slot}, &t); !why.empty()) illegal(s, why);
    const bool p_over_y = over_on(d, t.y, t.b - 1);
    const bool q_over_z = over_on(d, t.z, t.c - 1);
    const bool r_over_x = over_on(d, t.x, t.a - 1);

    // New corner for each old external slot, keyed by the crossing the strand pair keeps.
    std::vector<std::pair<SlotRef, SlotRef>> remap = {
        {{t.x, mod4(t.a + 2)}, {t.y, 0}}, {{t.z, mod4(t.c + 1)}, {t.y, 1}},
        {{t.y, mod4(t.b + 2)}, {t.z, 0}}, {{t.x, mod4(t.a + 1)}, {t.z, 1}},
        {{t.z, mod4(t.c + 2)}, {t.x, 0}}, {{t.y, mod4(t.b + 1)}, {t.x, 1}},
    };
    auto moved = [&](SlotRef r) {
        for (const auto& [from, to] : remap)
            if (from == r) return to;
        return r;
    };
    const int tri[3] = {at[t.x][t.a], at[t.y][t.b], at[t.z][t.c]};
    Work w(d);
    for (std::size_t i = 0; i < w.arcs.size(); ++i) {
        if (i == static_cast<std::size_t>(tri[0]) || i == static_cast<std::size_t>(tri[1]) ||
            i == static_cast<std::size_t>(tri[2])) {
            w.arc_alive[i] = 0;
            continue;
        }
        w.arcs[i] = {moved(w.arcs[i].a), moved(w.arcs[i].b)};
    }
    w.nodes[t.y].over = p_over_y ? 0 : 1;
    w.nodes[t.z].over = q_over_z ? 0 : 1;
    w.nodes[t.x].over = r_over_x ? 0 : 1;
    w.add_arc({t.y, 2}, {t.x, 3});
    w.add_arc({t.y, 3}, {t.z, 2});
    w.add_arc({t.z, 3}, {t.x, 2});
    return w.finish();
}

SlotRef min_dart(const std::vector<SlotRef>& face) { return *std::min_element(face.begin(), face.end()); }

}  // namespace

std::vector<Site> enumerate_sites(const Diagram& d, Move move) {
    std::vector<Site> out;
    auto at = slot_arcs(d);
    switch (move) {
        case Move::r1_add: {
            std::vector<int> order(d.num_arcs());
            for (int i = 0; i < d.num_arcs(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](int i, int j) { return std::tie(d.arcs[i].a, i) < std::tie(d.arcs[j].a, j); });
            for (int i : order)
                for (int side = 0; side < 2; ++side)
                    for (int over = 0; over < 2; ++over) {
                        Site s;
                        s.move = move;
                        s.arc = i;
                        s.side = side;
                        s.over = over;
                        out.push_back(s);
                    }
            break;
        }
        case Move::r1_remove:
            for (int c = 0; c < d.num_crossings(); ++c)
                for (int k = 0; k < 4; ++k)
                    if (r1_remove_problem(d, at, c, k).empty()) {
                        Site s;
                        s.move = move;
                        s.node = c;
                        s.slot = k;
                        out.push_back(s);
                    }
            break;
        case Move::r2_add: {
            auto faces = faces_of(d, at);
            std::vector<Site> sites;
            for (const auto& f : faces)
                for (SlotRef ha : f)
                    for (SlotRef hb : f) {
                        if (at[ha.node][ha.slot] == at[hb.node][hb.slot]) continue;
                        for (int over = 0; over < 2; ++over) {
                            Site s;
                            s.move = move;
                            s.dart_a = ha;
                            s.dart_b = hb;
                            s.over = over;
                            sites.push_back(s);
                        }
                    }
            std::sort(sites.begin(), sites.end(), [](const Site& p, const Site& q) {
                return std::tie(p.dart_a, p.dart_b, p.over) < std::tie(q.dart_a, q.dart_b, q.over);
            });
            out = std::move(sites);
            break;
        }
        case Move::r2_remove:
        case Move::r3: {
            auto faces = faces_of(d, at);
            const std::size_t len = move == Move::r2_remove ? 2 : 3;
            for (const auto& f : faces) {
                if (f.size() != len) continue;
                SlotRef h = min_dart(f);
                std::string why = move == Move::r2_remove ? bigon_problem(d, at, h, nullptr)
                                                          : triangle_problem(d, at, h, nullptr);
                if (!why.empty()) continue;
                if (move == Move::r2_remove) {
                    Site probe;
                    probe.move = move;
                    probe.node = h.node;
                    probe.slot = h.slot;
                    try {
                        apply_r2_remove(d, probe);
                    } catch (const InvalidInput&) {
                        continue;
                    }
                }
                Site s;
                s.move = move;
                s.node = h.node;
                s.slot = h.slot;
                out.push_back(s);
            }
            std::sort(out.begin(), out.end(), [](const Site& p, const Site& q) {
                return std::tie(p.node, p.slot) < std::tie(q.node, q.slot);
            });
            break;
        }
    }
    return out;
}

Diagram reidemeister(const Diagram& d, const Site& site) {
    require_valid(d);
    Diagram out;
    switch (site.move) {
        case Move::r1_add: out = apply_r1_add(d, site); break;
        case Move::r1_remove: out = apply_r1_remove(d, site); break;
        case Move::r2_add: out = apply_r2_add(d, site); break;
        case Move::r2_remove: out = apply_r2_remove(d, site); break;
        case Move::r3: out = apply_r3(d, site); break;
    }
    ValidationReport r = validate(out);
    if (!r.valid) {
        std::string msg = "move result failed validation";
        for (const auto& p : r.problems) msg += "; " + p;
        throw InternalError(describe(site) + ": " + msg);
    }
    return out;
}

Diagram random_walk(const Diagram& d, int n_moves, std::uint64_t seed, int max_crossings, WalkLog* log) {
    require_valid(d);
    if (n_moves < 0) throw InvalidInput("n_moves must be non-negative");
    std::mt19937_64 rng(seed);
    Diagram cur = d;
    const Move all[] = {Move::r1_add, Move::r1_remove, Move::r2_add, Move::r2_remove, Move::r3};
    for (int step = 0; step < n_moves; ++step) {
        std::vector<std::vector<Site>> options;
        for (Move m : all) {
            if (cur.num_crossings() + crossing_delta(m) > max_crossings) continue;
            auto sites = enumerate_sites(cur, m);
            if (!sites.empty()) options.push_back(std::move(sites));
        }
        if (options.empty()) {
            if (log) log->messages.push_back("step " + std::to_string(step) + ": no legal move, skipped");
            continue;
        }
        const auto& sites = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        const Site& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        cur = reidemeister(cur, site);
        if (log) log->applied.push_back(site);
    }
    return cur;
}

}  // namespace knotwidth
