#include "knotwidth/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "knotwidth/errors.hpp"

namespace knotwidth {

using json = nlohmann::json;

namespace {

json parse_document(std::string_view text, const std::string& format) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        int line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("invalid JSON", line, column);
    }
    if (!j.is_object() || !j.contains("schema") || j["schema"] != format)
        throw ParseError("expected a \"" + format + "\" document");
    return j;
}

// Field access that reports the missing key instead of nlohmann's generic text.
template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type");
    }
}

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_value(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw ParseError("coordinate must be an integer or a \"n/d\" string");
    const std::string s = j.get<std::string>();
    try {
        std::size_t used = 0;
        const std::int64_t num = std::stoll(s, &used);
        if (used == s.size()) return Rational(num);
        if (s[used] != '/') throw ParseError("bad rational '" + s + "'");
        std::size_t used2 = 0;
        const std::int64_t den = std::stoll(s.substr(used + 1), &used2);
        if (used + 1 + used2 != s.size() || den == 0) throw ParseError("bad rational '" + s + "'");
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

json point_json(const Point& p) { return json::array({rational_text(p.x), rational_text(p.y)}); }

Point point_value(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a pair");
    return {rational_value(j[0]), rational_value(j[1])};
}

json noose_json(const Noose& n) {
    return {{"faces", n.faces}, {"vertices", n.vertices}, {"corners", n.corners}};
}

json tree_json(const BranchDecomposition& bd) {
    json nooses = json::array();
    for (const auto& n : bd.noose) nooses.push_back(n ? noose_json(*n) : json(nullptr));
    return {{"root", bd.root}, {"width", bd.width}, {"parent", bd.parent}, {"leaf_edge", bd.leaf_edge},
            {"nooses", nooses}};
}

json torus_json(const TorusMap& t) {
    json verts = json::array();
    for (int v = 0; v < t.num_vertices(); ++v) {
        json jv = {{"kind", t.vertex_kind[v] == TorusVertexKind::graph ? "graph" : "auxiliary"}};
        if (t.position[v]) jv["position"] = point_json(*t.position[v]);
        verts.push_back(jv);
    }
    std::vector<std::array<int, 2>> index(t.num_edges());
    for (int v = 0; v < t.num_vertices(); ++v)
        for (std::size_t i = 0; i < t.map.rotation[v].size(); ++i) {
            const int d = t.map.rotation[v][i];
            index[d >> 1][d & 1] = static_cast<int>(i);
        }
    json edges = json::array();
    for (int e = 0; e < t.num_edges(); ++e) {
        json je = {{"tail", t.map.edges[e][0]},
                   {"head", t.map.edges[e][1]},
                   {"rotation_index", index[e]},
                   {"signature", {t.signature[e].x, t.signature[e].y}},
                   {"weight", t.weight[e]}};
        if (!t.polyline[e].empty()) {
            json pl = json::array();
            for (const auto& p : t.polyline[e]) pl.push_back(point_json(p));
            je["polyline"] = pl;
        }
        edges.push_back(je);
    }
    return {{"vertices", verts}, {"edges", edges}};
}

// Reads vertices/edges; rotation comes from rotation_index when every edge has one,
// otherwise from the polylines.
TorusMap torus_value(const json& j) {
    TorusMap t;
    const auto verts = field<json>(j, "vertices");
    const auto edges = field<json>(j, "edges");
    if (!verts.is_array() || !edges.is_array()) throw ParseError("vertices and edges must be arrays");
    for (const auto& jv : verts) {
        const std::string kind = jv.value("kind", "auxiliary");
        if (kind != "graph" && kind != "auxiliary") throw ParseError("vertex kind must be graph or auxiliary");
        std::optional<Point> pos;
        if (jv.contains("position")) pos = point_value(jv["position"]);
        add_vertex(t, kind == "graph" ? TorusVertexKind::graph : TorusVertexKind::auxiliary, pos);
    }
    bool indexed = true;
    for (const auto& je : edges) {
        const int tail = field<int>(je, "tail"), head = field<int>(je, "head");
        if (tail < 0 || head < 0 || tail >= t.num_vertices() || head >= t.num_vertices())
            throw ParseError("edge endpoint out of range");
        const auto sig = field<std::array<std::int64_t, 2>>(je, "signature");
        std::vector<Point> pl;
        if (je.contains("polyline"))
            for (const auto& p : je["polyline"]) pl.push_back(point_value(p));
        add_edge(t, tail, head, {sig[0], sig[1]}, je.value("weight", 0), std::move(pl));
        indexed = indexed && je.contains("rotation_index");
    }
    if (indexed && t.num_edges() > 0) {
        std::vector<std::vector<int>> rot(t.num_vertices());
        for (int e = 0; e < t.num_edges(); ++e) {
            const auto idx = field<std::array<int, 2>>(edges[e], "rotation_index");
            for (int side = 0; side < 2; ++side) {
                auto& r = rot[t.map.edges[e][side]];
                if (idx[side] < 0) throw ParseError("negative rotation index");
                if (static_cast<int>(r.size()) <= idx[side]) r.resize(idx[side] + 1, -1);
                if (r[idx[side]] != -1) throw ParseError("rotation index used twice at one vertex");
                r[idx[side]] = 2 * e + side;
            }
        }
        for (const auto& r : rot)
            for (int d : r)
                if (d < 0) throw ParseError("rotation indices leave a gap");
        t.map.rotation = std::move(rot);
    } else {
        try {
            rotation_from_geometry(t);
        } catch (const InvalidInput& e) {
            throw ParseError(std::string("cannot derive rotation: ") + e.what());
        }
    }
    return t;
}

int ball_value(const std::string& s) {
    if (s == "B1") return 0;
    if (s == "B2") return 1;
    if (s == "B3") return 2;
    throw ParseError("unknown ball '" + s + "'");
}

}  // namespace

std::string diagram_to_json(const Diagram& d) {
    json crossings = json::array(), vertices = json::array(), arcs = json::array();
    for (const auto& c : d.crossings) crossings.push_back({{"over", c.over}});
    for (const auto& v : d.true_vertices) vertices.push_back({{"degree", v.degree}});
    for (const auto& a : d.arcs) arcs.push_back({{a.a.node, a.a.slot}, {a.b.node, a.b.slot}});
    json j = {{"schema", "diagram.v1"}, {"crossings", crossings}, {"true_vertices", vertices},
              {"arcs", arcs},           {"split", d.split}};
    return j.dump(2) + "\n";
}

Diagram diagram_from_json(std::string_view text) {
    const json j = parse_document(text, "diagram.v1");
    Diagram d;
    for (const auto& c : field<json>(j, "crossings")) d.crossings.push_back({field<int>(c, "over")});
    if (j.contains("true_vertices"))
        for (const auto& v : j["true_vertices"]) d.true_vertices.push_back({field<int>(v, "degree")});
    for (const auto& a : field<json>(j, "arcs")) {
        std::array<std::array<int, 2>, 2> ends;
        try {
            ends = a.get<std::array<std::array<int, 2>, 2>>();
        } catch (const json::exception&) {
            throw ParseError("arc must be [[node, slot], [node, slot]]");
        }
        d.arcs.push_back({{ends[0][0], ends[0][1]}, {ends[1][0], ends[1][1]}});
    }
    d.split = j.value("split", false);
    const ValidationReport r = validate(d);
    if (!r.valid) throw ParseError("diagram is not valid: " + (r.problems.empty() ? "?" : r.problems.front()));
    return d;
}

std::string decomposition_to_json(const BranchDecomposition& bd) {
    json j = tree_json(bd);
    j["schema"] = "branchdecomp.v1";
    return j.dump(2) + "\n";
}

BranchDecomposition decomposition_from_json(std::string_view text) {
    const json j = parse_document(text, "branchdecomp.v1");
    BranchDecomposition bd;
    bd.root = field<int>(j, "root");
    bd.width = field<int>(j, "width");
    bd.parent = field<std::vector<int>>(j, "parent");
    bd.leaf_edge = field<std::vector<int>>(j, "leaf_edge");
    for (const auto& n : field<json>(j, "nooses")) {
        if (n.is_null()) {
            bd.noose.emplace_back();
            continue;
        }
        Noose nz;
        nz.faces = field<std::vector<int>>(n, "faces");
        nz.vertices = field<std::vector<int>>(n, "vertices");
        nz.corners = field<std::vector<int>>(n, "corners");
        bd.noose.push_back(std::move(nz));
    }
    if (bd.parent.size() != bd.leaf_edge.size() || bd.parent.size() != bd.noose.size())
        throw ParseError("parent, leaf_edge and nooses differ in length");
    return bd;
}

std::string sketch_to_json(const SphereDecompositionSketch& s) {
    json edges = json::array(), segments = json::array();
    for (std::size_t v = 0; v < s.counts.size(); ++v)
        if (s.counts[v]) edges.push_back({{"node", v}, {"c1", s.counts[v]->c1}, {"c2", s.counts[v]->c2}});
    for (const auto& seg : s.segments) {
        json js = {{"kind", to_string(seg.kind)}, {"node", seg.node}, {"weight", seg.weight}};
        if (seg.edge_node >= 0) js["edge_node"] = seg.edge_node;
        segments.push_back(js);
    }
    json j = {{"schema", "spheresketch.v1"},
              {"width", width(s)},
              {"tree_diagram", s.tree_diagram},
              {"tree", tree_json(s.tree)},
              {"edges", edges},
              {"segments", segments}};
    return j.dump(2) + "\n";
}

std::string torus_map_to_json(const TorusMap& t) {
    json j = torus_json(t);
    j["schema"] = "torusmap.v1";
    return j.dump(2) + "\n";
}

TorusMap torus_map_from_json(std::string_view text) { return torus_value(parse_document(text, "torusmap.v1")); }

std::string trace_to_json(const DoubleBubbleTrace& tr) {
    json j = torus_json(tr.gamma);
    j["schema"] = "bubbletrace.v1";
    j["circle"] = tr.circle;
    json membranes = json::object();
    for (int m = 0; m < 3; ++m) membranes[to_string(static_cast<Membrane>(m))] = tr.chords[m];
    j["membranes"] = membranes;
    for (int e = 0; e < tr.gamma.num_edges(); ++e) j["edges"][e]["membrane"] = to_string(tr.edge_membrane[e]);
    Embedding emb(tr.gamma.map);
    json faces = json::array();
    for (int f = 0; f < emb.num_faces() && f < static_cast<int>(tr.face_owner.size()); ++f)
        faces.push_back({{"dart", emb.faces[f].front()}, {"owner", "B" + std::to_string(tr.face_owner[f] + 1)}});
    j["faces"] = faces;
    return j.dump(2) + "\n";
}

DoubleBubbleTrace trace_from_json(std::string_view text) {
    const json j = parse_document(text, "bubbletrace.v1");
    DoubleBubbleTrace tr;
    tr.gamma = torus_value(j);
    tr.circle = field<std::vector<int>>(j, "circle");
    const auto membranes = field<json>(j, "membranes");
    for (int m = 0; m < 3; ++m) {
        const std::string key = to_string(static_cast<Membrane>(m));
        tr.chords[m] = field<std::vector<std::array<int, 2>>>(membranes, key.c_str());
    }
    for (const auto& je : j["edges"]) tr.edge_membrane.push_back(membrane_from_string(field<std::string>(je, "membrane")));
    Embedding emb(tr.gamma.map);
    tr.face_owner.assign(emb.num_faces(), -1);
    for (const auto& jf : field<json>(j, "faces")) {
        const int d = field<int>(jf, "dart");
        if (d < 0 || d >= tr.gamma.map.num_darts()) throw ParseError("face dart " + std::to_string(d) + " out of range");
        int& owner = tr.face_owner[emb.face_of[d]];
        const int b = ball_value(field<std::string>(jf, "owner"));
        if (owner >= 0 && owner != b) throw ParseError("face of dart " + std::to_string(d) + " given two owners");
        owner = b;
    }
    return tr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace knotwidth
