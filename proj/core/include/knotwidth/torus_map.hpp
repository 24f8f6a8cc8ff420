#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "knotwidth/plane_graph.hpp"

namespace knotwidth {

using Rational = boost::rational<std::int64_t>;

struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
};

// Element of Z^2: algebraic crossings with the cut curves x = 0 and y = 0.
struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

std::string to_string(const Vec2& v);

using CurveClass = Vec2;

// The four classes of simple closed curves bounding disks in one of the two solid tori.
bool is_compressible(const CurveClass& c);

enum class TorusVertexKind : std::uint8_t { graph, auxiliary };

// Graph cellularly embedded on the flat torus [0,1)^2.
// Topology lives in `map` (dart 2e leaves edges[e][0], rotation counterclockwise).
// signature[e] is the lift translation from tail to head. weight[e] counts
// the components a transverse crossing of e meets in G.
// polyline[e], when nonempty, starts at the tail's position and ends at the head's
// position plus signature[e], in unwrapped coordinates.
struct TorusMap {
    PlaneGraph map;
    std::vector<TorusVertexKind> vertex_kind;
    std::vector<std::optional<Point>> position;
    std::vector<Vec2> signature;
    std::vector<int> weight;
    std::vector<std::vector<Point>> polyline;

    int num_vertices() const { return map.num_vertices(); }
    int num_edges() const { return map.num_edges(); }

    Vec2 dart_signature(int d) const { return (d & 1) ? -signature[d >> 1] : signature[d >> 1]; }
};

// Adds a vertex / edge with empty geometry; rotation is left to the caller.
int add_vertex(TorusMap& t, TorusVertexKind kind, std::optional<Point> pos = std::nullopt);
int add_edge(TorusMap& t, int tail, int head, Vec2 signature, int weight, std::vector<Point> polyline = {});

// Orders each vertex's darts counterclockwise by the direction of the first
// polyline segment leaving it. Every edge needs a polyline.
void rotation_from_geometry(TorusMap& t);

struct TorusReport {
    bool rotation_ok = true;
    bool connected = true;
    bool euler_ok = true;
    bool face_sums_ok = true;
    bool polylines_ok = true;
    int faces = 0;
    std::vector<std::string> problems;

    bool ok() const { return rotation_ok && connected && euler_ok && face_sums_ok && polylines_ok; }
};

TorusReport validate_torus_map(const TorusMap& t);

// Transitions between faces. An edge move crosses edge `id` from face `from` to face `to`
// and costs its weight; a vertex move passes through vertex `id` between two corners
// and costs 1 on graph vertices, 0 on auxiliary ones. `shift` is the change of the
// face lift in the universal cover.
struct Transition {
    enum class Kind : std::uint8_t { edge, vertex };
    Kind kind = Kind::edge;
    int id = -1;
    int from = -1;
    int to = -1;
    int cost = 0;
    Vec2 shift;
};

struct CrossingGraph {
    int num_faces = 0;
    std::vector<Transition> moves;
    std::vector<std::vector<int>> out;  // face -> move ids
};

CrossingGraph crossing_graph(const TorusMap& t);

struct CycleResult {
    int weight = 0;
    int start_face = -1;
    std::vector<int> moves;  // ids into crossing_graph(t).moves
};

// Least-cost closed walk of class c. The search runs over lift offsets in
// [-W, W]^2 with W = 2 + max(|c.x|, |c.y|) unless window > 0 is given.
CycleResult min_weight_cycle_in_class(const TorusMap& t, const CurveClass& c, int window = 0);

int c_rep_torus(const TorusMap& t);

// Offset of the (p,q) curve {q x - p y = c mod 1} away from the lattice points.
Rational curve_offset();

// The (p,q) curve, subdivided where it meets the cut curves, plus the cut curves
// as auxiliary edges through an auxiliary vertex at the origin.
TorusMap torus_embedding_of_torus_knot(int p, int q);

// Origin vertex with the two cut loops; nothing of G.
TorusMap empty_torus_map();

// Transverse crossings of each polyline with the (p,q) curve. Throws InvalidInput
// naming the segment when a segment runs along the curve or ends on it.
std::vector<int> overlay_weights(const std::vector<std::vector<Point>>& polylines, int p, int q);

}  // namespace knotwidth
