#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace knotwidth {

enum class VertexKind : std::uint8_t { crossing, true_vertex };

// Planar multigraph given by a rotation system.
// Edge e owns darts 2e (at edges[e][0]) and 2e+1 (at edges[e][1]).
// rotation[v] lists the darts at v in counterclockwise order.
struct PlaneGraph {
    std::vector<VertexKind> kind;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rotation;

    int num_vertices() const { return static_cast<int>(kind.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_darts() const { return 2 * num_edges(); }
};

// The shadow of a diagram is a plane graph with a crossing/true-vertex tag per vertex.
using Shadow = PlaneGraph;

inline int dart_edge(int d) { return d >> 1; }
inline int dart_twin(int d) { return d ^ 1; }
inline int dart_vertex(const PlaneGraph& g, int d) { return g.edges[d >> 1][d & 1]; }

// Rotation positions and the face structure of an embedded graph.
// A face walk goes d -> succ(twin(d)), where succ is the next dart counterclockwise.
// Corners are indexed by darts: corner c sits at dart_vertex(c) between c and succ(c),
// inside face_of[twin(c)].
struct Embedding {
    explicit Embedding(const PlaneGraph& g);

    int succ(int d) const { return succ_[d]; }
    int pred(int d) const { return pred_[d]; }
    int next_in_face(int d) const { return succ_[d ^ 1]; }
    int corner_face(int c) const { return face_of[c ^ 1]; }
    int num_faces() const { return static_cast<int>(faces.size()); }

    std::vector<std::vector<int>> faces;
    std::vector<int> face_of;

private:
    std::vector<int> succ_;
    std::vector<int> pred_;
};

// Every dart appears exactly once across the rotation lists, at its own vertex.
bool rotation_consistent(const PlaneGraph& g, std::string* why = nullptr);

bool is_connected(const PlaneGraph& g);

// Faces from tracing; an isolated vertex counts as one face.
int count_faces(const PlaneGraph& g);

// V - E + F summed over the whole graph.
int euler_characteristic(const PlaneGraph& g);

// Restriction to the given edge ids; vertices without a kept edge are dropped
// unless keep_isolated is set. vertex_map/edge_map give old ids of new elements.
PlaneGraph subgraph(const PlaneGraph& g, const std::vector<int>& edge_ids,
                    std::vector<int>* vertex_map = nullptr,
                    std::vector<int>* edge_map = nullptr);

// Invariant under relabeling of vertices/edges and under rotation of each
// vertex's dart list (orientation-preserving map isomorphism).
std::string canonical_code(const PlaneGraph& g);

// Builds a graph from an edge list and rotation lists given as incident edge
// indices per vertex; a loop must be listed twice at its vertex.
PlaneGraph make_plane_graph(int num_vertices,
                            const std::vector<std::array<int, 2>>& edges,
                            const std::vector<std::vector<int>>& rotation_by_edge);

}  // namespace knotwidth
