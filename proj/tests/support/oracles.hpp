#pragma once

// Test-side reference implementations. They share no code with the library
// beyond its data types.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotwidth/diagram.hpp"
#include "knotwidth/plane_graph.hpp"
#include "knotwidth/torus_map.hpp"

namespace knotwidth::testing {

// A planar map as a permutation pair: sigma rotates darts ccw around their vertex,
// dart d and d^1 form an edge.
struct DartMap {
    std::vector<int> sigma;

    int num_darts() const { return static_cast<int>(sigma.size()); }
};

// Every connected planar map with exactly n edges, one per orientation-preserving
// isomorphism class. n = 0 gives the single vertex.
std::vector<DartMap> planar_maps(int n);

// Canonical string of a map under relabeling and orientation-preserving isomorphism.
std::string map_code(const DartMap& m);

PlaneGraph to_plane_graph(const DartMap& m);

// Orbits of sigma, of sigma after twin, and V - E + F.
int count_vertices(const DartMap& m);
int count_faces(const DartMap& m);

// Face count by walking the plane graph's rotation lists directly.
int face_count_oracle(const PlaneGraph& g);

// Random non-crossing perfect matching on 2n circle points, as positions.
std::vector<std::array<int, 2>> random_matching(int n, std::mt19937_64& rng);

// Acyclic and connected, checked by union-find.
bool is_spanning_tree(int num_vertices, const std::vector<std::array<int, 2>>& edges);

// Crossings of a polyline with {q x - p y = offset mod 1}, counted by dense
// sampling in long double; segments must stay away from the curve at their ends.
int sampled_crossings(const std::vector<Point>& polyline, int p, int q, int samples_per_unit = 4096);

// Diagram shadows from seeded Reidemeister walks over a few small knots.
std::vector<Diagram> random_diagrams(int count, int max_crossings, std::uint64_t seed);

std::string fixture_path(const std::string& name);
std::vector<std::string> corpus_files();

}  // namespace knotwidth::testing
