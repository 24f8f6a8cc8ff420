#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotwidth/diagram.hpp"

namespace knotwidth {

enum class Move : std::uint8_t { r1_add, r1_remove, r2_add, r2_remove, r3 };

std::string to_string(Move m);
Move move_from_string(const std::string& s);
int crossing_delta(Move m);

// Location descriptor. Fields used per move:
//   r1_add:    arc, side (which face receives the kink), over (0/1)
//   r1_remove: node, slot (the kink occupies slots slot and slot+1)
//   r2_add:    dart_a, dart_b (face darts of two distinct arcs bordering one face), over
//              (0: the strand of dart_a goes over)
//   r2_remove: node, slot (a dart of the bigon face)
//   r3:        node, slot (a dart of the triangle face)
// Face darts are slot references; a face is traced d -> partner(d) -> next slot ccw.
struct Site {
    Move move = Move::r1_add;
    int arc = -1;
    int side = 0;
    int over = 0;
    SlotRef dart_a;
    SlotRef dart_b;
    int node = -1;
    int slot = -1;

    friend bool operator==(const Site&, const Site&) = default;
};

std::string describe(const Site& s);

// All legal sites of one move, ordered by (node, slot) of the defining dart,
// then by the remaining fields.
std::vector<Site> enumerate_sites(const Diagram& d, Move move);

// Applies one move; throws InvalidInput naming the unmet pattern on an illegal site.
Diagram reidemeister(const Diagram& d, const Site& site);

struct WalkLog {
    std::vector<Site> applied;
    std::vector<std::string> messages;
};

// n_moves steps; each step picks a move type uniformly among those with a legal
// site that keeps the crossing count within max_crossings, then a site uniformly.
Diagram random_walk(const Diagram& d, int n_moves, std::uint64_t seed, int max_crossings,
                    WalkLog* log = nullptr);

}  // namespace knotwidth
