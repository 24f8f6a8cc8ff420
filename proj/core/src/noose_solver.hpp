#pragma once

#include <cstdint>
#include <vector>

#include "knotwidth/branchwidth.hpp"
#include "knotwidth/plane_graph.hpp"

namespace knotwidth::detail {

// Bond-carving program over nooses of weight <= k.
// Regions are edge sets cut out by a noose; a region X is good when it is a
// single edge or splits into two good regions along a noose through the
// lowest corner of X's own noose. The graph has branchwidth <= k exactly when
// the complement of some single edge is a good region.
class NooseSolver {
public:
    NooseSolver(const PlaneGraph& g, int k);

    bool decide();
    // Valid after decide() returned true.
    BranchDecomposition decomposition() const;
    std::size_t num_nooses() const { return noose_start_.size(); }

private:
    using Word = std::uint64_t;

    void enumerate();
    void add_noose(int start, const std::vector<int>& corners);
    int intern(const Word* bits, int noose, int side);
    int lookup(const Word* bits) const;
    const Word* region(int r) const { return &bits_[static_cast<std::size_t>(r) * words_]; }
    bool good(int r);
    Noose make_noose(int j) const;
    std::uint64_t hash(const Word* bits) const;
    void grow_table();

    const PlaneGraph& g_;
    Embedding emb_;
    int k_;
    int words_;
    int num_nodes_;

    std::vector<std::vector<std::pair<int, int>>> radial_;  // node -> (node, corner)
    std::vector<std::vector<std::pair<int, int>>> medial_;  // edge -> (edge, corner)

    std::vector<int> noose_corner_;  // flat corner lists
    std::vector<int> noose_start_;   // offset into noose_corner_
    std::vector<int> noose_node_;    // radial start node
    std::vector<int> noose_min_;     // lowest corner id
    std::vector<std::array<int, 2>> noose_side_;
    std::vector<std::vector<int>> by_corner_;

    std::vector<Word> bits_;
    std::vector<int> region_noose_;
    std::vector<std::int8_t> state_;
    std::vector<std::array<int, 2>> split_;
    std::vector<int> table_;
    std::size_t table_used_ = 0;

    int root_region_ = -1;
    int root_edge_ = -1;
};

}  // namespace knotwidth::detail
