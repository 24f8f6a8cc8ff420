#include "noose_solver.hpp"

#include <algorithm>
#include <bit>

#include "knotwidth/errors.hpp"

namespace knotwidth::detail {

NooseSolver::NooseSolver(const PlaneGraph& g, int k)
    : g_(g), emb_(g), k_(k), words_((g.num_edges() + 63) / 64), num_nodes_(g.num_vertices() + emb_.num_faces()) {
    radial_.resize(num_nodes_);
    medial_.resize(g.num_edges());
    for (int c = 0; c < g.num_darts(); ++c) {
        const int v = dart_vertex(g, c);
        const int f = g.num_vertices() + emb_.corner_face(c);
        radial_[v].push_back({f, c});
        radial_[f].push_back({v, c});
        const int a = dart_edge(c), b = dart_edge(emb_.succ(c));
        medial_[a].push_back({b, c});
        if (a != b) medial_[b].push_back({a, c});
    }
    by_corner_.resize(g.num_darts());
    table_.assign(1024, -1);
}

std::uint64_t NooseSolver::hash(const Word* bits) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t x = bits[w] + h;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        h = x ^ (x >> 31);
    }
    return h;
}

int NooseSolver::lookup(const Word* bits) const {
    const std::size_t mask = table_.size() - 1;
    for (std::size_t i = hash(bits) & mask;; i = (i + 1) & mask) {
        int r = table_[i];
        if (r < 0) return -1;
        if (std::equal(bits, bits + words_, region(r))) return r;
    }
}

void NooseSolver::grow_table() {
    std::vector<int> old = std::move(table_);
    table_.assign(old.size() * 2, -1);
    const std::size_t mask = table_.size() - 1;
    for (int r : old) {
        if (r < 0) continue;
        std::size_t i = hash(region(r)) & mask;
        while (table_[i] >= 0) i = (i + 1) & mask;
        table_[i] = r;
    }
}

int NooseSolver::intern(const Word* bits, int noose, int side) {
    (void)side;
    if (int r = lookup(bits); r >= 0) return r;
    if (2 * (table_used_ + 1) > table_.size()) grow_table();
    const int r = static_cast<int>(region_noose_.size());
    bits_.insert(bits_.end(), bits, bits + words_);
    region_noose_.push_back(noose);
    state_.push_back(0);
    split_.push_back({-1, -1});
    const std::size_t mask = table_.size() - 1;
    std::size_t i = hash(bits) & mask;
    while (table_[i] >= 0) i = (i + 1) & mask;
    table_[i] = r;
    ++table_used_;
    return r;
}

void NooseSolver::add_noose(int start, const std::vector<int>& corners) {
    const int E = g_.num_edges();
    std::vector<char> cut(g_.num_darts(), 0);
    for (int c : corners) cut[c] = 1;
    std::vector<Word> x(words_, 0);
    std::vector<int> stack{dart_edge(corners[0])};
    x[stack[0] >> 6] |= Word{1} << (stack[0] & 63);
    int count = 1;
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        for (auto [f, c] : medial_[e]) {
            if (cut[c] || (x[f >> 6] >> (f & 63) & 1)) continue;
            x[f >> 6] |= Word{1} << (f & 63);
            ++count;
            stack.push_back(f);
        }
    }
    if (count == E) return;
    std::vector<Word> y(words_, 0);
    for (int e = 0; e < E; ++e)
        if (!(x[e >> 6] >> (e & 63) & 1)) y[e >> 6] |= Word{1} << (e & 63);

    const int j = static_cast<int>(noose_start_.size());
    noose_start_.push_back(static_cast<int>(noose_corner_.size()));
    noose_corner_.insert(noose_corner_.end(), corners.begin(), corners.end());
    noose_node_.push_back(start);
    noose_min_.push_back(*std::min_element(corners.begin(), corners.end()));
    const int rx = intern(x.data(), j, 0);
    const int ry = intern(y.data(), j, 1);
    noose_side_.push_back({rx, ry});
    for (int c : corners) by_corner_[c].push_back(j);
}

void NooseSolver::enumerate() {
    const int V = g_.num_vertices();
    std::vector<char> on_path(num_nodes_, 0);
    std::vector<int> path;
    // Cycles are listed once: from their lowest node, first corner below the last.
    auto dfs = [&](auto&& self, int s, int cur, int vcount) -> void {
        for (auto [nx, c] : radial_[cur]) {
            if (nx == s) {
                if (!path.empty() && c != path[0] && path[0] < c) {
                    path.push_back(c);
                    add_noose(s, path);
                    path.pop_back();
                }
                continue;
            }
            if (nx < s || on_path[nx]) continue;
            const int nv = vcount + (nx < V ? 1 : 0);
            if (nv > k_) continue;
            on_path[nx] = 1;
            path.push_back(c);
            self(self, s, nx, nv);
            path.pop_back();
            on_path[nx] = 0;
        }
    };
    for (int s = 0; s < V; ++s) {
        if (k_ < 1) break;
        on_path[s] = 1;
        dfs(dfs, s, s, 1);
        on_path[s] = 0;
    }
}

bool NooseSolver::good(int r) {
    if (state_[r]) return state_[r] == 2;
    int pop = 0;
    for (int w = 0; w < words_; ++w) pop += std::popcount(region(r)[w]);
    if (pop == 1) {
        state_[r] = 2;
        return true;
    }
    const int c0 = noose_min_[region_noose_[r]];
    std::vector<Word> rest(words_);
    for (int j : by_corner_[c0]) {
        for (int side = 0; side < 2; ++side) {
            const int s = noose_side_[j][side];
            if (s == r) continue;
            const Word* x = region(r);
            const Word* sb = region(s);
            bool subset = true;
            for (int w = 0; w < words_ && subset; ++w) subset = (sb[w] & ~x[w]) == 0;
            if (!subset) continue;
            for (int w = 0; w < words_; ++w) rest[w] = x[w] & ~sb[w];
            const int t = lookup(rest.data());
            if (t < 0) continue;
            if (good(s) && good(t)) {
                split_[r] = {s, t};
                state_[r] = 2;
                return true;
            }
        }
    }
    state_[r] = 1;
    return false;
}

bool NooseSolver::decide() {
    const int E = g_.num_edges();
    if (E <= 1) return k_ >= 0;
    enumerate();
    std::vector<Word> x(words_, 0);
    for (int e = 0; e < E; ++e) x[e >> 6] |= Word{1} << (e & 63);
    for (int e0 = 0; e0 < E; ++e0) {
        x[e0 >> 6] ^= Word{1} << (e0 & 63);
        const int r = lookup(x.data());
        x[e0 >> 6] ^= Word{1} << (e0 & 63);
        if (r < 0) continue;
        root_edge_ = e0;
        if (!good(r)) return false;
        root_region_ = r;
        return true;
    }
    return false;
}

Noose NooseSolver::make_noose(int j) const {
    const int begin = noose_start_[j];
    const int end = j + 1 < static_cast<int>(noose_start_.size()) ? noose_start_[j + 1]
                                                                   : static_cast<int>(noose_corner_.size());
    std::vector<int> cs(noose_corner_.begin() + begin, noose_corner_.begin() + end);
    const int m = static_cast<int>(cs.size());
    const int V = g_.num_vertices();
    std::vector<int> nodes(m);
    nodes[0] = noose_node_[j];
    for (int i = 0; i + 1 < m; ++i) {
        const int c = cs[i];
        const int v = dart_vertex(g_, c), f = V + emb_.corner_face(c);
        nodes[i + 1] = nodes[i] == v ? f : v;
    }
    Noose n;
    for (int i = 0; 2 * i + 1 < m; ++i) {
        n.faces.push_back(nodes[1 + 2 * i] - V);
        n.vertices.push_back(nodes[(2 + 2 * i) % m]);
        n.corners.push_back(cs[1 + 2 * i]);
        n.corners.push_back(cs[(2 + 2 * i) % m]);
    }
    return n;
}

BranchDecomposition NooseSolver::decomposition() const {
    BranchDecomposition bd;
    const int E = g_.num_edges();
    if (E == 0) return bd;
    if (E == 1) {
        bd.parent = {-1};
        bd.leaf_edge = {0};
        bd.noose = {std::nullopt};
        bd.root = 0;
        return bd;
    }
    if (root_region_ < 0) throw InternalError("decomposition requested before a successful decision");
    auto add_node = [&](int parent, int leaf, std::optional<Noose> n) {
        bd.parent.push_back(parent);
        bd.leaf_edge.push_back(leaf);
        bd.noose.push_back(std::move(n));
        return bd.num_nodes() - 1;
    };
    bd.root = add_node(-1, root_edge_, std::nullopt);
    auto build = [&](auto&& self, int r, int parent) -> void {
        const Word* x = region(r);
        int pop = 0, edge = -1;
        for (int w = 0; w < words_; ++w) {
            pop += std::popcount(x[w]);
            if (x[w] && edge < 0) edge = 64 * w + std::countr_zero(x[w]);
        }
        const int node = add_node(parent, pop == 1 ? edge : -1, make_noose(region_noose_[r]));
        if (pop == 1) return;
        self(self, split_[r][0], node);
        self(self, split_[r][1], node);
    };
    build(build, root_region_, bd.root);
    for (const auto& n : bd.noose)
        if (n) bd.width = std::max(bd.width, n->weight());
    return bd;
}

}  // namespace knotwidth::detail
