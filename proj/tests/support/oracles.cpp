#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "knotwidth/codecs.hpp"
#include "knotwidth/json_io.hpp"
#include "knotwidth/reidemeister.hpp"

#ifndef KNOTW_TEST_FIXTURES
#define KNOTW_TEST_FIXTURES "fixtures"
#endif

namespace knotwidth::testing {

namespace {

std::vector<int> orbit_ids(const std::vector<int>& perm, int* count) {
    std::vector<int> id(perm.size(), -1);
    int n = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (id[s] >= 0) continue;
        for (int d = static_cast<int>(s); id[d] < 0; d = perm[d]) id[d] = n;
        ++n;
    }
    if (count) *count = n;
    return id;
}

std::vector<int> face_perm(const DartMap& m) {
    std::vector<int> phi(m.sigma.size());
    for (int d = 0; d < m.num_darts(); ++d) phi[d] = m.sigma[d ^ 1];
    return phi;
}

std::string code_from(const DartMap& m, int root) {
    const int n = m.num_darts();
    std::vector<int> label(n, -1), order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int next : {m.sigma[order[i]], order[i] ^ 1}) {
            if (label[next] < 0) {
                label[next] = static_cast<int>(order.size());
                order.push_back(next);
            }
        }
    }
    std::string s;
    for (int d : order) {
        s += std::to_string(label[m.sigma[d]]);
        s += ',';
        s += std::to_string(label[d ^ 1]);
        s += ';';
    }
    return s;
}

void add_map(std::map<std::string, DartMap>& seen, DartMap m) {
    auto code = map_code(m);
    seen.emplace(std::move(code), std::move(m));
}

}  // namespace

std::string map_code(const DartMap& m) {
    if (m.sigma.empty()) return "point";
    std::string best;
    for (int r = 0; r < m.num_darts(); ++r) {
        std::string c = code_from(m, r);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

int count_vertices(const DartMap& m) {
    if (m.sigma.empty()) return 1;
    int n = 0;
    orbit_ids(m.sigma, &n);
    return n;
}

int count_faces(const DartMap& m) {
    if (m.sigma.empty()) return 1;
    int n = 0;
    orbit_ids(face_perm(m), &n);
    return n;
}

std::vector<DartMap> planar_maps(int n) {
    if (n == 0) return {DartMap{}};
    std::map<std::string, DartMap> level;
    add_map(level, DartMap{{1, 0}});  // loop
    add_map(level, DartMap{{0, 1}});  // bridge
    for (int e = 1; e < n; ++e) {
        std::map<std::string, DartMap> grown;
        for (const auto& [code, m] : level) {
            const int a = 2 * e, b = 2 * e + 1;
            const auto face = orbit_ids(face_perm(m), nullptr);
            for (int c = 0; c < m.num_darts(); ++c) {
                // pendant edge in corner c
                DartMap p = m;
                p.sigma.resize(2 * e + 2);
                p.sigma[a] = m.sigma[c];
                p.sigma[c] = a;
                p.sigma[b] = b;
                add_map(grown, std::move(p));
                // edge between corners c and c2 of one face; c2 == c is a loop
                for (int c2 = 0; c2 < m.num_darts(); ++c2) {
                    if (face[c ^ 1] != face[c2 ^ 1]) continue;
                    DartMap q = m;
                    q.sigma.resize(2 * e + 2);
                    if (c2 == c) {
                        q.sigma[c] = a;
                        q.sigma[a] = b;
                        q.sigma[b] = m.sigma[c];
                    } else {
                        q.sigma[a] = m.sigma[c];
                        q.sigma[c] = a;
                        q.sigma[b] = m.sigma[c2];
                        q.sigma[c2] = b;
                    }
                    add_map(grown, std::move(q));
                }
            }
        }
        level = std::move(grown);
    }
    std::vector<DartMap> out;
    out.reserve(level.size());
    for (auto& [code, m] : level) out.push_back(std::move(m));
    return out;
}

PlaneGraph to_plane_graph(const DartMap& m) {
    PlaneGraph g;
    if (m.sigma.empty()) {
        g.kind.push_back(VertexKind::true_vertex);
        g.rotation.emplace_back();
        return g;
    }
    int nv = 0;
    const auto vid = orbit_ids(m.sigma, &nv);
    g.kind.assign(nv, VertexKind::true_vertex);
    g.rotation.assign(nv, {});
    for (int e = 0; e < m.num_darts() / 2; ++e) g.edges.push_back({vid[2 * e], vid[2 * e + 1]});
    std::vector<char> done(nv, 0);
    for (int d = 0; d < m.num_darts(); ++d) {
        if (done[vid[d]]) continue;
        done[vid[d]] = 1;
        int x = d;
        do {
            g.rotation[vid[d]].push_back(x);
            x = m.sigma[x];
        } while (x != d);
    }
    return g;
}

int face_count_oracle(const PlaneGraph& g) {
    if (g.edges.empty()) return g.num_vertices();
    std::vector<int> next(2 * g.edges.size());
    for (const auto& rot : g.rotation)
        for (std::size_t i = 0; i < rot.size(); ++i) next[rot[i]] = rot[(i + 1) % rot.size()];
    std::vector<int> phi(next.size());
    for (std::size_t d = 0; d < next.size(); ++d) phi[d] = next[d ^ 1];
    int n = 0;
    orbit_ids(phi, &n);
    int isolated = 0;
    for (const auto& rot : g.rotation) isolated += rot.empty();
    return n + isolated;
}

std::vector<std::array<int, 2>> random_matching(int n, std::mt19937_64& rng) {
    // random balanced bracket word, matched by a stack
    std::vector<int> word;
    int open = 0, left = n;
    while (left > 0 || open > 0) {
        const bool can_open = left > 0, can_close = open > 0;
        bool do_open = can_open && (!can_close || std::uniform_int_distribution<int>(0, 1)(rng) == 0);
        word.push_back(do_open ? 1 : -1);
        if (do_open) {
            ++open;
            --left;
        } else {
            --open;
        }
    }
    const int shift = std::uniform_int_distribution<int>(0, 2 * n - 1)(rng);
    std::vector<std::array<int, 2>> out;
    std::vector<int> stack;
    for (int i = 0; i < 2 * n; ++i) {
        if (word[i] > 0) {
            stack.push_back(i);
        } else {
            int a = (stack.back() + shift) % (2 * n), b = (i + shift) % (2 * n);
            stack.pop_back();
            out.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

bool is_spanning_tree(int num_vertices, const std::vector<std::array<int, 2>>& edges) {
    if (static_cast<int>(edges.size()) != num_vertices - 1) return false;
    std::vector<int> up(num_vertices);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        up[ra] = rb;
    }
    return true;
}

int sampled_crossings(const std::vector<Point>& polyline, int p, int q, int samples_per_unit) {
    auto ld = [](const Rational& r) {
        return static_cast<long double>(r.numerator()) / static_cast<long double>(r.denominator());
    };
    const long double off = ld(curve_offset());
    auto level = [&](long double x, long double y) { return q * x - p * y - off; };
    int total = 0;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        const long double x0 = ld(polyline[i].x), y0 = ld(polyline[i].y);
        const long double x1 = ld(polyline[i + 1].x), y1 = ld(polyline[i + 1].y);
        const long double len = std::hypot(x1 - x0, y1 - y0);
        const int steps = std::max(16, static_cast<int>(len * samples_per_unit * (p + q)));
        long double prev = std::floor(level(x0, y0));
        for (int s = 1; s <= steps; ++s) {
            const long double t = static_cast<long double>(s) / steps;
            const long double cur = std::floor(level(x0 + t * (x1 - x0), y0 + t * (y1 - y0)));
            total += static_cast<int>(std::fabs(cur - prev));
            prev = cur;
        }
    }
    return total;
}

std::vector<Diagram> random_diagrams(int count, int max_crossings, std::uint64_t seed) {
    const std::vector<Diagram> bases = {
        parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"),
        parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"),
        torus_knot_diagram(2, 5),
        torus_knot_diagram(3, 4),
    };
    std::mt19937_64 rng(seed);
    std::vector<Diagram> out;
    for (int i = 0; i < count; ++i) {
        const Diagram& base = bases[i % bases.size()];
        const int len = std::uniform_int_distribution<int>(1, 30)(rng);
        out.push_back(random_walk(base, len, rng(), max_crossings));
    }
    return out;
}

std::string fixture_path(const std::string& name) {
    return (std::filesystem::path(KNOTW_TEST_FIXTURES) / name).string();
}

std::vector<std::string> corpus_files() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(fixture_path("corpus")))
        out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace knotwidth::testing
