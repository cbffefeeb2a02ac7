#include "gcomm/matching.hpp"

#include "gcomm/modp.hpp"
#include "gcomm/rng.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gcomm {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

struct Sides {
    std::vector<Vertex> left, right;
    std::vector<int> side_of;  // 0 = left, 1 = right
    std::vector<int> index_of; // position within its side list
};

Sides split_sides(const Graph& g, const VertexSet& left_set) {
    Sides s;
    s.side_of.assign(g.n_vertices(), 1);
    s.index_of.assign(g.n_vertices(), -1);
    for (Vertex v : left_set) {
        if (v >= g.n_vertices()) throw std::invalid_argument("left_set vertex out of range");
        s.side_of[v] = 0;
    }
    for (Vertex v = 0; v < g.n_vertices(); ++v) {
        if (s.side_of[v] == 0) {
            s.index_of[v] = static_cast<int>(s.left.size());
            s.left.push_back(v);
        } else {
            s.index_of[v] = static_cast<int>(s.right.size());
            s.right.push_back(v);
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (s.side_of[u] == s.side_of[v])
            throw std::invalid_argument("edge has both endpoints on one side of the declared bipartition");
    }
    return s;
}

}  // namespace

HopcroftKarpResult hopcroft_karp(const Graph& g, const VertexSet& left_set) {
    const Sides sides = split_sides(g, left_set);
    const std::size_t nl = sides.left.size();
    const std::size_t nr = sides.right.size();

    std::vector<std::vector<std::size_t>> adj(nl);  // left index -> right indices
    for (const auto& [u, v] : g.edges()) {
        Vertex l = sides.side_of[u] == 0 ? u : v;
        Vertex r = sides.side_of[u] == 0 ? v : u;
        adj[sides.index_of[l]].push_back(sides.index_of[r]);
    }
    for (auto& lst : adj) std::sort(lst.begin(), lst.end());

    std::vector<std::size_t> match_l(nl, kInf), match_r(nr, kInf), dist(nl, kInf);
    std::size_t phases = 0;

    auto bfs = [&]() -> bool {
        std::deque<std::size_t> queue;
        for (std::size_t u = 0; u < nl; ++u) {
            if (match_l[u] == kInf) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool reached_free = false;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t w : adj[u]) {
                std::size_t next = match_r[w];
                if (next == kInf) {
                    reached_free = true;  // free right vertex at the next layer
                } else if (dist[next] == kInf) {
                    dist[next] = dist[u] + 1;
                    queue.push_back(next);
                }
            }
        }
        return reached_free;
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t u) -> bool {
        for (std::size_t w : adj[u]) {
            std::size_t next = match_r[w];
            if (next == kInf || (dist[next] == dist[u] + 1 && dfs(next))) {
                match_l[u] = w;
                match_r[w] = u;
                return true;
            }
        }
        dist[u] = kInf;  // dead for this phase
        return false;
    };

    for (;;) {
        ++phases;
        if (!bfs()) break;
        for (std::size_t u = 0; u < nl; ++u)
            if (match_l[u] == kInf) dfs(u);
    }

    EdgeSet out;
    for (std::size_t u = 0; u < nl; ++u)
        if (match_l[u] != kInf)
            out.insert(make_edge(sides.left[u], sides.right[match_l[u]]));
    return {Matching(std::move(out)), phases};
}

Matching hopcroft_karp_max_matching(const Graph& g, const VertexSet& left_set) {
    return hopcroft_karp(g, left_set).matching;
}

namespace {

bool pm_search(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    if (alive == 0) return true;
    // branch on a minimum-degree alive vertex
    int best = -1;
    int best_deg = 65;
    for (std::uint64_t rest = alive; rest;) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        int d = __builtin_popcountll(adj[v] & alive);
        if (d < best_deg) {
            best_deg = d;
            best = v;
            if (d <= 1) break;
        }
    }
    if (best_deg == 0) return false;
    std::uint64_t nbrs = adj[best] & alive;
    while (nbrs) {
        int u = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        if (pm_search(adj, alive & ~(1ULL << best) & ~(1ULL << u))) return true;
    }
    return false;
}

}  // namespace

bool has_perfect_matching_exact(const Graph& g) {
    const std::size_t n = g.n_vertices();
    if (n % 2 != 0) return false;
    if (n > 64) throw std::invalid_argument("has_perfect_matching_exact: more than 64 vertices");
    if (n == 0) return true;
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    std::uint64_t alive = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    return pm_search(adj, alive);
}

namespace {

/// Determinant over F_p by Gaussian elimination; matrix is consumed.
std::uint64_t det_mod_p(std::vector<std::vector<std::uint64_t>>& m) {
    const std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = mod_sub(0, det);
        }
        det = mod_mul(det, m[col][col]);
        const std::uint64_t inv = mod_inv(m[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const std::uint64_t factor = mod_mul(m[row][col], inv);
            for (std::size_t j = col; j < n; ++j)
                m[row][j] = mod_sub(m[row][j], mod_mul(factor, m[col][j]));
        }
    }
    return det;
}

}  // namespace

bool lovasz_pm_test(const Graph& g, const VertexSet& left_set,
                    std::size_t trials, std::uint64_t seed) {
    const Sides sides = split_sides(g, left_set);
    const std::size_t nl = sides.left.size();
    if (nl != sides.right.size()) return false;  // sides differ, no PM
    if (nl == 0) return true;

    std::vector<std::vector<bool>> present(nl, std::vector<bool>(nl, false));
    for (const auto& [u, v] : g.edges()) {
        Vertex l = sides.side_of[u] == 0 ? u : v;
        Vertex r = sides.side_of[u] == 0 ? v : u;
        present[sides.index_of[l]][sides.index_of[r]] = true;
    }

    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        std::vector<std::vector<std::uint64_t>> m(nl, std::vector<std::uint64_t>(nl, 0));
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nl; ++j)
                if (present[i][j]) m[i][j] = rng.next_below(kFieldPrime);
        if (det_mod_p(m) != 0) return true;
    }
    return false;
}

}  // namespace gcomm
