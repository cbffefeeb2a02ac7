#include "gcomm/oracles.hpp"

#include "gcomm/union_find.hpp"

#include <algorithm>
#include <deque>

namespace gcomm {

std::vector<Vertex> component_representatives(const Graph& g) {
    UnionFind uf(g.n_vertices());
    for (const auto& [u, v] : g.edges()) uf.unite(u, v);
    std::vector<Vertex> rep(g.n_vertices());
    for (std::size_t v = 0; v < g.n_vertices(); ++v)
        rep[v] = static_cast<Vertex>(uf.find(v));
    return rep;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const auto rep = component_representatives(g);
    std::vector<std::vector<Vertex>> comps;
    std::vector<int> index_of(g.n_vertices(), -1);
    for (Vertex v = 0; v < g.n_vertices(); ++v) {
        Vertex r = rep[v];
        if (index_of[r] < 0) {
            index_of[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[index_of[r]].push_back(v);
    }
    // min-vertex representatives appear in ascending order by construction
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n_vertices() == 0) return false;
    return connected_components(g).size() == 1;
}

bool is_eulerian(const Graph& g) {
    if (g.n_edges() == 0) return false;
    std::vector<std::size_t> deg(g.n_vertices(), 0);
    UnionFind uf(g.n_vertices());
    for (const auto& [u, v] : g.edges()) {
        ++deg[u];
        ++deg[v];
        uf.unite(u, v);
    }
    for (std::size_t v = 0; v < g.n_vertices(); ++v)
        if (deg[v] % 2 != 0) return false;
    // all edges in one component: non-isolated vertices share a root
    std::size_t root = g.n_vertices();
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
        if (deg[v] == 0) continue;
        std::size_t r = uf.find(v);
        if (root == g.n_vertices()) root = r;
        else if (r != root) return false;
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    const auto adj = g.adjacency();
    std::vector<int> color(g.n_vertices(), -1);
    for (Vertex s = 0; s < g.n_vertices(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_triangle(const Graph& g) {
    const auto adj = g.adjacency();
    for (const auto& [u, v] : g.edges()) {
        // common neighbor scan over the smaller list
        const auto& au = adj[u];
        const auto& av = adj[v];
        std::size_t i = 0, j = 0;
        while (i < au.size() && j < av.size()) {
            if (au[i] == av[j]) return true;
            if (au[i] < av[j]) ++i;
            else ++j;
        }
    }
    return false;
}

}  // namespace gcomm
