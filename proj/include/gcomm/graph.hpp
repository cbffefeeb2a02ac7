#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcomm {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;   // normalized u < v
using Arc = std::pair<Vertex, Vertex>;    // ordered, self-loops allowed
using EdgeSet = std::set<Edge>;
using ArcSet = std::set<Arc>;
using VertexSet = std::set<Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("edge: self-loop " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on vertices 0..n-1 with set-semantics edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n_vertices) : n_(n_vertices) {}

    std::size_t n_vertices() const { return n_; }
    std::size_t n_edges() const { return edges_.size(); }
    const EdgeSet& edges() const { return edges_; }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        edges_.insert(make_edge(u, v));
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (u == v || u >= n_ || v >= n_) return false;
        return edges_.count(make_edge(u, v)) > 0;
    }

    std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        for (const auto& e : edges_)
            if (e.first == v || e.second == v) ++d;
        return d;
    }

    /// Sorted adjacency lists.
    std::vector<std::vector<Vertex>> adjacency() const {
        std::vector<std::vector<Vertex>> adj(n_);
        for (const auto& [u, v] : edges_) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;  // neighbor lists come out sorted: edges_ is lex-ordered
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_vertex(Vertex v) const {
        if (v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
    }

    std::size_t n_ = 0;
    EdgeSet edges_;
};

/// Directed graph; self-loops permitted (the determinant construction needs them).
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(std::size_t n_vertices) : n_(n_vertices) {}

    std::size_t n_vertices() const { return n_; }
    std::size_t n_arcs() const { return arcs_.size(); }
    const ArcSet& arcs() const { return arcs_; }

    void add_arc(Vertex u, Vertex v) {
        if (u >= n_ || v >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        arcs_.insert({u, v});
    }

    bool has_arc(Vertex u, Vertex v) const { return arcs_.count({u, v}) > 0; }

    bool operator==(const DiGraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    std::size_t n_ = 0;
    ArcSet arcs_;
};

/// A graph's edges split between Alice (E_A) and Bob (E_B); the sets may
/// overlap unless disjointness is asserted at construction.
class EdgePartition {
public:
    EdgePartition() = default;
    EdgePartition(std::size_t n_vertices, EdgeSet edges_a, EdgeSet edges_b, bool assert_disjoint = false)
        : n_(n_vertices), a_(std::move(edges_a)), b_(std::move(edges_b)), disjoint_(assert_disjoint) {
        for (const auto& [u, v] : a_) check(u, v);
        for (const auto& [u, v] : b_) check(u, v);
        if (disjoint_) {
            for (const auto& e : a_)
                if (b_.count(e))
                    throw std::invalid_argument("EdgePartition: asserted disjoint but edge is shared");
        }
    }

    std::size_t n_vertices() const { return n_; }
    const EdgeSet& edges_a() const { return a_; }
    const EdgeSet& edges_b() const { return b_; }
    bool disjoint_flag() const { return disjoint_; }

    Graph union_graph() const {
        Graph g(n_);
        for (const auto& [u, v] : a_) g.add_edge(u, v);
        for (const auto& [u, v] : b_) g.add_edge(u, v);
        return g;
    }

private:
    void check(Vertex u, Vertex v) const {
        if (u >= n_ || v >= n_) throw std::invalid_argument("EdgePartition: endpoint out of range");
        if (u >= v) throw std::invalid_argument("EdgePartition: edge not normalized");
    }

    std::size_t n_ = 0;
    EdgeSet a_, b_;
    bool disjoint_ = false;
};

/// Arc sets of a directed graph split between Alice and Bob (DET instance).
class ArcPartition {
public:
    ArcPartition() = default;
    ArcPartition(std::size_t n_vertices, ArcSet arcs_a, ArcSet arcs_b)
        : n_(n_vertices), a_(std::move(arcs_a)), b_(std::move(arcs_b)) {
        for (const auto& [u, v] : a_) check(u, v);
        for (const auto& [u, v] : b_) check(u, v);
    }

    std::size_t n_vertices() const { return n_; }
    const ArcSet& arcs_a() const { return a_; }
    const ArcSet& arcs_b() const { return b_; }

    DiGraph union_digraph() const {
        DiGraph d(n_);
        for (const auto& [u, v] : a_) d.add_arc(u, v);
        for (const auto& [u, v] : b_) d.add_arc(u, v);
        return d;
    }

private:
    void check(Vertex u, Vertex v) const {
        if (u >= n_ || v >= n_) throw std::invalid_argument("ArcPartition: endpoint out of range");
    }

    std::size_t n_ = 0;
    ArcSet a_, b_;
};

/// Set of vertex-disjoint edges.
class Matching {
public:
    Matching() = default;
    explicit Matching(EdgeSet edges) : edges_(std::move(edges)) {
        VertexSet seen;
        for (const auto& [u, v] : edges_) {
            if (!seen.insert(u).second || !seen.insert(v).second)
                throw std::invalid_argument("Matching: edges share a vertex");
        }
    }

    std::size_t size() const { return edges_.size(); }
    const EdgeSet& edges() const { return edges_; }
    bool covers(Vertex v) const {
        for (const auto& [a, b] : edges_)
            if (a == v || b == v) return true;
        return false;
    }

private:
    EdgeSet edges_;
};

}  // namespace gcomm
