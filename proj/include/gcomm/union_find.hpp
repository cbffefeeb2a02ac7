#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace gcomm {

/// Union-find with path halving; roots are canonicalized to the minimum
/// vertex of each set so component representatives are stable.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(std::size_t u, std::size_t v) {
        std::size_t ru = find(u), rv = find(v);
        if (ru == rv) return;
        // keep the smaller vertex as root
        if (rv < ru) std::swap(ru, rv);
        parent_[rv] = ru;
    }

    bool connected(std::size_t u, std::size_t v) { return find(u) == find(v); }

    std::size_t count_roots() {
        std::size_t c = 0;
        for (std::size_t v = 0; v < parent_.size(); ++v)
            if (find(v) == v) ++c;
        return c;
    }

    /// representative[v] = min vertex of v's set.
    std::vector<std::size_t> representatives() {
        std::vector<std::size_t> rep(parent_.size());
        for (std::size_t v = 0; v < parent_.size(); ++v) rep[v] = find(v);
        return rep;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace gcomm
