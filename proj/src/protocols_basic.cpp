// connectivity, euler-trivial and triangle: the protocols whose transcripts
// are one or two fixed-width exchanges.

#include "gcomm/bits.hpp"
#include "gcomm/oracles.hpp"
#include "gcomm/protocols.hpp"
#include "gcomm/union_find.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcomm {

namespace {

Graph own_graph(const PartyView& view) {
    Graph g(view.n_vertices);
    for (const auto& [u, v] : view.own_edges) g.add_edge(u, v);
    return g;
}

const BitString& require_incoming(const BitString* incoming) {
    if (!incoming) throw std::runtime_error("protocol violation: expected a message");
    return *incoming;
}

/// Alice announces the min-vertex representative of every vertex's
/// E_A-component (n fields of ceil(log2 n) bits); Bob merges with his own
/// components and echoes the 1-bit answer.
class ConnectivityParty final : public Party {
public:
    ConnectivityParty(const PartyView& view)
        : view_(view), width_(bit_width_for(view.n_vertices)) {
        if (view.n_vertices < 2)
            throw std::invalid_argument("connectivity: need at least 2 vertices");
    }

    std::optional<BitString> take_turn(const BitString* incoming) override {
        if (view_.role == Role::alice) {
            if (stage_++ == 0) {
                UnionFind uf(view_.n_vertices);
                for (const auto& [u, v] : view_.own_edges) uf.unite(u, v);
                BitString msg;
                for (std::size_t v = 0; v < view_.n_vertices; ++v)
                    msg.push_uint(uf.find(v), width_);
                return msg;
            }
            BitReader r(require_incoming(incoming));
            answer_ = r.read_bit();
            r.expect_end();
            return std::nullopt;
        }
        if (stage_++ == 0) {
            BitReader r(require_incoming(incoming));
            UnionFind uf(view_.n_vertices);
            for (const auto& [u, v] : view_.own_edges) uf.unite(u, v);
            for (std::size_t v = 0; v < view_.n_vertices; ++v)
                uf.unite(v, r.read_uint(width_));
            r.expect_end();
            answer_ = uf.count_roots() == 1;
            BitString msg;
            msg.push_bit(answer_);
            return msg;
        }
        return std::nullopt;
    }

    ProtocolResult result() const override { return answer_; }

private:
    PartyView view_;
    unsigned width_;
    int stage_ = 0;
    bool answer_ = false;
};

/// Alice ships her whole upper-triangular adjacency bitmap (n(n-1)/2 bits);
/// Bob forms the union and echoes is_eulerian.
class EulerTrivialParty final : public Party {
public:
    EulerTrivialParty(const PartyView& view) : view_(view) {
        if (view.n_vertices < 2)
            throw std::invalid_argument("euler-trivial: need at least 2 vertices");
    }

    std::optional<BitString> take_turn(const BitString* incoming) override {
        const std::size_t n = view_.n_vertices;
        if (view_.role == Role::alice) {
            if (stage_++ == 0) {
                BitString msg;
                for (Vertex u = 0; u + 1 < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v)
                        msg.push_bit(view_.own_edges.count({u, v}) > 0);
                return msg;
            }
            BitReader r(require_incoming(incoming));
            answer_ = r.read_bit();
            r.expect_end();
            return std::nullopt;
        }
        if (stage_++ == 0) {
            BitReader r(require_incoming(incoming));
            Graph g = own_graph(view_);
            for (Vertex u = 0; u + 1 < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (r.read_bit()) g.add_edge(u, v);
            r.expect_end();
            answer_ = is_eulerian(g);
            BitString msg;
            msg.push_bit(answer_);
            return msg;
        }
        return std::nullopt;
    }

    ProtocolResult result() const override { return answer_; }

private:
    PartyView view_;
    int stage_ = 0;
    bool answer_ = false;
};

/// Each party first checks its own edges for a triangle (1-bit announce).
/// Failing that, Alice sends the bitmap of pairs a common E_A-neighbor would
/// complete; Bob intersects with E_B, then answers or ships his own bitmap.
class TriangleParty final : public Party {
public:
    TriangleParty(const PartyView& view) : view_(view) {
        if (view.n_vertices < 3)
            throw std::invalid_argument("triangle: need at least 3 vertices");
    }

    std::optional<BitString> take_turn(const BitString* incoming) override {
        if (view_.role == Role::alice) return alice_turn(incoming);
        return bob_turn(incoming);
    }

    ProtocolResult result() const override { return answer_; }

private:
    // pairs {a,b} with a common own-edge neighbor, as an upper-tri bitmap
    std::vector<bool> completion_pairs() const {
        const std::size_t n = view_.n_vertices;
        std::vector<std::vector<Vertex>> adj(n);
        for (const auto& [u, v] : view_.own_edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<bool> s(n * n, false);
        for (Vertex c = 0; c < n; ++c)
            for (std::size_t i = 0; i < adj[c].size(); ++i)
                for (std::size_t j = i + 1; j < adj[c].size(); ++j) {
                    Vertex a = std::min(adj[c][i], adj[c][j]);
                    Vertex b = std::max(adj[c][i], adj[c][j]);
                    s[a * n + b] = true;
                }
        return s;
    }

    BitString bitmap_message(const std::vector<bool>& s, bool lead_bit, bool with_lead) const {
        const std::size_t n = view_.n_vertices;
        BitString msg;
        if (with_lead) msg.push_bit(lead_bit);
        for (Vertex u = 0; u + 1 < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                msg.push_bit(s[u * n + v]);
        return msg;
    }

    bool intersects_own(BitReader& r) const {
        const std::size_t n = view_.n_vertices;
        bool hit = false;
        for (Vertex u = 0; u + 1 < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (r.read_bit() && view_.own_edges.count({u, v})) hit = true;
        return hit;
    }

    std::optional<BitString> alice_turn(const BitString* incoming) {
        switch (stage_) {
            case 0: {
                stage_ = 1;
                const bool found = has_triangle(own_graph(view_));
                if (found) {
                    answer_ = true;
                    stage_ = 9;
                }
                BitString msg;
                msg.push_bit(found);
                return msg;
            }
            case 1: {
                BitReader r(require_incoming(incoming));
                const bool bob_found = r.read_bit();
                r.expect_end();
                if (bob_found) {
                    answer_ = true;
                    return std::nullopt;
                }
                stage_ = 2;
                return bitmap_message(completion_pairs(), false, false);
            }
            case 2: {
                BitReader r(require_incoming(incoming));
                const bool hit_a = r.read_bit();
                if (hit_a) {
                    r.expect_end();
                    answer_ = true;
                    return std::nullopt;
                }
                const bool hit_b = intersects_own(r);
                r.expect_end();
                answer_ = hit_b;
                stage_ = 9;
                BitString msg;
                msg.push_bit(hit_b);
                return msg;
            }
            default:
                return std::nullopt;
        }
    }

    std::optional<BitString> bob_turn(const BitString* incoming) {
        switch (stage_) {
            case 0: {
                BitReader r(require_incoming(incoming));
                const bool alice_found = r.read_bit();
                r.expect_end();
                if (alice_found) {
                    answer_ = true;
                    return std::nullopt;
                }
                stage_ = 1;
                const bool found = has_triangle(own_graph(view_));
                if (found) {
                    answer_ = true;
                    stage_ = 9;
                }
                BitString msg;
                msg.push_bit(found);
                return msg;
            }
            case 1: {
                BitReader r(require_incoming(incoming));
                const bool hit_a = intersects_own(r);
                r.expect_end();
                if (hit_a) {
                    answer_ = true;
                    stage_ = 9;
                    BitString msg;
                    msg.push_bit(true);
                    return msg;
                }
                stage_ = 2;
                return bitmap_message(completion_pairs(), false, true);
            }
            case 2: {
                BitReader r(require_incoming(incoming));
                answer_ = r.read_bit();
                r.expect_end();
                return std::nullopt;
            }
            default:
                return std::nullopt;
        }
    }

    PartyView view_;
    int stage_ = 0;
    bool answer_ = false;
};

}  // namespace

std::unique_ptr<Party> make_connectivity_party(const PartyView& view) {
    return std::make_unique<ConnectivityParty>(view);
}
std::unique_ptr<Party> make_euler_trivial_party(const PartyView& view) {
    return std::make_unique<EulerTrivialParty>(view);
}
std::unique_ptr<Party> make_triangle_party(const PartyView& view) {
    return std::make_unique<TriangleParty>(view);
}

}  // namespace gcomm
