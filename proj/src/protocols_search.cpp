// spanning-forest and bipartite: distributed BFS protocols where each level
// is scanned first by Alice, then by Bob. Both parties replay every
// announcement, so the public state (discovered set / color map, frontier)
// stays mirrored.

#include "gcomm/bits.hpp"
#include "gcomm/protocols.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcomm {

namespace {

std::vector<std::vector<Vertex>> own_adjacency(const PartyView& view) {
    std::vector<std::vector<Vertex>> adj(view.n_vertices);
    for (const auto& [u, v] : view.own_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;  // sorted: own_edges is lex-ordered
}

/// Distributed BFS forest construction. Roots are implicit (both parties
/// seed the lowest undiscovered vertex); every other vertex is announced
/// exactly once as a (vertex, parent) record.
class SpanningForestParty final : public Party {
public:
    SpanningForestParty(const PartyView& view)
        : view_(view),
          width_(bit_width_for(view.n_vertices)),
          adj_(own_adjacency(view)),
          discovered_(view.n_vertices, false) {
        if (view.n_vertices < 2)
            throw std::invalid_argument("spanning-forest: need at least 2 vertices");
        seed_component();
    }

    std::optional<BitString> take_turn(const BitString* incoming) override {
        if (incoming) apply_scan(*incoming);
        if (done_) return std::nullopt;
        return build_scan();
    }

    ProtocolResult result() const override {
        std::vector<Edge> out(forest_.begin(), forest_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void seed_component() {
        for (Vertex v = 0; v < view_.n_vertices; ++v) {
            if (!discovered_[v]) {
                discovered_[v] = true;
                ++n_discovered_;
                frontier_ = {v};
                return;
            }
        }
        done_ = true;
    }

    void discover(Vertex v, Vertex parent) {
        discovered_[v] = true;
        ++n_discovered_;
        forest_.push_back(make_edge(parent, v));
        next_frontier_.push_back(v);
    }

    /// Both parties call this after each of the two scans of a level.
    void finish_scan() {
        scans_done_ = !scans_done_;
        if (n_discovered_ == view_.n_vertices) {
            done_ = true;
            return;
        }
        if (scans_done_) return;  // Alice scanned, Bob still to go
        frontier_ = std::move(next_frontier_);
        next_frontier_.clear();
        std::sort(frontier_.begin(), frontier_.end());
        if (frontier_.empty()) seed_component();
    }

    BitString build_scan() {
        BitString msg;
        for (Vertex f : frontier_) {
            for (Vertex nb : adj_[f]) {
                if (discovered_[nb]) continue;
                discover(nb, f);
                msg.push_bit(true);
                msg.push_uint(nb, width_);
                msg.push_uint(f, width_);
            }
        }
        msg.push_bit(false);
        finish_scan();
        return msg;
    }

    void apply_scan(const BitString& payload) {
        BitReader r(payload);
        while (r.read_bit()) {
            Vertex v = static_cast<Vertex>(r.read_uint(width_));
            Vertex parent = static_cast<Vertex>(r.read_uint(width_));
            if (v >= view_.n_vertices || parent >= view_.n_vertices || discovered_[v] || !discovered_[parent])
                throw std::runtime_error("protocol violation: bad discovery record");
            discover(v, parent);
        }
        r.expect_end();
        finish_scan();
    }

    PartyView view_;
    unsigned width_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<bool> discovered_;
    std::size_t n_discovered_ = 0;
    std::vector<Vertex> frontier_, next_frontier_;
    std::vector<Edge> forest_;
    bool scans_done_ = false;  // toggles Alice-scan / Bob-scan within a level
    bool done_ = false;
};

/// Alternating frontier 2-coloring. Message: zero or more
/// [1 | vertex | color] records, then [0 | done], then the answer bit when
/// done=1. A party that sees a same-color neighbor ends the run with false;
/// when the coloring completes, the next active party echoes true.
class BipartiteParty final : public Party {
public:
    BipartiteParty(const PartyView& view)
        : view_(view),
          width_(bit_width_for(view.n_vertices)),
          adj_(own_adjacency(view)),
          color_(view.n_vertices, -1) {
        if (view.n_vertices < 1)
            throw std::invalid_argument("bipartite: need at least 1 vertex");
        seed_component();
    }

    std::optional<BitString> take_turn(const BitString* incoming) override {
        if (incoming) apply_scan(*incoming);
        if (answer_) return std::nullopt;
        if (complete_) {  // all colored, both scans clean: echo true
            answer_ = true;
            BitString msg;
            msg.push_bit(false);
            msg.push_bit(true);
            msg.push_bit(true);
            return msg;
        }
        return build_scan();
    }

    ProtocolResult result() const override {
        if (!answer_) throw std::logic_error("bipartite: no answer recorded");
        return *answer_;
    }

private:
    void seed_component() {
        for (Vertex v = 0; v < view_.n_vertices; ++v) {
            if (color_[v] == -1) {
                color_[v] = 0;  // red
                frontier_ = {v};
                return;
            }
        }
        complete_ = true;
    }

    void paint(Vertex v, int c) {
        color_[v] = c;
        next_frontier_.push_back(v);
    }

    void finish_scan() {
        scans_done_ = !scans_done_;
        if (scans_done_) return;
        frontier_ = std::move(next_frontier_);
        next_frontier_.clear();
        std::sort(frontier_.begin(), frontier_.end());
        if (frontier_.empty()) seed_component();
    }

    BitString build_scan() {
        BitString msg;
        for (Vertex f : frontier_) {
            for (Vertex nb : adj_[f]) {
                if (color_[nb] == -1) {
                    const int c = 1 - color_[f];
                    paint(nb, c);
                    msg.push_bit(true);
                    msg.push_uint(nb, width_);
                    msg.push_bit(c == 1);
                } else if (color_[nb] == color_[f]) {
                    // conflict: both colors forced, the union has an odd cycle
                    answer_ = false;
                    msg.push_bit(false);
                    msg.push_bit(true);
                    msg.push_bit(false);
                    return msg;
                }
            }
        }
        msg.push_bit(false);
        msg.push_bit(false);
        finish_scan();
        return msg;
    }

    void apply_scan(const BitString& payload) {
        BitReader r(payload);
        while (r.read_bit()) {
            Vertex v = static_cast<Vertex>(r.read_uint(width_));
            const int c = r.read_bit() ? 1 : 0;
            if (v >= view_.n_vertices || color_[v] != -1)
                throw std::runtime_error("protocol violation: bad coloring record");
            paint(v, c);
        }
        if (r.read_bit()) {
            answer_ = r.read_bit();
            r.expect_end();
            return;
        }
        r.expect_end();
        finish_scan();
    }

    PartyView view_;
    unsigned width_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> color_;
    std::vector<Vertex> frontier_, next_frontier_;
    std::optional<bool> answer_;
    bool scans_done_ = false;
    bool complete_ = false;
};

}  // namespace

std::unique_ptr<Party> make_spanning_forest_party(const PartyView& view) {
    return std::make_unique<SpanningForestParty>(view);
}
std::unique_ptr<Party> make_bipartite_party(const PartyView& view) {
    return std::make_unique<BipartiteParty>(view);
}

}  // namespace gcomm
