// Distributed Hopcroft-Karp. The matching state is mirrored: every
// discovery and every DFS move is on the wire (or forced, and therefore
// free), so both parties replay one shared state machine and only the edge
// scans consult private input.
//
// Per phase:
//   (a) BFS from the free X vertices. Unmatched steps X->Y are distributed:
//       Alice lists the Y successors she sees for the level, then Bob lists
//       the rest; records are [1 | vertex]. Matched steps Y->X are computed
//       locally at zero bits. The sweep stops at the first Y layer holding
//       free vertices, which become the DFS roots F.
//   (b) Layer-guided DFS from F. A turn's message is a batch of ops, each
//       [1 | opcode:2 | arg]: FORWARD carries a vertex id and auto-extends
//       over the forced matched edge; BACKTRACK (legal only as the first op,
//       once both parties are stuck on the same top) kills the top pair and
//       pops; NEXT_ROOT banks a completed augmenting path; END_PHASE closes
//       the sweep once the roots are exhausted. A party batch-moves until it
//       is stuck, ends its message, and the other side continues.
//   (c) Both parties apply the banked paths to M. A phase whose BFS reaches
//       no new Y layer ends the protocol; |M| is then common knowledge.

#include "gcomm/bits.hpp"
#include "gcomm/protocols.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcomm {

namespace {

constexpr std::uint64_t kOpForward = 0;
constexpr std::uint64_t kOpBacktrack = 1;
constexpr std::uint64_t kOpNextRoot = 2;
constexpr std::uint64_t kOpEndPhase = 3;

[[noreturn]] void violation(const char* what) {
    throw std::runtime_error(std::string("protocol violation: ") + what);
}

class MatchingHkParty final : public Party, public StatsSource {
public:
    MatchingHkParty(const PartyView& view, const ProtocolParams& params)
        : view_(view),
          width_(bit_width_for(view.n_vertices)),
          side_(view.n_vertices, 1),
          adj_(view.n_vertices),
          match_(view.n_vertices, -1),
          layer_(view.n_vertices, -1),
          dead_(view.n_vertices, false) {
        for (Vertex v : params.left_set) {
            if (v >= view.n_vertices)
                throw std::invalid_argument("matching-hk: left_set vertex out of range");
            side_[v] = 0;
        }
        for (const auto& [u, v] : view.own_edges) {
            if (side_[u] == side_[v])
                throw std::invalid_argument("matching-hk: edge has both endpoints on one side");
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        start_phase();
    }

    std::optional<BitString> take_turn(const BitString* incoming) override {
        if (incoming) apply_message(other(view_.role), *incoming);
        if (stage_ == Stage::done) return std::nullopt;
        return build_message();
    }

    ProtocolResult result() const override { return out_size_; }

    RunStats stats() const override { return stats_; }

private:
    enum class Stage { bfs_alice, bfs_bob, dfs, done };

    // ---- phase lifecycle ----------------------------------------------

    void start_phase() {
        ++stats_.phases;
        stats_.announced_per_phase.emplace_back();
        std::fill(layer_.begin(), layer_.end(), -1);
        std::fill(dead_.begin(), dead_.end(), false);
        paths_.clear();
        stack_.clear();
        roots_.clear();
        root_idx_ = 0;
        stuck_top_.reset();
        y_layer_.clear();
        x_layer_.clear();
        for (Vertex v = 0; v < view_.n_vertices; ++v)
            if (side_[v] == 0 && match_[v] < 0) {
                layer_[v] = 0;
                x_layer_.push_back(v);
            }
        y_layer_index_ = 1;
        if (x_layer_.empty()) finish_protocol();
        else stage_ = Stage::bfs_alice;
    }

    void finish_protocol() {
        std::uint64_t covered = 0;
        for (int m : match_)
            if (m >= 0) ++covered;
        out_size_ = covered / 2;
        stage_ = Stage::done;
    }

    // ---- shared-state transitions (identical on both sides) -----------

    void apply_y_record(Vertex y) {
        if (y >= view_.n_vertices || side_[y] != 1 || layer_[y] != -1)
            violation("bad BFS discovery record");
        layer_[y] = y_layer_index_;
        y_layer_.push_back(y);
    }

    void after_y_layer_complete() {
        if (y_layer_.empty()) {
            finish_protocol();
            return;
        }
        std::vector<Vertex> free_y;
        for (Vertex y : y_layer_)
            if (match_[y] < 0) free_y.push_back(y);
        if (!free_y.empty()) {
            std::sort(free_y.begin(), free_y.end());
            roots_ = std::move(free_y);
            root_idx_ = 0;
            stage_ = Stage::dfs;
            normalize_stack();
            return;
        }
        x_layer_.clear();
        for (Vertex y : y_layer_) {
            Vertex x = static_cast<Vertex>(match_[y]);
            if (layer_[x] != -1) violation("matched partner already layered");
            layer_[x] = y_layer_index_ + 1;
            x_layer_.push_back(x);
        }
        std::sort(x_layer_.begin(), x_layer_.end());
        y_layer_.clear();
        y_layer_index_ += 2;
        stage_ = Stage::bfs_alice;
    }

    void normalize_stack() {
        while (stack_.empty() && root_idx_ < roots_.size()) {
            Vertex r = roots_[root_idx_];
            if (dead_[r]) {
                ++root_idx_;
                continue;
            }
            stack_.push_back(r);
        }
    }

    void apply_forward(Vertex x) {
        if (stack_.empty()) violation("FORWARD with empty stack");
        Vertex t = stack_.back();
        if (side_[t] != 1) violation("FORWARD from non-Y top");
        if (x >= view_.n_vertices || side_[x] != 0 || dead_[x] ||
            layer_[x] != layer_[t] - 1 || match_[t] == static_cast<int>(x))
            violation("ineligible FORWARD target");
        stack_.push_back(x);
        if (layer_[x] > 0) {
            if (match_[x] < 0) violation("layered X vertex without a partner");
            Vertex y = static_cast<Vertex>(match_[x]);
            if (dead_[y] || layer_[y] != layer_[x] - 1) violation("bad forced matched step");
            stack_.push_back(y);
        }
    }

    void apply_backtrack() {
        if (stack_.empty()) violation("BACKTRACK with empty stack");
        Vertex t = stack_.back();
        if (side_[t] != 1) violation("BACKTRACK from non-Y top");
        dead_[t] = true;
        stack_.pop_back();
        if (!stack_.empty()) {
            Vertex x = stack_.back();
            if (match_[x] != static_cast<int>(t)) violation("BACKTRACK pair mismatch");
            dead_[x] = true;
            stack_.pop_back();
        } else {
            ++root_idx_;
        }
        normalize_stack();
    }

    void apply_next_root() {
        if (stack_.empty() || layer_[stack_.back()] != 0) violation("NEXT_ROOT without a completed path");
        paths_.push_back(stack_);
        for (Vertex v : stack_) dead_[v] = true;
        stack_.clear();
        ++root_idx_;
        normalize_stack();
    }

    void apply_end_phase() {
        if (!stack_.empty() || root_idx_ < roots_.size()) violation("premature END_PHASE");
        for (const auto& path : paths_) {
            // path = [y_k, x_{k-1}, y_{k-2}, ..., x_0]; re-pair along it
            for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
                match_[path[i]] = static_cast<int>(path[i + 1]);
                match_[path[i + 1]] = static_cast<int>(path[i]);
            }
        }
        start_phase();
    }

    // ---- message building ---------------------------------------------

    BitString build_message() {
        switch (stage_) {
            case Stage::bfs_alice:
                if (view_.role == Role::bob) {  // alignment pass, no state change
                    BitString msg;
                    msg.push_bit(false);
                    return msg;
                }
                return build_bfs_scan();
            case Stage::bfs_bob:
                if (view_.role == Role::alice)
                    throw std::logic_error("matching-hk: BFS turn misalignment");
                return build_bfs_scan();
            case Stage::dfs:
                return build_dfs_ops();
            case Stage::done:
                break;
        }
        throw std::logic_error("matching-hk: build_message in done stage");
    }

    BitString build_bfs_scan() {
        BitString msg;
        for (Vertex x : x_layer_) {
            for (Vertex y : adj_[x]) {
                if (layer_[y] != -1 || match_[x] == static_cast<int>(y)) continue;
                apply_y_record(y);
                msg.push_bit(true);
                msg.push_uint(y, width_);
            }
        }
        msg.push_bit(false);
        if (stage_ == Stage::bfs_alice) stage_ = Stage::bfs_bob;
        else after_y_layer_complete();
        return msg;
    }

    /// Smallest eligible own-edge successor below the current top.
    std::optional<Vertex> own_candidate() const {
        Vertex t = stack_.back();
        for (Vertex x : adj_[t]) {
            if (side_[x] != 0 || dead_[x]) continue;
            if (layer_[x] != layer_[t] - 1) continue;
            if (match_[t] == static_cast<int>(x)) continue;
            return x;
        }
        return std::nullopt;
    }

    void push_op(BitString& msg, std::uint64_t op) {
        msg.push_bit(true);
        msg.push_uint(op, 2);
    }

    BitString build_dfs_ops() {
        BitString msg;
        bool first = true;
        for (;;) {
            if (stack_.empty() && root_idx_ >= roots_.size()) {
                push_op(msg, kOpEndPhase);
                msg.push_bit(false);
                apply_end_phase();
                return msg;
            }
            Vertex t = stack_.back();
            if (layer_[t] == 0) {
                push_op(msg, kOpNextRoot);
                apply_next_root();
                first = false;
                continue;
            }
            if (auto x = own_candidate()) {
                push_op(msg, kOpForward);
                msg.push_uint(*x, width_);
                apply_forward(*x);
                first = false;
                continue;
            }
            if (first && stuck_top_ && *stuck_top_ == t) {
                push_op(msg, kOpBacktrack);
                apply_backtrack();
                first = false;
                continue;
            }
            break;  // stuck; hand over
        }
        msg.push_bit(false);
        stuck_top_ = stack_.empty() ? std::optional<Vertex>{} : std::optional<Vertex>{stack_.back()};
        return msg;
    }

    // ---- message parsing ------------------------------------------------

    void log_announcement(Vertex v) {
        stats_.announced_per_phase.back().push_back(v);
    }

    void apply_message(Role sender, const BitString& payload) {
        BitReader r(payload);
        switch (stage_) {
            case Stage::bfs_alice:
                if (sender == Role::bob) {  // must be a bare pass
                    if (r.read_bit()) violation("unexpected records in pass");
                    r.expect_end();
                    return;
                }
                parse_bfs_scan(r);
                stage_ = Stage::bfs_bob;
                return;
            case Stage::bfs_bob:
                if (sender == Role::alice) violation("BFS scan out of turn");
                parse_bfs_scan(r);
                after_y_layer_complete();
                return;
            case Stage::dfs:
                parse_dfs_ops(r);
                return;
            case Stage::done:
                violation("message after protocol end");
        }
    }

    void parse_bfs_scan(BitReader& r) {
        while (r.read_bit()) {
            Vertex y = static_cast<Vertex>(r.read_uint(width_));
            apply_y_record(y);
            log_announcement(y);
        }
        r.expect_end();
    }

    void parse_dfs_ops(BitReader& r) {
        bool first = true;
        bool ended_phase = false;
        while (r.read_bit()) {
            const std::uint64_t op = r.read_uint(2);
            switch (op) {
                case kOpForward: {
                    Vertex x = static_cast<Vertex>(r.read_uint(width_));
                    apply_forward(x);
                    log_announcement(x);
                    break;
                }
                case kOpBacktrack:
                    if (!first || !stuck_top_ || (!stack_.empty() && stack_.back() != *stuck_top_))
                        violation("BACKTRACK without mutual stall");
                    apply_backtrack();
                    break;
                case kOpNextRoot:
                    apply_next_root();
                    break;
                case kOpEndPhase:
                    apply_end_phase();
                    ended_phase = true;
                    break;
            }
            first = false;
            if (ended_phase) break;
        }
        if (ended_phase) {
            if (r.read_bit()) violation("ops after END_PHASE");
        }
        r.expect_end();
        if (!ended_phase && stage_ == Stage::dfs)
            stuck_top_ = stack_.empty() ? std::optional<Vertex>{} : std::optional<Vertex>{stack_.back()};
    }

    PartyView view_;
    unsigned width_;
    std::vector<int> side_;
    std::vector<std::vector<Vertex>> adj_;

    std::vector<int> match_;
    Stage stage_ = Stage::bfs_alice;
    std::vector<int> layer_;
    std::vector<Vertex> x_layer_, y_layer_;
    int y_layer_index_ = 1;
    std::vector<Vertex> roots_;
    std::size_t root_idx_ = 0;
    std::vector<Vertex> stack_;
    std::vector<bool> dead_;
    std::vector<std::vector<Vertex>> paths_;
    std::optional<Vertex> stuck_top_;
    std::uint64_t out_size_ = 0;
    RunStats stats_;
};

}  // namespace

std::unique_ptr<Party> make_matching_hk_party(const PartyView& view, const ProtocolParams& params) {
    return std::make_unique<MatchingHkParty>(view, params);
}

std::unique_ptr<Party> make_connectivity_party(const PartyView& view);
std::unique_ptr<Party> make_euler_trivial_party(const PartyView& view);
std::unique_ptr<Party> make_triangle_party(const PartyView& view);
std::unique_ptr<Party> make_spanning_forest_party(const PartyView& view);
std::unique_ptr<Party> make_bipartite_party(const PartyView& view);

std::unique_ptr<Party> make_party(ProtocolId id, const PartyView& view,
                                  const ProtocolParams& params) {
    switch (id) {
        case ProtocolId::connectivity: return make_connectivity_party(view);
        case ProtocolId::spanning_forest: return make_spanning_forest_party(view);
        case ProtocolId::bipartite: return make_bipartite_party(view);
        case ProtocolId::matching_hk: return make_matching_hk_party(view, params);
        case ProtocolId::euler_trivial: return make_euler_trivial_party(view);
        case ProtocolId::triangle: return make_triangle_party(view);
    }
    throw std::invalid_argument("unknown protocol id");
}

void merge_stats(RunStats& out, const Party& alice, const Party& bob) {
    const auto* sa = dynamic_cast<const StatsSource*>(&alice);
    const auto* sb = dynamic_cast<const StatsSource*>(&bob);
    if (!sa || !sb) return;
    RunStats a = sa->stats();
    RunStats b = sb->stats();
    out.phases = std::max(a.phases, b.phases);
    const std::size_t np = std::max(a.announced_per_phase.size(), b.announced_per_phase.size());
    out.announced_per_phase.assign(np, {});
    for (std::size_t p = 0; p < np; ++p) {
        if (p < a.announced_per_phase.size())
            out.announced_per_phase[p].insert(out.announced_per_phase[p].end(),
                                              a.announced_per_phase[p].begin(),
                                              a.announced_per_phase[p].end());
        if (p < b.announced_per_phase.size())
            out.announced_per_phase[p].insert(out.announced_per_phase[p].end(),
                                              b.announced_per_phase[p].begin(),
                                              b.announced_per_phase[p].end());
    }
}

}  // namespace gcomm
