#include "gcomm/runtime.hpp"

#include "gcomm/protocols.hpp"
#include "gcomm/rng.hpp"

#include <sstream>
#include <stdexcept>

namespace gcomm {

std::string result_to_string(const ProtocolResult& r) {
    if (std::holds_alternative<bool>(r)) return std::get<bool>(r) ? "true" : "false";
    if (std::holds_alternative<std::uint64_t>(r)) return std::to_string(std::get<std::uint64_t>(r));
    std::ostringstream os;
    const auto& edges = std::get<std::vector<Edge>>(r);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ',';
        os << edges[i].first << '-' << edges[i].second;
    }
    return os.str();
}

ProtocolOutcome run_lockstep(Party& alice, Party& bob) {
    // generous cap; every protocol here is linear in messages
    constexpr std::size_t kMaxTurns = 1u << 22;

    ProtocolOutcome out;
    bool halted[2] = {false, false};
    std::optional<BitString> pending[2];  // message awaiting each party
    Role active = Role::alice;

    std::size_t turns = 0;
    while (!halted[0] || !halted[1]) {
        if (++turns > kMaxTurns)
            throw std::runtime_error("protocol violation: turn limit exceeded");
        const int idx = static_cast<int>(active);
        if (!halted[idx]) {
            Party& party = active == Role::alice ? alice : bob;
            const BitString* incoming = pending[idx] ? &*pending[idx] : nullptr;
            auto msg = party.take_turn(incoming);
            pending[idx].reset();
            if (msg) {
                if (msg->empty())
                    throw std::runtime_error("protocol violation: empty payload (use HALT)");
                out.transcript.append(active, *msg);
                pending[static_cast<int>(other(active))] = std::move(*msg);
            } else {
                halted[idx] = true;
            }
        }
        active = other(active);
    }

    out.alice_output = alice.result();
    out.bob_output = bob.result();
    if (!(out.alice_output == out.bob_output))
        throw std::logic_error("protocol violation: party outputs disagree");
    out.output = out.alice_output;
    return out;
}

std::string protocol_name(ProtocolId id) {
    switch (id) {
        case ProtocolId::connectivity: return "connectivity";
        case ProtocolId::spanning_forest: return "spanning-forest";
        case ProtocolId::bipartite: return "bipartite";
        case ProtocolId::matching_hk: return "matching-hk";
        case ProtocolId::euler_trivial: return "euler-trivial";
        case ProtocolId::triangle: return "triangle";
    }
    return "?";
}

std::optional<ProtocolId> protocol_from_name(const std::string& name) {
    for (ProtocolId id : {ProtocolId::connectivity, ProtocolId::spanning_forest,
                          ProtocolId::bipartite, ProtocolId::matching_hk,
                          ProtocolId::euler_trivial, ProtocolId::triangle})
        if (protocol_name(id) == name) return id;
    return std::nullopt;
}

std::optional<SplitMode> split_mode_from_name(const std::string& name) {
    if (name == "random") return SplitMode::random;
    if (name == "interleave") return SplitMode::interleave;
    if (name == "all-alice" || name == "all_alice") return SplitMode::all_alice;
    return std::nullopt;
}

EdgePartition split_edges(const Graph& g, SplitMode mode, std::uint64_t seed) {
    EdgeSet a, b;
    switch (mode) {
        case SplitMode::all_alice:
            a = g.edges();
            break;
        case SplitMode::interleave: {
            std::size_t i = 0;
            for (const auto& e : g.edges())
                ((i++ % 2 == 0) ? a : b).insert(e);
            break;
        }
        case SplitMode::random: {
            Rng rng(derive_seed(seed, 0xA11CEB0Bu));
            for (const auto& e : g.edges())
                ((rng.next_u64() & 1) == 0 ? a : b).insert(e);
            break;
        }
    }
    return EdgePartition(g.n_vertices(), std::move(a), std::move(b));
}

RunResult run_protocol(ProtocolId id, const EdgePartition& inst,
                       const ProtocolParams& params, std::uint64_t seed) {
    PartyView alice_view{Role::alice, inst.n_vertices(), inst.edges_a(), derive_seed(seed, 0)};
    PartyView bob_view{Role::bob, inst.n_vertices(), inst.edges_b(), derive_seed(seed, 1)};

    auto alice = make_party(id, alice_view, params);
    auto bob = make_party(id, bob_view, params);

    RunResult rr;
    rr.outcome = run_lockstep(*alice, *bob);
    merge_stats(rr.stats, *alice, *bob);
    return rr;
}

}  // namespace gcomm
