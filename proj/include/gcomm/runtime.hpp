#pragma once

#include "gcomm/bitstring.hpp"
#include "gcomm/graph.hpp"
#include "gcomm/transcript.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gcomm {

/// What one side of a protocol knows: its role, the public vertex count, its
/// own edges, and a private randomness seed. The other party's edges are
/// reachable only through received messages.
struct PartyView {
    Role role;
    std::size_t n_vertices;
    EdgeSet own_edges;
    std::uint64_t seed;
};

using ProtocolResult = std::variant<bool, std::uint64_t, std::vector<Edge>>;

std::string result_to_string(const ProtocolResult& r);

/// One side's state machine. take_turn is called on this party's turns with
/// the payload the other party sent on its previous turn (nullptr if none);
/// it returns the payload to send now, or nullopt to HALT. After halting the
/// party is never stepped again and result() must be final.
class Party {
public:
    virtual ~Party() = default;
    virtual std::optional<BitString> take_turn(const BitString* incoming) = 0;
    virtual ProtocolResult result() const = 0;
};

struct ProtocolOutcome {
    ProtocolResult output;       // the agreed value
    ProtocolResult alice_output; // per-party outputs; must agree
    ProtocolResult bob_output;
    Transcript transcript;
};

/// Lockstep driver: turns strictly alternate starting with Alice; each turn
/// the active party emits exactly one message (>= 1 bit) or HALT. The run
/// ends when both parties have halted. Violations (empty payloads, parties
/// that never halt, disagreeing outputs) are hard errors.
ProtocolOutcome run_lockstep(Party& alice, Party& bob);

enum class ProtocolId {
    connectivity,
    spanning_forest,
    bipartite,
    matching_hk,
    euler_trivial,
    triangle,
};

std::string protocol_name(ProtocolId id);
std::optional<ProtocolId> protocol_from_name(const std::string& name);

struct ProtocolParams {
    /// Declared left side of the bipartition (matching-hk only).
    VertexSet left_set;
};

/// Per-phase announcement log reconstructed by the receiving parties from
/// the wire, plus phase counts (matching-hk only).
struct RunStats {
    std::size_t phases = 0;
    std::vector<std::vector<Vertex>> announced_per_phase;
};

struct RunResult {
    ProtocolOutcome outcome;
    RunStats stats;
};

/// Builds both party state machines for `id` over the partitioned instance
/// and drives them in lockstep. Deterministic given (id, inst, params, seed).
RunResult run_protocol(ProtocolId id, const EdgePartition& inst,
                       const ProtocolParams& params, std::uint64_t seed);

enum class SplitMode { random, interleave, all_alice };

std::optional<SplitMode> split_mode_from_name(const std::string& name);

/// Distributes g's edges: random assigns each edge independently to Alice or
/// Bob (disjoint), interleave alternates in canonical edge order, all_alice
/// hands everything to Alice.
EdgePartition split_edges(const Graph& g, SplitMode mode, std::uint64_t seed);

}  // namespace gcomm
