#pragma once

#include "gcomm/runtime.hpp"

#include <memory>

namespace gcomm {

/// Factory for one side of a protocol run. Throws std::invalid_argument when
/// the protocol's structural preconditions fail (vertex count too small, an
/// edge that does not cross the declared bipartition, ...).
std::unique_ptr<Party> make_party(ProtocolId id, const PartyView& view,
                                  const ProtocolParams& params);

/// Implemented by parties that reconstruct per-phase announcement logs from
/// received messages (matching-hk).
class StatsSource {
public:
    virtual ~StatsSource() = default;
    virtual RunStats stats() const = 0;
};

/// Combine both receivers' wire-derived stats into one run record.
void merge_stats(RunStats& out, const Party& alice, const Party& bob);

}  // namespace gcomm
