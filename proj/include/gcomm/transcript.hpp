#pragma once

#include "gcomm/bitstring.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gcomm {

enum class Role : std::uint8_t { alice = 0, bob = 1 };

inline Role other(Role r) { return r == Role::alice ? Role::bob : Role::alice; }
inline char role_letter(Role r) { return r == Role::alice ? 'A' : 'B'; }

struct Message {
    Role sender;
    BitString payload;  // length >= 1; HALT is a runtime signal, not a message
};

struct TranscriptCost {
    std::size_t bits = 0;
    std::size_t rounds = 0;
    bool operator==(const TranscriptCost&) const = default;
};

/// Ordered list of sent messages. Cost: bits = sum of payload lengths,
/// rounds = number of maximal same-sender blocks.
class Transcript {
public:
    void append(Role sender, BitString payload) {
        messages_.push_back({sender, std::move(payload)});
    }

    const std::vector<Message>& messages() const { return messages_; }
    std::size_t size() const { return messages_.size(); }

    TranscriptCost cost() const {
        TranscriptCost c;
        for (std::size_t i = 0; i < messages_.size(); ++i) {
            c.bits += messages_[i].payload.size();
            if (i == 0 || messages_[i].sender != messages_[i - 1].sender) ++c.rounds;
        }
        return c;
    }

    bool operator==(const Transcript& o) const {
        if (messages_.size() != o.messages_.size()) return false;
        for (std::size_t i = 0; i < messages_.size(); ++i)
            if (messages_[i].sender != o.messages_[i].sender ||
                !(messages_[i].payload == o.messages_[i].payload))
                return false;
        return true;
    }

private:
    std::vector<Message> messages_;
};

inline TranscriptCost transcript_cost(const Transcript& t) { return t.cost(); }

/// Line-oriented dump: "idx sender bits hex-payload" per message, then a
/// summary "bits=<B> rounds=<R> output=<V>".
inline void dump_transcript(std::ostream& os, const Transcript& t, const std::string& output) {
    for (std::size_t i = 0; i < t.messages().size(); ++i) {
        const auto& m = t.messages()[i];
        os << i << ' ' << role_letter(m.sender) << ' ' << m.payload.size()
           << ' ' << m.payload.to_hex() << '\n';
    }
    const auto c = t.cost();
    os << "bits=" << c.bits << " rounds=" << c.rounds << " output=" << output << '\n';
}

}  // namespace gcomm
