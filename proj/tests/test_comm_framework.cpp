#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcomm/bench.hpp"
#include "gcomm/bits.hpp"
#include "gcomm/matching.hpp"
#include "gcomm/oracles.hpp"
#include "gcomm/protocols.hpp"
#include "gcomm/rng.hpp"
#include "gcomm/runtime.hpp"
#include "gcomm/transcript.hpp"

#include <sstream>

using namespace gcomm;

namespace {

BitString bits_of(std::initializer_list<int> bits) {
    BitString s;
    for (int b : bits) s.push_bit(b != 0);
    return s;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("BitString append and read back") {
    BitString s;
    s.push_uint(0b1011, 4);
    s.push_bit(true);
    s.push_uint(7, 3);
    CHECK(s.size() == 8);
    BitReader r(s);
    CHECK(r.read_uint(4) == 0b1011);
    CHECK(r.read_bit());
    CHECK(r.read_uint(3) == 7);
    CHECK_NOTHROW(r.expect_end());

    CHECK_THROWS_AS(s.push_uint(4, 2), std::invalid_argument);  // does not fit

    BitReader r2(s);
    r2.read_uint(8);
    CHECK_THROWS_AS(r2.read_bit(), std::runtime_error);  // truncated

    BitReader r3(s);
    r3.read_bit();
    CHECK_THROWS_AS(r3.expect_end(), std::runtime_error);  // trailing bits
}

TEST_CASE("bit width helper") {
    CHECK(bit_width_for(1) == 1);
    CHECK(bit_width_for(2) == 1);
    CHECK(bit_width_for(3) == 2);
    CHECK(bit_width_for(4) == 2);
    CHECK(bit_width_for(8) == 3);
    CHECK(bit_width_for(9) == 4);
}

TEST_CASE("transcript cost") {
    Transcript t;
    CHECK(t.cost() == TranscriptCost{0, 0});

    Transcript t2;
    t2.append(Role::alice, bits_of({1, 0, 1, 0, 1}));
    t2.append(Role::alice, bits_of({1, 1, 0}));
    t2.append(Role::bob, bits_of({1}));
    CHECK(t2.cost() == TranscriptCost{9, 2});

    Transcript t3;
    t3.append(Role::alice, bits_of({1}));
    t3.append(Role::bob, bits_of({0}));
    t3.append(Role::alice, bits_of({1}));
    CHECK(t3.cost() == TranscriptCost{3, 3});
}

TEST_CASE("transcript dump format") {
    Transcript t;
    t.append(Role::alice, bits_of({1, 0, 0, 0, 0, 0, 0, 0, 1}));
    t.append(Role::bob, bits_of({1}));
    std::ostringstream os;
    dump_transcript(os, t, "true");
    CHECK(os.str() == "0 A 9 0101\n1 B 1 01\nbits=10 rounds=2 output=true\n");
}

TEST_CASE("split_edges modes") {
    Graph g = path_graph(3);
    auto all = split_edges(g, SplitMode::all_alice, 0);
    CHECK(all.edges_a() == g.edges());
    CHECK(all.edges_b().empty());

    auto inter = split_edges(g, SplitMode::interleave, 0);
    CHECK(inter.edges_a() == EdgeSet{{0, 1}});
    CHECK(inter.edges_b() == EdgeSet{{1, 2}});

    Graph big = random_graph(20, 0.3, 5);
    auto r1 = split_edges(big, SplitMode::random, 42);
    auto r2 = split_edges(big, SplitMode::random, 42);
    CHECK(r1.edges_a() == r2.edges_a());
    CHECK(r1.edges_b() == r2.edges_b());
    CHECK(r1.union_graph() == big);
    auto r3 = split_edges(big, SplitMode::random, 43);
    CHECK(r1.edges_a() != r3.edges_a());
}

TEST_CASE("run_protocol: connectivity examples") {
    // path, all edges to Alice
    Graph g = path_graph(8);
    auto inst = split_edges(g, SplitMode::all_alice, 0);
    auto rr = run_protocol(ProtocolId::connectivity, inst, {}, 0);
    CHECK(std::get<bool>(rr.outcome.output));
    CHECK(rr.outcome.transcript.cost().bits == 8 * 3 + 1);

    // empty graph on 4 vertices: 4*2+1 = 9 bits, not connected
    EdgePartition empty(4, {}, {});
    rr = run_protocol(ProtocolId::connectivity, empty, {}, 0);
    CHECK_FALSE(std::get<bool>(rr.outcome.output));
    CHECK(rr.outcome.transcript.cost().bits == 9);
    CHECK(rr.outcome.transcript.cost().rounds == 2);
}

TEST_CASE("run_protocol: matching output equals the centralized oracle") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Graph g = random_bipartite(8, 8, 0.4, derive_seed(31, s));
        auto inst = split_edges(g, SplitMode::random, derive_seed(32, s));
        ProtocolParams params;
        for (Vertex v = 0; v < 8; ++v) params.left_set.insert(v);
        auto rr = run_protocol(ProtocolId::matching_hk, inst, params, s);
        CHECK(std::get<std::uint64_t>(rr.outcome.output) ==
              hopcroft_karp_max_matching(g, params.left_set).size());
    }
}

TEST_CASE("determinism: identical runs produce identical transcripts") {
    Graph g = random_graph(16, 0.25, 9);
    auto inst = split_edges(g, SplitMode::random, 77);
    for (ProtocolId id : {ProtocolId::connectivity, ProtocolId::spanning_forest,
                          ProtocolId::bipartite, ProtocolId::euler_trivial, ProtocolId::triangle}) {
        auto a = run_protocol(id, inst, {}, 5);
        auto b = run_protocol(id, inst, {}, 5);
        CHECK(a.outcome.transcript == b.outcome.transcript);
        CHECK(result_to_string(a.outcome.output) == result_to_string(b.outcome.output));
    }
}

TEST_CASE("information hygiene: Alice's opening message ignores Bob's edges") {
    Graph g1 = random_graph(12, 0.3, 101);
    auto base = split_edges(g1, SplitMode::random, 11);

    // same Alice half, fully different Bob half
    EdgeSet other_b{{0, 11}, {1, 10}, {2, 9}};
    EdgePartition swapped(12, base.edges_a(), other_b);

    for (ProtocolId id : {ProtocolId::connectivity, ProtocolId::spanning_forest,
                          ProtocolId::bipartite, ProtocolId::euler_trivial, ProtocolId::triangle}) {
        auto r1 = run_protocol(id, base, {}, 3);
        auto r2 = run_protocol(id, swapped, {}, 3);
        REQUIRE(!r1.outcome.transcript.messages().empty());
        REQUIRE(!r2.outcome.transcript.messages().empty());
        CHECK(r1.outcome.transcript.messages()[0].sender == Role::alice);
        CHECK(r1.outcome.transcript.messages()[0].payload ==
              r2.outcome.transcript.messages()[0].payload);
    }

    Graph bip = random_bipartite(6, 6, 0.5, 55);
    auto mbase = split_edges(bip, SplitMode::random, 66);
    EdgePartition mswapped(12, mbase.edges_a(), EdgeSet{{0, 6}, {1, 7}, {5, 11}});
    ProtocolParams params;
    for (Vertex v = 0; v < 6; ++v) params.left_set.insert(v);
    auto r1 = run_protocol(ProtocolId::matching_hk, mbase, params, 3);
    auto r2 = run_protocol(ProtocolId::matching_hk, mswapped, params, 3);
    REQUIRE(!r1.outcome.transcript.messages().empty());
    CHECK(r1.outcome.transcript.messages()[0].payload ==
          r2.outcome.transcript.messages()[0].payload);
}

namespace {

// minimal parties for exercising the lockstep driver's contract
struct ScriptedParty final : Party {
    std::vector<std::optional<BitString>> script;
    std::size_t at = 0;
    ProtocolResult out = false;

    std::optional<BitString> take_turn(const BitString*) override {
        if (at >= script.size()) return std::nullopt;
        auto msg = script[at++];
        return msg;
    }
    ProtocolResult result() const override { return out; }
};

}  // namespace

TEST_CASE("lockstep driver enforces the message contract") {
    // empty payload is a violation
    ScriptedParty a, b;
    a.script = {BitString{}};
    CHECK_THROWS_AS(run_lockstep(a, b), std::runtime_error);

    // disagreeing outputs are a hard error
    ScriptedParty c, d;
    c.script = {bits_of({1})};
    c.out = true;
    d.out = false;
    CHECK_THROWS_AS(run_lockstep(c, d), std::logic_error);

    // agreeing parties: transcript reflects the exchange
    ScriptedParty e, f;
    e.script = {bits_of({1, 0})};
    f.script = {bits_of({1})};
    e.out = f.out = true;
    auto outcome = run_lockstep(e, f);
    CHECK(outcome.transcript.size() == 2);
    CHECK(outcome.transcript.cost() == TranscriptCost{3, 2});
    CHECK(std::get<bool>(outcome.output));
}

TEST_CASE("malformed replies are hard errors, never silent") {
    PartyView alice_view{Role::alice, 4, EdgeSet{{0, 1}}, 1};

    // over-wide echo: the trailing bit must be rejected
    auto alice = make_party(ProtocolId::connectivity, alice_view, {});
    ScriptedParty wide;
    BitString two_bits;
    two_bits.push_bit(true);
    two_bits.push_bit(true);
    wide.script = {two_bits};
    CHECK_THROWS_AS(run_lockstep(*alice, wide), std::runtime_error);

    // peer that halts without echoing leaves Alice without an answer
    auto alice2 = make_party(ProtocolId::connectivity, alice_view, {});
    ScriptedParty mute;
    CHECK_THROWS_AS(run_lockstep(*alice2, mute), std::runtime_error);
}

TEST_CASE("protocol and split-mode names round-trip") {
    for (ProtocolId id : {ProtocolId::connectivity, ProtocolId::spanning_forest,
                          ProtocolId::bipartite, ProtocolId::matching_hk,
                          ProtocolId::euler_trivial, ProtocolId::triangle})
        CHECK(protocol_from_name(protocol_name(id)) == id);
    CHECK_FALSE(protocol_from_name("nope").has_value());
    CHECK(split_mode_from_name("all-alice") == SplitMode::all_alice);
    CHECK_FALSE(split_mode_from_name("bogus").has_value());
}

TEST_CASE("run_protocol rejects structural precondition violations") {
    EdgePartition tiny(1, {}, {});
    CHECK_THROWS_AS(run_protocol(ProtocolId::connectivity, tiny, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_protocol(ProtocolId::triangle, EdgePartition(2, {}, {}), {}, 0),
                    std::invalid_argument);

    // matching-hk: an edge inside one side is a hard error
    Graph g(4);
    g.add_edge(0, 1);
    auto inst = split_edges(g, SplitMode::all_alice, 0);
    ProtocolParams params;
    params.left_set = {0, 1};
    CHECK_THROWS_AS(run_protocol(ProtocolId::matching_hk, inst, params, 0), std::invalid_argument);
}
