#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcomm/determinant.hpp"
#include "gcomm/matching.hpp"
#include "gcomm/oracles.hpp"
#include "gcomm/reductions.hpp"
#include "gcomm/rng.hpp"

#include <set>

using namespace gcomm;

namespace {

BitVector bv(std::uint64_t value, std::size_t n) { return BitVector::from_value(value, n); }

void check_roles_total_injective(const GadgetInstance& inst) {
    CHECK(inst.roles.size() == inst.n_vertices());
    std::set<std::string> labels;
    for (const auto& [v, name] : inst.roles) {
        CHECK(v < inst.n_vertices());
        CHECK(labels.insert(name).second);
    }
}

}  // namespace

TEST_CASE("parity->connectivity graph") {
    // z = 000: two disjoint triangles
    Graph g = build_parity_connectivity(bv(0b000, 3));
    CHECK(g.n_vertices() == 6);
    CHECK(connected_components(g).size() == 2);

    // z = 100 (z_1 = 1 in the low bit): a single 6-cycle
    g = build_parity_connectivity(bv(0b001, 3));
    CHECK(connected_components(g).size() == 1);
    for (Vertex v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);

    // odd-weight z of every length 3..8 gives one cycle of length 2n
    for (std::size_t n = 3; n <= 8; ++n)
        for (std::uint64_t z = 0; z < (1ULL << n); ++z) {
            const auto vec = bv(z, n);
            if (vec.weight() % 2 == 0) continue;
            CHECK(connected_components(build_parity_connectivity(vec)).size() == 1);
        }

    CHECK_THROWS_AS(build_parity_connectivity(bv(0, 2)), std::invalid_argument);
    check_roles_total_injective(build_parity_connectivity_instance(bv(0b101, 3)));
}

TEST_CASE("IP->connectivity gadget") {
    auto zero = build_ip_connectivity(bv(0, 3), bv(0, 3));
    CHECK_FALSE(is_connected(zero.partition->union_graph()));
    CHECK(zero.expected == 0);

    auto one = build_ip_connectivity(bv(0b001, 3), bv(0b001, 3));
    CHECK(one.n_vertices() == 30);
    auto comps = connected_components(one.partition->union_graph());
    CHECK(comps.size() == 1);
    CHECK(comps[0].size() == 30);
    CHECK(one.partition->disjoint_flag());

    // all 64 pairs at n = 3
    auto report = verify_reduction(GadgetKind::ip_conn, 3, true, 0, 0);
    CHECK(report.cases == 64);
    CHECK(report.mismatches == 0);

    CHECK_THROWS_AS(build_ip_connectivity(bv(0, 2), bv(0, 2)), std::invalid_argument);
    check_roles_total_injective(one);
}

TEST_CASE("IP->matching gadget") {
    auto zero = build_ip_matching(bv(0, 3), bv(0, 3), MatchVariant::overlap);
    CHECK(zero.n_vertices() == 18);
    CHECK_FALSE(has_perfect_matching_exact(zero.partition->union_graph()));

    auto one = build_ip_matching(bv(0b001, 3), bv(0b001, 3), MatchVariant::overlap);
    CHECK(has_perfect_matching_exact(one.partition->union_graph()));

    auto disjoint = build_ip_matching(bv(0b001, 3), bv(0b001, 3), MatchVariant::disjoint);
    CHECK(disjoint.n_vertices() == 30);
    CHECK(disjoint.partition->disjoint_flag());
    CHECK(has_perfect_matching_exact(disjoint.partition->union_graph()));

    auto report = verify_reduction(GadgetKind::ip_match, 3, true, 0, 0);
    CHECK(report.cases == 128);  // both variants
    CHECK(report.mismatches == 0);

    CHECK_THROWS_AS(build_ip_matching(bv(0, 4), bv(0, 4), MatchVariant::overlap),
                    std::invalid_argument);  // even n
    check_roles_total_injective(disjoint);
}

TEST_CASE("parity->determinant graph") {
    CHECK(det_integer(build_parity_determinant(BitMatrix(2))) == 0);

    BitMatrix eye(2);
    eye.set(0, 0, true);
    eye.set(1, 1, true);
    CHECK(det_integer(build_parity_determinant(eye)) == -2);

    auto report = verify_reduction(GadgetKind::parity_det, 3, true, 0, 0);
    CHECK(report.cases == 512);
    CHECK(report.mismatches == 0);

    CHECK_THROWS_AS(build_parity_determinant(BitMatrix(7)), std::invalid_argument);
    check_roles_total_injective(build_parity_determinant_instance(eye));
}

TEST_CASE("DET communication instance") {
    // X = Y = all-ones: no (l,r) arcs survive, det 0
    BitMatrix ones(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones.set(i, j, true);
    auto inst = build_det_instance(ones, ones);
    CHECK(inst.expected == 0);
    CHECK(det_integer(inst.arcs->union_digraph()) == 0);

    // X all-ones, Y zero: every (l,r) arc present via Bob, det -4
    auto mixed = build_det_instance(ones, BitMatrix(2));
    CHECK(mixed.expected == -4);
    CHECK(det_integer(mixed.arcs->union_digraph()) == -4);

    // arc ownership overlaps exactly on the doubly-zero entries
    BitMatrix x(2), y(2);
    x.set(0, 0, true);
    auto both = build_det_instance(x, y);
    CHECK(both.arcs->arcs_a().count({1, 4}) == 0);  // X(0,0)=1 keeps it from Alice
    CHECK(both.arcs->arcs_b().count({1, 4}) == 1);

    auto report = verify_reduction(GadgetKind::det_comm, 2, true, 0, 0);
    CHECK(report.cases == 256);
    CHECK(report.mismatches == 0);
    check_roles_total_injective(inst);
}

TEST_CASE("Euler gadget, query version") {
    auto zero = build_or_ip_euler_query(std::vector<BitVector>(3, BitVector(3)));
    CHECK(zero.n_vertices() == 13);
    CHECK(is_eulerian(*zero.graph));
    // every fixed-subgraph vertex has even degree
    for (Vertex v = 0; v < zero.graph->n_vertices(); ++v)
        CHECK(zero.graph->degree(v) % 2 == 0);

    std::vector<BitVector> zs(3, BitVector(3));
    zs[0] = bv(0b001, 3);
    auto odd = build_or_ip_euler_query(zs);
    CHECK_FALSE(is_eulerian(*odd.graph));

    auto report = verify_reduction(GadgetKind::euler_query, 3, true, 0, 0);
    CHECK(report.cases == 512);
    CHECK(report.mismatches == 0);

    CHECK_THROWS_AS(build_or_ip_euler_query(std::vector<BitVector>(2, BitVector(2))),
                    std::invalid_argument);
    check_roles_total_injective(zero);
}

TEST_CASE("Euler gadget, communication version") {
    const std::vector<BitVector> ones(4, bv(0xF, 4));
    auto inst = build_or_ip_euler_comm(ones, ones);
    CHECK(inst.expected == 1);
    CHECK(is_eulerian(inst.partition->union_graph()));

    // a single 1-overlap in row 1 flips one IP to 1
    std::vector<BitVector> xs(4, bv(0xF, 4)), ys(4, bv(0xF, 4));
    xs[0] = bv(0b0001, 4);
    ys[0] = bv(0b0001, 4);
    auto one = build_or_ip_euler_comm(xs, ys);
    CHECK(one.expected == 0);
    CHECK_FALSE(is_eulerian(one.partition->union_graph()));

    auto report = verify_reduction(GadgetKind::euler_comm, 4, false, 1000, 7);
    CHECK(report.cases == 1000);
    CHECK(report.mismatches == 0);

    CHECK_THROWS_AS(build_or_ip_euler_comm(std::vector<BitVector>(3, BitVector(3)),
                                           std::vector<BitVector>(3, BitVector(3))),
                    std::invalid_argument);  // odd n
    check_roles_total_injective(inst);
}

TEST_CASE("connectivity gadget stays sparse and disjoint on samples") {
    for (std::uint64_t s = 0; s < 300; ++s) {
        Rng rng(derive_seed(123, s));
        const std::size_t n = 3 + rng.next_below(6);
        BitVector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x.set(i, rng.next_u64() & 1);
            y.set(i, rng.next_u64() & 1);
        }
        auto inst = build_ip_connectivity(x, y);
        CHECK(inst.n_vertices() == 10 * n);
        CHECK(inst.partition->union_graph().n_edges() <= 16 * n);
        CHECK(is_connected(inst.partition->union_graph()) == (inner_product(x, y) == 1));
    }
}

TEST_CASE("verify_reduction guards and reporting") {
    CHECK_THROWS_AS(verify_reduction(GadgetKind::ip_conn, 30, true, 0, 0), InfeasibleError);
    try {
        verify_reduction(GadgetKind::ip_conn, 30, true, 0, 0);
    } catch (const InfeasibleError& e) {
        CHECK(e.space_bits == 60);
    }

    auto report = verify_reduction(GadgetKind::parity_conn, 5, true, 0, 9);
    CHECK(report.cases == 32);
    CHECK(report.csv() == "kind,n,cases,mismatches,seed\nparity-conn,5,32,0,9\n");

    CHECK(verify_reduction(GadgetKind::parity_det, 2, true, 0, 0).cases == 16);

    // sampled mode is deterministic in the seed
    auto s1 = verify_reduction(GadgetKind::ip_match, 5, false, 50, 4);
    auto s2 = verify_reduction(GadgetKind::ip_match, 5, false, 50, 4);
    CHECK(s1.cases == 100);
    CHECK(s1.mismatches == 0);
    CHECK(s2.cases == s1.cases);
}

TEST_CASE("sampled sweeps one size above the exhaustive runs") {
    CHECK(verify_reduction(GadgetKind::parity_conn, 16, false, 10000, 3).mismatches == 0);
    CHECK(verify_reduction(GadgetKind::ip_conn, 8, false, 10000, 3).mismatches == 0);
    // exact-PM oracle range ends at 64 vertices, so n=5 (50 vertices in the
    // disjoint variant) is the largest odd size; sample it heavily
    auto m = verify_reduction(GadgetKind::ip_match, 5, false, 10000, 3);
    CHECK(m.cases == 20000);
    CHECK(m.mismatches == 0);
    CHECK(verify_reduction(GadgetKind::parity_det, 4, false, 10000, 3).mismatches == 0);
    CHECK(verify_reduction(GadgetKind::det_comm, 3, false, 10000, 3).mismatches == 0);
    CHECK(verify_reduction(GadgetKind::euler_query, 4, false, 10000, 3).mismatches == 0);
    CHECK(verify_reduction(GadgetKind::euler_comm, 6, false, 10000, 3).mismatches == 0);
}

TEST_CASE("gadget kind names round-trip") {
    for (GadgetKind k : {GadgetKind::parity_conn, GadgetKind::ip_conn, GadgetKind::ip_match,
                         GadgetKind::parity_det, GadgetKind::det_comm, GadgetKind::euler_query,
                         GadgetKind::euler_comm})
        CHECK(gadget_from_name(gadget_name(k)) == k);
    CHECK_FALSE(gadget_from_name("nonsense").has_value());
}
