#pragma once

#include "gcomm/bitvec.hpp"
#include "gcomm/graph.hpp"
#include "gcomm/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gcomm {

enum class GadgetKind {
    parity_conn,   // parity -> connectivity query graph (2n vertices)
    ip_conn,       // IP -> connectivity edge partition (10n vertices)
    ip_match,      // IP -> perfect matching, overlap and disjoint variants
    parity_det,    // parity -> determinant digraph (2n+2 vertices)
    det_comm,      // DET communication instance over the same vertex set
    euler_query,   // OR of parities -> Eulerian, single graph (3n+4 vertices)
    euler_comm,    // OR of IPs -> Eulerian, edge partition
};

std::string gadget_name(GadgetKind kind);
std::optional<GadgetKind> gadget_from_name(const std::string& name);

enum class MatchVariant { overlap, disjoint };

/// A built reduction instance: the graph object (exactly one of the payload
/// fields is set, depending on the construction), role labels for every
/// vertex, the inputs used, and the predicate value the construction
/// encodes (0/1 for decision gadgets, the determinant for the det ones).
struct GadgetInstance {
    GadgetKind kind{};
    std::size_t n = 0;
    std::optional<Graph> graph;
    std::optional<DiGraph> digraph;
    std::optional<EdgePartition> partition;
    std::optional<ArcPartition> arcs;
    RoleMap roles;
    std::int64_t expected = 0;
    std::string input_desc;

    std::size_t n_vertices() const;
    std::size_t n_edges() const;
};

// --- builders ------------------------------------------------------------

/// Two rows of n vertices; z_i = 0 joins row-mates i and i+1, z_i = 1
/// crosses the rows (indices wrap). Odd |z| yields one 2n-cycle, even |z|
/// two n-cycles. Requires n >= 3.
Graph build_parity_connectivity(const BitVector& z);
GadgetInstance build_parity_connectivity_instance(const BitVector& z);

/// The connectivity partition: every ring edge of the parity graph becomes a
/// four-vertex gadget whose connectedness encodes x_i y_i. E_A and E_B are
/// disjoint by construction; the union is connected iff IP(x,y) = 1.
GadgetInstance build_ip_connectivity(const BitVector& x, const BitVector& y);

/// The matching partition (n odd): per position one gadget on
/// {t_i, b_i, k_i^t, k_i^b, l_i^t, l_i^b, t_{i+1}, b_{i+1}}; the union has a
/// perfect matching iff IP(x,y) = 1. The disjoint variant swaps each shared
/// horizontal edge for a two-fresh-vertex path gadget.
GadgetInstance build_ip_matching(const BitVector& x, const BitVector& y, MatchVariant variant);

/// Valiant-style digraph on s, l_1..l_n, t, r_1..r_n (pinned vertex order):
/// arcs (s,l_i), (r_i,t), (t,s), (l_i,r_j) iff Z(i,j)=1, self-loops on all
/// l_i and r_i. det = -|Z|. Requires 1 <= n <= 6.
DiGraph build_parity_determinant(const BitMatrix& z);
GadgetInstance build_parity_determinant_instance(const BitMatrix& z);

/// DET instance: Alice holds (s,l_i), the l-loops and (t,s); Bob holds
/// (r_i,t) and the r-loops; (l_i,r_j) goes to Alice iff X(i,j)=0 and to Bob
/// iff Y(i,j)=0 (overlap expected). det(union) = -(n^2 - |X AND Y|).
GadgetInstance build_det_instance(const BitMatrix& x, const BitMatrix& y);

/// Euler gadget on l_0..l_{n+1}, r_0..r_{n+1}, m_1..m_n: fixed paths plus
/// five bridging edges keep the graph connected with even degrees; z^i_j = 1
/// adds {l_i,m_j} and {r_i,m_j}. Eulerian iff every |z^i| is even.
/// Requires n >= 3 (at n = 2 the {m_1,m_n} edge collides with the m-path).
GadgetInstance build_or_ip_euler_query(const std::vector<BitVector>& zs);

/// Communication version (n even >= 4): fixed edges go to Alice; x^i_j = 0
/// puts the {l_i,m_j},{r_i,m_j} pair in E_A, y^i_j = 0 puts it in E_B.
/// Eulerian union iff every IP(x^i,y^i) = 0.
GadgetInstance build_or_ip_euler_comm(const std::vector<BitVector>& xs,
                                      const std::vector<BitVector>& ys);

// --- verification ----------------------------------------------------------

struct VerifyReport {
    GadgetKind kind{};
    std::size_t n = 0;
    bool exhaustive = false;
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t seed = 0;
    std::string first_failure;  // input description of the first mismatch

    std::string csv() const;  // header + one row: kind,n,cases,mismatches,seed
};

/// Thrown when an exhaustive run is requested over an input space larger
/// than 2^20 cases.
struct InfeasibleError : std::invalid_argument {
    InfeasibleError(const std::string& msg, unsigned space_bits_)
        : std::invalid_argument(msg), space_bits(space_bits_) {}
    unsigned space_bits;
};

/// Runs builder + ground-truth oracle over every input (exhaustive) or over
/// `samples` seeded random inputs, comparing against the encoded predicate.
/// ip_match covers both variants. Zero mismatches means the construction's
/// iff-claim held on every case.
VerifyReport verify_reduction(GadgetKind kind, std::size_t n, bool exhaustive,
                              std::uint64_t samples, std::uint64_t seed);

}  // namespace gcomm
