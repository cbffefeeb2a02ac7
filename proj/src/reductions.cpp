#include "gcomm/reductions.hpp"

#include "gcomm/determinant.hpp"
#include "gcomm/matching.hpp"
#include "gcomm/oracles.hpp"
#include "gcomm/rng.hpp"

#include <sstream>
#include <stdexcept>

namespace gcomm {

std::string gadget_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::parity_conn: return "parity-conn";
        case GadgetKind::ip_conn: return "ip-conn";
        case GadgetKind::ip_match: return "ip-match";
        case GadgetKind::parity_det: return "parity-det";
        case GadgetKind::det_comm: return "det-comm";
        case GadgetKind::euler_query: return "or-ip-euler";
        case GadgetKind::euler_comm: return "or-ip-euler-comm";
    }
    return "?";
}

std::optional<GadgetKind> gadget_from_name(const std::string& name) {
    for (GadgetKind k : {GadgetKind::parity_conn, GadgetKind::ip_conn, GadgetKind::ip_match,
                         GadgetKind::parity_det, GadgetKind::det_comm, GadgetKind::euler_query,
                         GadgetKind::euler_comm})
        if (gadget_name(k) == name) return k;
    return std::nullopt;
}

std::size_t GadgetInstance::n_vertices() const {
    if (graph) return graph->n_vertices();
    if (digraph) return digraph->n_vertices();
    if (partition) return partition->n_vertices();
    if (arcs) return arcs->n_vertices();
    return 0;
}

std::size_t GadgetInstance::n_edges() const {
    if (graph) return graph->n_edges();
    if (digraph) return digraph->n_arcs();
    if (partition) return partition->union_graph().n_edges();
    if (arcs) return arcs->union_digraph().n_arcs();
    return 0;
}

namespace {

std::string label(const char* base, std::size_t i) {
    return std::string(base) + "_" + std::to_string(i);
}

std::string label(const char* base, std::size_t i, const char* sup) {
    return label(base, i) + "^" + sup;
}

void require_length(const BitVector& v, std::size_t n, const char* who) {
    if (v.size() != n) throw std::invalid_argument(std::string(who) + ": input length mismatch");
}

std::string describe(const std::vector<BitVector>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += "|";
        s += vs[i].to_string();
    }
    return s;
}

std::string describe(const std::vector<BitMatrix>& ms) {
    std::string s;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (k) s += "|";
        for (std::size_t i = 0; i < ms[k].dim(); ++i) {
            if (i) s += "/";
            for (std::size_t j = 0; j < ms[k].dim(); ++j) s += ms[k].at(i, j) ? '1' : '0';
        }
    }
    return s;
}

}  // namespace

Graph build_parity_connectivity(const BitVector& z) {
    const std::size_t n = z.size();
    if (n < 3) throw std::invalid_argument("parity-conn: need n >= 3");
    Graph g(2 * n);
    auto t = [&](std::size_t i) { return static_cast<Vertex>(i); };
    auto b = [&](std::size_t i) { return static_cast<Vertex>(n + i); };
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        if (!z[i]) {
            g.add_edge(t(i), t(next));
            g.add_edge(b(i), b(next));
        } else {
            g.add_edge(t(i), b(next));
            g.add_edge(b(i), t(next));
        }
    }
    return g;
}

GadgetInstance build_parity_connectivity_instance(const BitVector& z) {
    GadgetInstance inst;
    inst.kind = GadgetKind::parity_conn;
    inst.n = z.size();
    inst.graph = build_parity_connectivity(z);
    for (std::size_t i = 0; i < inst.n; ++i) {
        inst.roles[static_cast<Vertex>(i)] = label("t", i + 1);
        inst.roles[static_cast<Vertex>(inst.n + i)] = label("b", i + 1);
    }
    inst.expected = static_cast<std::int64_t>(z.weight() % 2);
    inst.input_desc = z.to_string();
    return inst;
}

GadgetInstance build_ip_connectivity(const BitVector& x, const BitVector& y) {
    const std::size_t n = x.size();
    require_length(y, n, "ip-conn");
    if (n < 3) throw std::invalid_argument("ip-conn: need n >= 3");

    auto t = [&](std::size_t i) { return static_cast<Vertex>(i); };
    auto b = [&](std::size_t i) { return static_cast<Vertex>(n + i); };
    auto ktt = [&](std::size_t i) { return static_cast<Vertex>(2 * n + i); };
    auto kbb = [&](std::size_t i) { return static_cast<Vertex>(3 * n + i); };
    auto ktb = [&](std::size_t i) { return static_cast<Vertex>(4 * n + i); };
    auto kbt = [&](std::size_t i) { return static_cast<Vertex>(5 * n + i); };
    auto ltt = [&](std::size_t i) { return static_cast<Vertex>(6 * n + i); };
    auto lbb = [&](std::size_t i) { return static_cast<Vertex>(7 * n + i); };
    auto ltb = [&](std::size_t i) { return static_cast<Vertex>(8 * n + i); };
    auto lbt = [&](std::size_t i) { return static_cast<Vertex>(9 * n + i); };

    EdgeSet a, bset;
    auto alice = [&](Vertex u, Vertex v) { a.insert(make_edge(u, v)); };
    auto bob = [&](Vertex u, Vertex v) { bset.insert(make_edge(u, v)); };

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        // horizontal gadgets: connected across iff x_i y_i = 0
        if (!x[i]) alice(t(i), ktt(i));
        if (!y[i]) bob(t(i), ltt(i));
        alice(ktt(i), t(next));
        alice(ltt(i), t(next));
        if (!x[i]) alice(b(i), kbb(i));
        if (!y[i]) bob(b(i), lbb(i));
        alice(kbb(i), b(next));
        alice(lbb(i), b(next));
        // diagonal gadgets: connected across iff x_i y_i = 1
        alice(t(i), ktb(i));
        if (x[i]) alice(t(i), ltb(i));
        if (!y[i]) bob(ktb(i), ltb(i));
        if (y[i]) bob(ltb(i), b(next));
        alice(b(i), kbt(i));
        if (x[i]) alice(b(i), lbt(i));
        if (!y[i]) bob(kbt(i), lbt(i));
        if (y[i]) bob(lbt(i), t(next));
    }

    GadgetInstance inst;
    inst.kind = GadgetKind::ip_conn;
    inst.n = n;
    inst.partition = EdgePartition(10 * n, std::move(a), std::move(bset), /*assert_disjoint=*/true);
    for (std::size_t i = 0; i < n; ++i) {
        inst.roles[t(i)] = label("t", i + 1);
        inst.roles[b(i)] = label("b", i + 1);
        inst.roles[ktt(i)] = label("k", i + 1, "tt");
        inst.roles[kbb(i)] = label("k", i + 1, "bb");
        inst.roles[ktb(i)] = label("k", i + 1, "tb");
        inst.roles[kbt(i)] = label("k", i + 1, "bt");
        inst.roles[ltt(i)] = label("l", i + 1, "tt");
        inst.roles[lbb(i)] = label("l", i + 1, "bb");
        inst.roles[ltb(i)] = label("l", i + 1, "tb");
        inst.roles[lbt(i)] = label("l", i + 1, "bt");
    }
    inst.expected = inner_product(x, y);
    inst.input_desc = x.to_string() + "|" + y.to_string();
    return inst;
}

GadgetInstance build_ip_matching(const BitVector& x, const BitVector& y, MatchVariant variant) {
    const std::size_t n = x.size();
    require_length(y, n, "ip-match");
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("ip-match: need odd n >= 3");

    const bool disjoint = variant == MatchVariant::disjoint;
    const std::size_t total = disjoint ? 10 * n : 6 * n;

    auto t = [&](std::size_t i) { return static_cast<Vertex>(i); };
    auto b = [&](std::size_t i) { return static_cast<Vertex>(n + i); };
    auto kt = [&](std::size_t i) { return static_cast<Vertex>(2 * n + i); };
    auto kb = [&](std::size_t i) { return static_cast<Vertex>(3 * n + i); };
    auto lt = [&](std::size_t i) { return static_cast<Vertex>(4 * n + i); };
    auto lb = [&](std::size_t i) { return static_cast<Vertex>(5 * n + i); };
    auto ut = [&](std::size_t i) { return static_cast<Vertex>(6 * n + i); };
    auto vt = [&](std::size_t i) { return static_cast<Vertex>(7 * n + i); };
    auto ub = [&](std::size_t i) { return static_cast<Vertex>(8 * n + i); };
    auto vb = [&](std::size_t i) { return static_cast<Vertex>(9 * n + i); };

    EdgeSet a, bset;
    auto alice = [&](Vertex u, Vertex v) { a.insert(make_edge(u, v)); };
    auto bob = [&](Vertex u, Vertex v) { bset.insert(make_edge(u, v)); };

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        alice(kt(i), lb(i));
        alice(kb(i), lt(i));
        if (disjoint) {
            // horizontal edges via fresh u,v so the parties stay disjoint
            alice(ut(i), vt(i));
            alice(ub(i), vb(i));
            if (!x[i]) {
                alice(t(i), ut(i));
                alice(vt(i), t(next));
                alice(b(i), ub(i));
                alice(vb(i), b(next));
            }
            if (!y[i]) {
                bob(t(i), vt(i));
                bob(ut(i), t(next));
                bob(b(i), vb(i));
                bob(ub(i), b(next));
            }
        } else {
            if (!x[i]) {
                alice(t(i), t(next));
                alice(b(i), b(next));
            }
            if (!y[i]) {
                bob(t(i), t(next));
                bob(b(i), b(next));
            }
        }
        if (x[i]) {
            alice(t(i), kt(i));
            alice(b(i), kb(i));
        }
        if (y[i]) {
            bob(t(next), lt(i));
            bob(b(next), lb(i));
        }
    }

    GadgetInstance inst;
    inst.kind = GadgetKind::ip_match;
    inst.n = n;
    inst.partition = EdgePartition(total, std::move(a), std::move(bset), disjoint);
    for (std::size_t i = 0; i < n; ++i) {
        inst.roles[t(i)] = label("t", i + 1);
        inst.roles[b(i)] = label("b", i + 1);
        inst.roles[kt(i)] = label("k", i + 1, "t");
        inst.roles[kb(i)] = label("k", i + 1, "b");
        inst.roles[lt(i)] = label("l", i + 1, "t");
        inst.roles[lb(i)] = label("l", i + 1, "b");
        if (disjoint) {
            inst.roles[ut(i)] = label("u", i + 1, "t");
            inst.roles[vt(i)] = label("v", i + 1, "t");
            inst.roles[ub(i)] = label("u", i + 1, "b");
            inst.roles[vb(i)] = label("v", i + 1, "b");
        }
    }
    inst.expected = inner_product(x, y);
    inst.input_desc = x.to_string() + "|" + y.to_string();
    return inst;
}

namespace {

void det_roles(RoleMap& roles, std::size_t n) {
    roles[0] = "s";
    roles[static_cast<Vertex>(n + 1)] = "t";
    for (std::size_t i = 0; i < n; ++i) {
        roles[static_cast<Vertex>(1 + i)] = label("l", i + 1);
        roles[static_cast<Vertex>(n + 2 + i)] = label("r", i + 1);
    }
}

void check_det_dim(std::size_t n, const char* who) {
    if (n < 1 || n > 6)
        throw std::invalid_argument(std::string(who) + ": need 1 <= n <= 6");
}

}  // namespace

DiGraph build_parity_determinant(const BitMatrix& z) {
    const std::size_t n = z.dim();
    check_det_dim(n, "parity-det");
    DiGraph d(2 * n + 2);
    const Vertex s = 0, tt = static_cast<Vertex>(n + 1);
    auto l = [&](std::size_t i) { return static_cast<Vertex>(1 + i); };
    auto r = [&](std::size_t j) { return static_cast<Vertex>(n + 2 + j); };
    for (std::size_t i = 0; i < n; ++i) {
        d.add_arc(s, l(i));
        d.add_arc(r(i), tt);
        d.add_arc(l(i), l(i));
        d.add_arc(r(i), r(i));
        for (std::size_t j = 0; j < n; ++j)
            if (z.at(i, j)) d.add_arc(l(i), r(j));
    }
    d.add_arc(tt, s);
    return d;
}

GadgetInstance build_parity_determinant_instance(const BitMatrix& z) {
    GadgetInstance inst;
    inst.kind = GadgetKind::parity_det;
    inst.n = z.dim();
    inst.digraph = build_parity_determinant(z);
    det_roles(inst.roles, inst.n);
    inst.expected = -static_cast<std::int64_t>(z.weight());
    inst.input_desc = describe(std::vector<BitMatrix>{z});
    return inst;
}

GadgetInstance build_det_instance(const BitMatrix& x, const BitMatrix& y) {
    const std::size_t n = x.dim();
    if (y.dim() != n) throw std::invalid_argument("det-comm: shape mismatch");
    check_det_dim(n, "det-comm");

    const Vertex s = 0, tt = static_cast<Vertex>(n + 1);
    auto l = [&](std::size_t i) { return static_cast<Vertex>(1 + i); };
    auto r = [&](std::size_t j) { return static_cast<Vertex>(n + 2 + j); };

    ArcSet a, b;
    for (std::size_t i = 0; i < n; ++i) {
        a.insert({s, l(i)});
        a.insert({l(i), l(i)});
        b.insert({r(i), tt});
        b.insert({r(i), r(i)});
        for (std::size_t j = 0; j < n; ++j) {
            if (!x.at(i, j)) a.insert({l(i), r(j)});
            if (!y.at(i, j)) b.insert({l(i), r(j)});
        }
    }
    a.insert({tt, s});

    GadgetInstance inst;
    inst.kind = GadgetKind::det_comm;
    inst.n = n;
    inst.arcs = ArcPartition(2 * n + 2, std::move(a), std::move(b));
    det_roles(inst.roles, n);
    inst.expected = -static_cast<std::int64_t>(n * n - and_weight(x, y));
    inst.input_desc = describe(std::vector<BitMatrix>{x, y});
    return inst;
}

namespace {

struct EulerLayout {
    std::size_t n;
    Vertex l(std::size_t i) const { return static_cast<Vertex>(i); }                  // 0..n+1
    Vertex r(std::size_t i) const { return static_cast<Vertex>(n + 2 + i); }          // 0..n+1
    Vertex m(std::size_t j) const { return static_cast<Vertex>(2 * (n + 2) + j); }    // 0..n-1 for m_1..m_n

    template <typename Add>
    void fixed_edges(Add&& add) const {
        for (std::size_t i = 0; i <= n; ++i) {
            add(l(i), l(i + 1));
            add(r(i), r(i + 1));
        }
        for (std::size_t j = 0; j + 1 < n; ++j) add(m(j), m(j + 1));
        add(l(0), m(0));
        add(r(0), m(0));
        add(l(n + 1), m(n - 1));
        add(r(n + 1), m(n - 1));
        add(m(0), m(n - 1));
    }

    void roles(RoleMap& roles) const {
        for (std::size_t i = 0; i <= n + 1; ++i) {
            roles[l(i)] = label("l", i);
            roles[r(i)] = label("r", i);
        }
        for (std::size_t j = 0; j < n; ++j) roles[m(j)] = label("m", j + 1);
    }
};

void check_euler_rows(const std::vector<BitVector>& rows, std::size_t n, const char* who) {
    if (rows.size() != n) throw std::invalid_argument(std::string(who) + ": need n rows");
    for (const auto& row : rows) require_length(row, n, who);
}

}  // namespace

GadgetInstance build_or_ip_euler_query(const std::vector<BitVector>& zs) {
    const std::size_t n = zs.size();
    if (n < 3) throw std::invalid_argument("or-ip-euler: need n >= 3");
    check_euler_rows(zs, n, "or-ip-euler");

    EulerLayout lay{n};
    Graph g(3 * n + 4);
    lay.fixed_edges([&](Vertex u, Vertex v) { g.add_edge(u, v); });
    bool all_even = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (zs[i].weight() % 2 != 0) all_even = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (zs[i][j]) {
                g.add_edge(lay.l(i + 1), lay.m(j));
                g.add_edge(lay.r(i + 1), lay.m(j));
            }
        }
    }

    GadgetInstance inst;
    inst.kind = GadgetKind::euler_query;
    inst.n = n;
    inst.graph = std::move(g);
    lay.roles(inst.roles);
    inst.expected = all_even ? 1 : 0;
    inst.input_desc = describe(zs);
    return inst;
}

GadgetInstance build_or_ip_euler_comm(const std::vector<BitVector>& xs,
                                      const std::vector<BitVector>& ys) {
    const std::size_t n = xs.size();
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("or-ip-euler-comm: need even n >= 4");
    check_euler_rows(xs, n, "or-ip-euler-comm");
    check_euler_rows(ys, n, "or-ip-euler-comm");

    EulerLayout lay{n};
    EdgeSet a, b;
    lay.fixed_edges([&](Vertex u, Vertex v) { a.insert(make_edge(u, v)); });
    bool any_ip = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (inner_product(xs[i], ys[i]) == 1) any_ip = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (!xs[i][j]) {
                a.insert(make_edge(lay.l(i + 1), lay.m(j)));
                a.insert(make_edge(lay.r(i + 1), lay.m(j)));
            }
            if (!ys[i][j]) {
                b.insert(make_edge(lay.l(i + 1), lay.m(j)));
                b.insert(make_edge(lay.r(i + 1), lay.m(j)));
            }
        }
    }

    GadgetInstance inst;
    inst.kind = GadgetKind::euler_comm;
    inst.n = n;
    inst.partition = EdgePartition(3 * n + 4, std::move(a), std::move(b));
    lay.roles(inst.roles);
    inst.expected = any_ip ? 0 : 1;
    std::string desc = describe(xs);
    desc += "||";
    desc += describe(ys);
    inst.input_desc = std::move(desc);
    return inst;
}

// --- verification ----------------------------------------------------------

namespace {

struct CaseInputs {
    std::vector<BitVector> vectors;
    std::vector<BitMatrix> matrices;

    std::string describe_all() const {
        if (!matrices.empty()) return describe(matrices);
        return describe(vectors);
    }
};

/// Bits of input per case.
unsigned input_bits(GadgetKind kind, std::size_t n) {
    switch (kind) {
        case GadgetKind::parity_conn: return static_cast<unsigned>(n);
        case GadgetKind::ip_conn:
        case GadgetKind::ip_match: return static_cast<unsigned>(2 * n);
        case GadgetKind::parity_det:
        case GadgetKind::euler_query: return static_cast<unsigned>(n * n);
        case GadgetKind::det_comm:
        case GadgetKind::euler_comm: return static_cast<unsigned>(2 * n * n);
    }
    return 0;
}

BitVector random_vector(Rng& rng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng.next_u64() & 1);
    return v;
}

BitMatrix random_matrix(Rng& rng, std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.next_u64() & 1);
    return m;
}

std::vector<BitVector> rows_from_value(std::uint64_t v, std::size_t n) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(BitVector::from_value((v >> (i * n)) & ((n >= 64) ? ~0ULL : ((1ULL << n) - 1)), n));
    return rows;
}

CaseInputs inputs_from_index(GadgetKind kind, std::size_t n, std::uint64_t v) {
    CaseInputs in;
    switch (kind) {
        case GadgetKind::parity_conn:
            in.vectors.push_back(BitVector::from_value(v, n));
            break;
        case GadgetKind::ip_conn:
        case GadgetKind::ip_match:
            in.vectors.push_back(BitVector::from_value(v & ((1ULL << n) - 1), n));
            in.vectors.push_back(BitVector::from_value(v >> n, n));
            break;
        case GadgetKind::parity_det:
            in.matrices.push_back(BitMatrix::from_value(v, n));
            break;
        case GadgetKind::det_comm:
            in.matrices.push_back(BitMatrix::from_value(v & ((1ULL << (n * n)) - 1), n));
            in.matrices.push_back(BitMatrix::from_value(v >> (n * n), n));
            break;
        case GadgetKind::euler_query:
            in.vectors = rows_from_value(v, n);
            break;
        case GadgetKind::euler_comm: {
            in.vectors = rows_from_value(v & ((1ULL << (n * n)) - 1), n);
            auto ys = rows_from_value(v >> (n * n), n);
            in.vectors.insert(in.vectors.end(), ys.begin(), ys.end());
            break;
        }
    }
    return in;
}

CaseInputs inputs_from_rng(GadgetKind kind, std::size_t n, Rng& rng) {
    CaseInputs in;
    switch (kind) {
        case GadgetKind::parity_conn:
            in.vectors.push_back(random_vector(rng, n));
            break;
        case GadgetKind::ip_conn:
        case GadgetKind::ip_match:
            in.vectors.push_back(random_vector(rng, n));
            in.vectors.push_back(random_vector(rng, n));
            break;
        case GadgetKind::parity_det:
            in.matrices.push_back(random_matrix(rng, n));
            break;
        case GadgetKind::det_comm:
            in.matrices.push_back(random_matrix(rng, n));
            in.matrices.push_back(random_matrix(rng, n));
            break;
        case GadgetKind::euler_query:
            for (std::size_t i = 0; i < n; ++i) in.vectors.push_back(random_vector(rng, n));
            break;
        case GadgetKind::euler_comm:
            for (std::size_t i = 0; i < 2 * n; ++i) in.vectors.push_back(random_vector(rng, n));
            break;
    }
    return in;
}

bool check_parity_conn(const BitVector& z) {
    Graph g = build_parity_connectivity(z);
    if (g.n_vertices() != 2 * z.size()) return false;
    for (Vertex v = 0; v < g.n_vertices(); ++v)
        if (g.degree(v) != 2) return false;
    const std::size_t want = (z.weight() % 2 == 1) ? 1 : 2;
    return connected_components(g).size() == want;
}

bool check_ip_conn(const BitVector& x, const BitVector& y) {
    GadgetInstance inst = build_ip_connectivity(x, y);
    const Graph u = inst.partition->union_graph();
    if (inst.n_vertices() != 10 * x.size()) return false;
    if (u.n_edges() > 16 * x.size()) return false;
    for (const auto& e : inst.partition->edges_a())
        if (inst.partition->edges_b().count(e)) return false;
    return is_connected(u) == (inst.expected == 1);
}

bool check_ip_match(const BitVector& x, const BitVector& y, MatchVariant variant) {
    GadgetInstance inst = build_ip_matching(x, y, variant);
    const std::size_t want = (variant == MatchVariant::disjoint ? 10 : 6) * x.size();
    if (inst.n_vertices() != want) return false;
    if (variant == MatchVariant::disjoint) {
        for (const auto& e : inst.partition->edges_a())
            if (inst.partition->edges_b().count(e)) return false;
    }
    return has_perfect_matching_exact(inst.partition->union_graph()) == (inst.expected == 1);
}

bool check_parity_det(const BitMatrix& z) {
    DiGraph d = build_parity_determinant(z);
    if (d.n_vertices() != 2 * z.dim() + 2) return false;
    return det_integer(d) == -static_cast<std::int64_t>(z.weight());
}

bool check_det_comm(const BitMatrix& x, const BitMatrix& y) {
    GadgetInstance inst = build_det_instance(x, y);
    if (inst.n_vertices() != 2 * x.dim() + 2) return false;
    return det_integer(inst.arcs->union_digraph()) == inst.expected;
}

bool check_euler_query(const std::vector<BitVector>& zs) {
    GadgetInstance inst = build_or_ip_euler_query(zs);
    if (inst.n_vertices() != 3 * zs.size() + 4) return false;
    return is_eulerian(*inst.graph) == (inst.expected == 1);
}

bool check_euler_comm(const std::vector<BitVector>& xs, const std::vector<BitVector>& ys) {
    GadgetInstance inst = build_or_ip_euler_comm(xs, ys);
    if (inst.n_vertices() != 3 * xs.size() + 4) return false;
    return is_eulerian(inst.partition->union_graph()) == (inst.expected == 1);
}

/// Runs one case; returns the number of sub-cases (ip_match counts both
/// variants) and bumps the mismatch records on failure.
std::uint64_t run_case(GadgetKind kind, const CaseInputs& in, VerifyReport& report) {
    auto note = [&](bool ok, const std::string& tag) {
        if (!ok) {
            ++report.mismatches;
            if (report.first_failure.empty())
                report.first_failure = tag.empty() ? in.describe_all() : tag + ":" + in.describe_all();
        }
    };
    switch (kind) {
        case GadgetKind::parity_conn:
            note(check_parity_conn(in.vectors[0]), "");
            return 1;
        case GadgetKind::ip_conn:
            note(check_ip_conn(in.vectors[0], in.vectors[1]), "");
            return 1;
        case GadgetKind::ip_match:
            note(check_ip_match(in.vectors[0], in.vectors[1], MatchVariant::overlap), "overlap");
            note(check_ip_match(in.vectors[0], in.vectors[1], MatchVariant::disjoint), "disjoint");
            return 2;
        case GadgetKind::parity_det:
            note(check_parity_det(in.matrices[0]), "");
            return 1;
        case GadgetKind::det_comm:
            note(check_det_comm(in.matrices[0], in.matrices[1]), "");
            return 1;
        case GadgetKind::euler_query:
            note(check_euler_query(in.vectors), "");
            return 1;
        case GadgetKind::euler_comm: {
            std::vector<BitVector> xs(in.vectors.begin(), in.vectors.begin() + in.vectors.size() / 2);
            std::vector<BitVector> ys(in.vectors.begin() + in.vectors.size() / 2, in.vectors.end());
            note(check_euler_comm(xs, ys), "");
            return 1;
        }
    }
    return 0;
}

}  // namespace

std::string VerifyReport::csv() const {
    std::ostringstream os;
    os << "kind,n,cases,mismatches,seed\n"
       << gadget_name(kind) << ',' << n << ',' << cases << ',' << mismatches << ',' << seed << '\n';
    return os.str();
}

VerifyReport verify_reduction(GadgetKind kind, std::size_t n, bool exhaustive,
                              std::uint64_t samples, std::uint64_t seed) {
    VerifyReport report;
    report.kind = kind;
    report.n = n;
    report.exhaustive = exhaustive;
    report.seed = seed;

    const unsigned bits = input_bits(kind, n);
    if (exhaustive) {
        if (bits > 20)
            throw InfeasibleError("exhaustive verification infeasible: input space is 2^" +
                                      std::to_string(bits) + " cases",
                                  bits);
        const std::uint64_t total = 1ULL << bits;
        for (std::uint64_t v = 0; v < total; ++v)
            report.cases += run_case(kind, inputs_from_index(kind, n, v), report);
    } else {
        for (std::uint64_t i = 0; i < samples; ++i) {
            Rng rng(derive_seed(seed, i));
            report.cases += run_case(kind, inputs_from_rng(kind, n, rng), report);
        }
    }
    return report;
}

}  // namespace gcomm
