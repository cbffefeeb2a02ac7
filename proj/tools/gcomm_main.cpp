// Command-line front end: generate reduction instances, verify their
// iff-claims, run protocols on edge-partitioned graphs, benchmark costs.

#include "gcomm/bench.hpp"
#include "gcomm/bitvec.hpp"
#include "gcomm/io.hpp"
#include "gcomm/oracles.hpp"
#include "gcomm/protocols.hpp"
#include "gcomm/reductions.hpp"
#include "gcomm/rng.hpp"
#include "gcomm/runtime.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace gcomm;

std::uint64_t parse_hex(const std::string& text) {
    std::string body = text;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
    if (body.empty()) throw std::invalid_argument("empty hex value: " + text);
    std::uint64_t v = 0;
    for (char c : body) {
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else throw std::invalid_argument("malformed hex value: " + text);
        if (v >> 60) throw std::invalid_argument("hex value too wide: " + text);
        v = (v << 4) | static_cast<std::uint64_t>(digit);
    }
    return v;
}

BitVector vector_arg(const std::string& text, std::size_t n) {
    return BitVector::from_value(parse_hex(text), n);
}

BitMatrix matrix_arg(const std::string& text, std::size_t n) {
    return BitMatrix::from_value(parse_hex(text), n);
}

std::vector<BitVector> rows_arg(const std::string& text, std::size_t n) {
    const std::uint64_t v = parse_hex(text);
    if (n * n < 64 && (v >> (n * n)) != 0)
        throw std::invalid_argument("value does not fit in " + std::to_string(n * n) + " bits");
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(BitVector::from_value((v >> (i * n)) & ((1ULL << n) - 1), n));
    return rows;
}

std::vector<BitVector> random_rows(Rng& rng, std::size_t n) {
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        BitVector row(n);
        for (std::size_t j = 0; j < n; ++j) row.set(j, rng.next_u64() & 1);
        rows.push_back(row);
    }
    return rows;
}

VertexSet parse_left(const std::string& spec, std::size_t n) {
    VertexSet out;
    if (auto dots = spec.find(".."); dots != std::string::npos) {
        const long a = std::stol(spec.substr(0, dots));
        const long b = std::stol(spec.substr(dots + 2));
        if (a < 0 || b < a) throw std::invalid_argument("bad --left range: " + spec);
        for (long v = a; v <= b; ++v) out.insert(static_cast<Vertex>(v));
    } else {
        std::size_t pos = 0;
        while (pos < spec.size()) {
            std::size_t comma = spec.find(',', pos);
            if (comma == std::string::npos) comma = spec.size();
            out.insert(static_cast<Vertex>(std::stoul(spec.substr(pos, comma - pos))));
            pos = comma + 1;
        }
    }
    for (Vertex v : out)
        if (v >= n) throw std::invalid_argument("--left vertex out of range");
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        out.push_back(std::stoul(spec.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty --sizes list");
    return out;
}

struct GenOptions {
    std::string kind;
    std::size_t n = 0;
    std::string x, y, z;
    bool random = false;
    std::uint64_t seed = 0;
    std::string variant = "overlap";
    std::string out;
    std::string dot;
};

GadgetInstance generate(const GenOptions& opt) {
    const auto kind = gadget_from_name(opt.kind);
    if (!kind) throw std::invalid_argument("unknown reduction kind: " + opt.kind);
    const std::size_t n = opt.n;
    Rng rng(derive_seed(opt.seed, 0xDECAFu));

    auto vec = [&](const std::string& text) -> BitVector {
        if (opt.random) {
            BitVector v(n);
            for (std::size_t i = 0; i < n; ++i) v.set(i, rng.next_u64() & 1);
            return v;
        }
        if (text.empty()) throw std::invalid_argument("missing input bits (or pass --random)");
        return vector_arg(text, n);
    };
    auto mat = [&](const std::string& text) -> BitMatrix {
        if (opt.random) {
            BitMatrix m(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.next_u64() & 1);
            return m;
        }
        if (text.empty()) throw std::invalid_argument("missing input bits (or pass --random)");
        return matrix_arg(text, n);
    };
    auto rows = [&](const std::string& text) -> std::vector<BitVector> {
        if (opt.random) return random_rows(rng, n);
        if (text.empty()) throw std::invalid_argument("missing input bits (or pass --random)");
        return rows_arg(text, n);
    };

    switch (*kind) {
        case GadgetKind::parity_conn: return build_parity_connectivity_instance(vec(opt.z));
        case GadgetKind::ip_conn: return build_ip_connectivity(vec(opt.x), vec(opt.y));
        case GadgetKind::ip_match:
            return build_ip_matching(vec(opt.x), vec(opt.y),
                                     opt.variant == "disjoint" ? MatchVariant::disjoint
                                                               : MatchVariant::overlap);
        case GadgetKind::parity_det: return build_parity_determinant_instance(mat(opt.z));
        case GadgetKind::det_comm: return build_det_instance(mat(opt.x), mat(opt.y));
        case GadgetKind::euler_query: return build_or_ip_euler_query(rows(opt.z));
        case GadgetKind::euler_comm: return build_or_ip_euler_comm(rows(opt.x), rows(opt.y));
    }
    throw std::invalid_argument("unknown reduction kind");
}

void describe_expected(std::ostream& os, const GadgetInstance& inst) {
    switch (inst.kind) {
        case GadgetKind::parity_conn:
            os << "expected parity=" << inst.expected
               << " components=" << (inst.expected == 1 ? 1 : 2);
            break;
        case GadgetKind::ip_conn:
            os << "expected IP=" << inst.expected
               << " connected=" << (inst.expected == 1 ? "true" : "false");
            break;
        case GadgetKind::ip_match:
            os << "expected IP=" << inst.expected
               << " perfect_matching=" << (inst.expected == 1 ? "true" : "false");
            break;
        case GadgetKind::parity_det:
        case GadgetKind::det_comm:
            os << "expected det=" << inst.expected;
            break;
        case GadgetKind::euler_query:
        case GadgetKind::euler_comm:
            os << "expected eulerian=" << (inst.expected == 1 ? "true" : "false");
            break;
    }
}

int cmd_gen(const GenOptions& opt) {
    const GadgetInstance inst = generate(opt);
    if (!opt.out.empty()) {
        if (inst.graph) save_graph(opt.out, *inst.graph);
        else if (inst.digraph) save_digraph(opt.out, *inst.digraph);
        else if (inst.partition) save_partition(opt.out, *inst.partition);
        else if (inst.arcs) save_arc_partition(opt.out, *inst.arcs);
        std::cout << "wrote " << opt.out << "\n";
    }
    if (!opt.dot.empty()) {
        std::ofstream f(opt.dot, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for writing: " + opt.dot);
        if (inst.graph) write_dot(f, *inst.graph, inst.roles);
        else if (inst.digraph) write_dot(f, *inst.digraph, inst.roles);
        else if (inst.partition) write_dot(f, *inst.partition, inst.roles);
        else if (inst.arcs) write_dot(f, *inst.arcs, inst.roles);
        std::cout << "wrote " << opt.dot << "\n";
    }
    std::cout << "kind=" << gadget_name(inst.kind) << " n=" << inst.n
              << " vertices=" << inst.n_vertices() << " edges=" << inst.n_edges() << " ";
    describe_expected(std::cout, inst);
    std::cout << "\n";
    return 0;
}

struct VerifyOptions {
    std::string kind;
    std::size_t n = 0;
    bool exhaustive = false;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::string csv;
};

int cmd_verify(const VerifyOptions& opt) {
    const auto kind = gadget_from_name(opt.kind);
    if (!kind) throw std::invalid_argument("unknown reduction kind: " + opt.kind);
    const VerifyReport report = verify_reduction(*kind, opt.n, opt.exhaustive, opt.samples, opt.seed);

    const std::string csv_path =
        opt.csv.empty() ? "verify_" + gadget_name(*kind) + "_n" + std::to_string(opt.n) + ".csv"
                        : opt.csv;
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + csv_path);
    f << report.csv();
    f.close();

    std::cout << "kind=" << gadget_name(*kind) << " n=" << report.n
              << " cases=" << report.cases << " mismatches=" << report.mismatches
              << " seed=" << report.seed << "\n";
    if (report.mismatches > 0)
        std::cout << "first failure: " << report.first_failure << "\n";
    std::cout << "report: " << csv_path << "\n";
    return report.mismatches == 0 ? 0 : 1;
}

struct RunOptions {
    std::string protocol;
    std::string graph_path;
    std::string partition_path;
    std::string split = "random";
    std::uint64_t seed = 0;
    std::string left;
    std::string transcript_path;
};

int cmd_run(const RunOptions& opt) {
    const auto id = protocol_from_name(opt.protocol);
    if (!id) throw std::invalid_argument("unknown protocol: " + opt.protocol);

    EdgePartition inst;
    if (!opt.partition_path.empty()) {
        inst = load_partition(opt.partition_path);
    } else if (!opt.graph_path.empty()) {
        const Graph g = load_graph(opt.graph_path);
        const auto mode = split_mode_from_name(opt.split);
        if (!mode) throw std::invalid_argument("unknown split mode: " + opt.split);
        inst = split_edges(g, *mode, opt.seed);
    } else {
        throw std::invalid_argument("pass --graph or --partition");
    }

    ProtocolParams params;
    if (!opt.left.empty()) params.left_set = parse_left(opt.left, inst.n_vertices());

    const RunResult rr = run_protocol(*id, inst, params, opt.seed);
    const auto cost = rr.outcome.transcript.cost();

    if (!opt.transcript_path.empty()) {
        std::ofstream f(opt.transcript_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for writing: " + opt.transcript_path);
        dump_transcript(f, rr.outcome.transcript, result_to_string(rr.outcome.output));
    }

    std::cout << "output=" << result_to_string(rr.outcome.output)
              << " bits=" << cost.bits << " rounds=" << cost.rounds << "\n";
    return 0;
}

struct BenchOptions {
    std::string protocol;
    std::string sizes;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    std::string csv;
};

int cmd_bench(const BenchOptions& opt) {
    const auto id = protocol_from_name(opt.protocol);
    if (!id) throw std::invalid_argument("unknown protocol: " + opt.protocol);
    const auto sizes = parse_sizes(opt.sizes);

    const BenchResult result = run_bench(*id, sizes, opt.trials, opt.seed);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.csv.empty()) {
        file.open(opt.csv, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open for writing: " + opt.csv);
        os = &file;
    }
    *os << kBenchCsvHeader << "\n";
    for (const auto& rec : result.records) *os << bench_csv_row(rec) << "\n";
    if (!opt.csv.empty()) std::cout << "wrote " << opt.csv << "\n";
    std::cout.precision(3);
    std::cout << "slope=" << std::fixed << result.slope << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-party communication protocols over edge-partitioned graphs"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* sub_gen = app.add_subcommand("gen", "build a reduction instance and write it to disk");
    sub_gen->add_option("kind", gen.kind, "reduction kind")->required();
    sub_gen->add_option("--n", gen.n, "construction size")->required();
    sub_gen->add_option("--x", gen.x, "Alice input bits (hex)");
    sub_gen->add_option("--y", gen.y, "Bob input bits (hex)");
    sub_gen->add_option("--z", gen.z, "query-world input bits (hex)");
    sub_gen->add_flag("--random", gen.random, "draw inputs from --seed");
    sub_gen->add_option("--seed", gen.seed, "seed for --random");
    sub_gen->add_option("--variant", gen.variant, "ip-match variant: overlap|disjoint");
    sub_gen->add_option("--out", gen.out, "output file path");
    sub_gen->add_option("--dot", gen.dot, "also write DOT with role labels");

    VerifyOptions ver;
    auto* sub_verify = app.add_subcommand("verify", "check a reduction's iff-claim by brute force");
    sub_verify->add_option("kind", ver.kind, "reduction kind")->required();
    sub_verify->add_option("--n", ver.n, "construction size")->required();
    sub_verify->add_flag("--exhaustive", ver.exhaustive, "enumerate the whole input space");
    sub_verify->add_option("--samples", ver.samples, "sampled cases when not exhaustive");
    sub_verify->add_option("--seed", ver.seed, "sampling seed");
    sub_verify->add_option("--csv", ver.csv, "CSV report path");

    RunOptions run;
    auto* sub_run = app.add_subcommand("run", "execute a protocol on an instance");
    sub_run->add_option("protocol", run.protocol,
                        "connectivity|spanning-forest|bipartite|matching-hk|euler-trivial|triangle")
        ->required();
    sub_run->add_option("--graph", run.graph_path, "edge-list file; split locally");
    sub_run->add_option("--partition", run.partition_path, "partition file with A|B|AB tags");
    sub_run->add_option("--split", run.split, "random|interleave|all-alice");
    sub_run->add_option("--seed", run.seed, "split/protocol seed");
    sub_run->add_option("--left", run.left, "left side for matching-hk, e.g. 0..7 or 0,2,4");
    sub_run->add_option("--transcript", run.transcript_path, "dump the transcript here");

    BenchOptions bench;
    auto* sub_bench = app.add_subcommand("bench", "measure protocol cost over random instances");
    sub_bench->add_option("protocol", bench.protocol, "protocol id")->required();
    sub_bench->add_option("--sizes", bench.sizes, "comma list, e.g. 16,32,64")->required();
    sub_bench->add_option("--trials", bench.trials, "trials per size");
    sub_bench->add_option("--seed", bench.seed, "bench seed");
    sub_bench->add_option("--csv", bench.csv, "write records here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_gen->parsed()) return cmd_gen(gen);
        if (sub_verify->parsed()) return cmd_verify(ver);
        if (sub_run->parsed()) return cmd_run(run);
        if (sub_bench->parsed()) return cmd_bench(bench);
    } catch (const gcomm::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
