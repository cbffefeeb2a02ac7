#pragma once

#include "gcomm/graph.hpp"
#include "gcomm/runtime.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gcomm {

/// Erdos-Renyi G(n, p); each pair drawn independently, fixed scan order.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Bipartite G(nl, nr, p) on vertices [0, nl) vs [nl, nl + nr).
Graph random_bipartite(std::size_t nl, std::size_t nr, double p, std::uint64_t seed);

struct BenchRecord {
    std::string protocol;
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string output;
    std::size_t bits = 0;
    std::size_t rounds = 0;
    double ms = 0.0;
};

inline constexpr const char* kBenchCsvHeader = "protocol,n,trial,seed,output,bits,rounds,ms";

std::string bench_csv_row(const BenchRecord& r);

struct BenchResult {
    std::vector<BenchRecord> records;
    double slope = 0.0;  // log-log fit of mean bits vs n
};

/// Least-squares slope of ln(y) against ln(x).
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

/// Runs `trials` seeded instances per size. matching-hk draws bipartite
/// G(n,n,0.5) (2n vertices, left side [0,n)); every other protocol draws
/// G(n, 2 ln n / n). Edges are split randomly per trial.
BenchResult run_bench(ProtocolId id, const std::vector<std::size_t>& sizes,
                      std::size_t trials, std::uint64_t seed);

}  // namespace gcomm
