#include "gcomm/bench.hpp"

#include "gcomm/rng.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gcomm {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) g.add_edge(u, v);
    return g;
}

Graph random_bipartite(std::size_t nl, std::size_t nr, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(nl + nr);
    for (Vertex l = 0; l < nl; ++l)
        for (Vertex r = 0; r < nr; ++r)
            if (rng.next_bool(p)) g.add_edge(l, static_cast<Vertex>(nl + r));
    return g;
}

std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream os;
    os << r.protocol << ',' << r.n << ',' << r.trial << ',' << r.seed << ','
       << r.output << ',' << r.bits << ',' << r.rounds << ',';
    os.precision(3);
    os << std::fixed << r.ms;
    return os.str();
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) return 0.0;
    double sx = 0, sy = 0;
    for (const auto& [x, y] : points) {
        sx += std::log(x);
        sy += std::log(y);
    }
    const double mx = sx / points.size(), my = sy / points.size();
    double num = 0, den = 0;
    for (const auto& [x, y] : points) {
        const double dx = std::log(x) - mx;
        num += dx * (std::log(y) - my);
        den += dx * dx;
    }
    return den == 0 ? 0.0 : num / den;
}

BenchResult run_bench(ProtocolId id, const std::vector<std::size_t>& sizes,
                      std::size_t trials, std::uint64_t seed) {
    BenchResult result;
    std::vector<std::pair<double, double>> mean_bits;

    for (std::size_t n : sizes) {
        if (n < 4) throw std::invalid_argument("bench: sizes must be >= 4");
        const std::uint64_t size_seed = derive_seed(seed, n);
        double bits_sum = 0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const std::uint64_t trial_seed = derive_seed(size_seed, trial);

            Graph g;
            ProtocolParams params;
            if (id == ProtocolId::matching_hk) {
                g = random_bipartite(n, n, 0.5, derive_seed(trial_seed, 1));
                for (Vertex v = 0; v < n; ++v) params.left_set.insert(v);
            } else {
                const double p = std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n));
                g = random_graph(n, p, derive_seed(trial_seed, 1));
            }
            const EdgePartition inst = split_edges(g, SplitMode::random, derive_seed(trial_seed, 2));

            const auto t0 = std::chrono::steady_clock::now();
            const RunResult rr = run_protocol(id, inst, params, derive_seed(trial_seed, 3));
            const auto t1 = std::chrono::steady_clock::now();

            const auto cost = rr.outcome.transcript.cost();
            BenchRecord rec;
            rec.protocol = protocol_name(id);
            rec.n = n;
            rec.trial = trial;
            rec.seed = trial_seed;
            rec.output = result_to_string(rr.outcome.output);
            rec.bits = cost.bits;
            rec.rounds = cost.rounds;
            rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            bits_sum += static_cast<double>(cost.bits);
            result.records.push_back(std::move(rec));
        }
        if (trials > 0 && bits_sum > 0)
            mean_bits.push_back({static_cast<double>(n), bits_sum / static_cast<double>(trials)});
    }

    result.slope = fit_loglog_slope(mean_bits);
    return result;
}

}  // namespace gcomm
