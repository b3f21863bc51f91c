#include "cores/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <unordered_set>

#include "cores/decompose.hpp"

namespace cores {

namespace {

// Bounded draw via 128-bit multiply: identical output on every platform for
// a given seed, unlike std::uniform_int_distribution.
VertexId bounded(std::mt19937_64& rng, std::uint64_t bound) {
    return static_cast<VertexId>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

}  // namespace

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::size_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
    if (m > max_edges)
        throw InputError("cannot place " + std::to_string(m) + " simple edges on " +
                         std::to_string(n) + " vertices");

    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        VertexId u = bounded(rng, n);
        VertexId v = bounded(rng, n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second)
            edges.push_back({u, v});
    }
    return build_graph(n, edges, /*directed=*/false);
}

std::vector<BenchSample> run_ladder(std::span<const BenchScale> ladder, std::uint64_t seed,
                                    int repeats) {
    std::vector<BenchSample> samples;
    samples.reserve(ladder.size());
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        const Graph g = random_graph(ladder[i].n, ladder[i].m, seed + i);
        BenchSample sample{ladder[i].n, ladder[i].m, 0.0, 0};
        for (int r = 0; r < std::max(repeats, 1); ++r) {
            const auto begin = std::chrono::steady_clock::now();
            const CoreAssignment assignment = core_decompose(g, DegreeMode::Undirected);
            const auto end = std::chrono::steady_clock::now();
            const double seconds = std::chrono::duration<double>(end - begin).count();
            if (r == 0 || seconds < sample.seconds) sample.seconds = seconds;
            sample.max_core = assignment.max_core();
        }
        samples.push_back(sample);
    }
    return samples;
}

void write_bench_csv(std::ostream& out, const char* ladder_name,
                     std::span<const BenchSample> samples, bool header) {
    if (header) out << "ladder,n,m,seconds,ratio\n";
    char buf[64];
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out << ladder_name << ',' << samples[i].n << ',' << samples[i].m << ',';
        std::snprintf(buf, sizeof buf, "%.6f", samples[i].seconds);
        out << buf << ',';
        if (i > 0 && samples[i - 1].seconds > 0.0) {
            std::snprintf(buf, sizeof buf, "%.3f", samples[i].seconds / samples[i - 1].seconds);
            out << buf;
        }
        out << '\n';
    }
}

void write_bench_report(std::ostream& out, const char* ladder_name,
                        std::span<const BenchSample> samples) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-12s %10s %10s %12s %8s\n", ladder_name, "n", "m",
                  "time[s]", "ratio");
    out << buf;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        std::string ratio = "-";
        if (i > 0 && samples[i - 1].seconds > 0.0) {
            char rbuf[32];
            std::snprintf(rbuf, sizeof rbuf, "%.2f", samples[i].seconds / samples[i - 1].seconds);
            ratio = rbuf;
        }
        std::snprintf(buf, sizeof buf, "%-12s %10zu %10zu %12.6f %8s\n", "", samples[i].n,
                      samples[i].m, samples[i].seconds, ratio.c_str());
        out << buf;
    }
}

}  // namespace cores
