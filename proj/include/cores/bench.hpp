#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cores/graph.hpp"

namespace cores {

// Uniform random simple undirected graph with exactly m edges, drawn by edge
// sampling with rejection of duplicates and loops. A fixed seed reproduces
// the same graph on every run.
Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

struct BenchScale {
    std::size_t n = 0;
    std::size_t m = 0;
};

struct BenchSample {
    std::size_t n = 0;
    std::size_t m = 0;
    double seconds = 0.0;        // best decomposition wall time over the repeats
    std::uint32_t max_core = 0;  // main core order, as a result sink
};

// Generates one graph per ladder entry and times core_decompose on it,
// keeping the best of `repeats` runs. Generation is not timed.
std::vector<BenchSample> run_ladder(std::span<const BenchScale> ladder, std::uint64_t seed,
                                    int repeats = 3);

// CSV rows `ladder,n,m,seconds,ratio` (ratio of successive times, blank for
// the first row of a ladder).
void write_bench_csv(std::ostream& out, const char* ladder_name,
                     std::span<const BenchSample> samples, bool header);

// Aligned human-readable table of the same data.
void write_bench_report(std::ostream& out, const char* ladder_name,
                        std::span<const BenchSample> samples);

}  // namespace cores
