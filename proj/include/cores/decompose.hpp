#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cores/graph.hpp"

namespace cores {

// Per-vertex core numbers under one degree mode: core[v] is the largest k
// such that v belongs to the k-core. Vertices of degree 0 have core 0.
struct CoreAssignment {
    std::vector<std::uint32_t> core;
    DegreeMode mode = DegreeMode::Undirected;

    std::size_t size() const noexcept { return core.size(); }
    // Order of the main core; 0 for the empty graph.
    std::uint32_t max_core() const noexcept;
};

// Read-only snapshot of the peeling state, published at the top of every
// main-loop iteration:
//   working_degree  current degrees; entries at order[0..step-1] are final cores
//   order           vertices sorted by working degree (the unprocessed suffix)
//   position        inverse of order: order[position[v]] == v
//   bucket_start    for each degree d, index in order of the first vertex of
//                   that degree (entries at or below the current level go
//                   stale once their bucket empties)
//   step            index into order of the vertex about to be processed
struct PeelStateView {
    std::span<const std::uint32_t> working_degree;
    std::span<const VertexId> order;
    std::span<const std::uint32_t> position;
    std::span<const std::uint32_t> bucket_start;
    std::size_t step = 0;
};

using PeelObserver = std::function<void(const PeelStateView&)>;

// Cores decomposition by bucket peeling in O(max(m, n)) time. The result
// agrees with peel_oracle on every input. Pure function of the graph: safe
// to call concurrently on the same Graph.
CoreAssignment core_decompose(const Graph& g, DegreeMode mode);

struct PeelResult {
    CoreAssignment assignment;
    std::vector<VertexId> order;  // vertices in the order they were peeled
};

// Same algorithm, also reporting the peel order and, when an observer is
// given, publishing the internal state before each main-loop step.
PeelResult core_decompose_traced(const Graph& g, DegreeMode mode,
                                 const PeelObserver& observer = {});

// {v : core[v] >= k}, ascending. k = 0 returns every vertex.
std::vector<VertexId> k_core_vertices(const CoreAssignment& assignment, std::uint32_t k);

struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> original_id;  // new dense id -> id in the source graph
};

// Subgraph induced by the k-core members; every vertex of the result has
// mode-degree >= k inside the result.
InducedSubgraph k_core_subgraph(const Graph& g, const CoreAssignment& assignment, std::uint32_t k);

struct CoreSummaryRow {
    std::uint32_t k = 0;
    std::size_t count = 0;            // vertices with core number exactly k
    double percent = 0.0;             // count / n * 100
    std::size_t cumulative = 0;       // size of the k-core
    double cumulative_percent = 0.0;  // cumulative / n * 100
};

// Rows ordered by k descending, one per nonzero count; the top row is the
// main core and the bottom row accumulates to n.
struct CoreSummary {
    std::size_t vertex_count = 0;
    std::vector<CoreSummaryRow> rows;
};

CoreSummary summarize(const CoreAssignment& assignment);

}  // namespace cores
