#pragma once

// Shared helpers for the unit and acceptance suites: random instance
// generators, a reference edit-distance, invariant checkers. Everything here
// is deliberately independent of the optimized code paths it checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cores/decompose.hpp"
#include "cores/graph.hpp"

namespace testsupport {

using cores::CoreAssignment;
using cores::DegreeMode;
using cores::Edge;
using cores::Graph;
using cores::VertexId;

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

inline bool chance(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// G(n,p): every unordered pair independently with probability p.
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (chance(rng, p)) edges.push_back({u, v});
    return cores::build_graph(n, edges, false);
}

// Directed G(n,p): every ordered pair (u != v) independently.
inline Graph random_digraph_gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && chance(rng, p)) edges.push_back({u, v});
    return cores::build_graph(n, edges, true);
}

// Undirected graph on n vertices from an edge-subset bitmask, for exhaustive
// small-graph enumeration. Pair (u,v), u<v, is bit u*(2n-u-1)/2-ish; we just
// enumerate pairs in a fixed order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.push_back({u, v});
    return cores::build_graph(n, edges, false);
}

// Classic dynamic-programming Levenshtein distance; the independent oracle
// for the word-graph builder.
inline std::size_t levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

// Validates the published peeling state at one main-loop step; violations are
// appended to *failures (capped so a broken run cannot flood the log).
class PeelInvariantChecker {
public:
    explicit PeelInvariantChecker(std::vector<std::string>* failures) : failures_(failures) {}

    void operator()(const cores::PeelStateView& view) const {
        const std::size_t n = view.order.size();
        auto fail = [&](const std::string& what) {
            if (failures_->size() < 20)
                failures_->push_back("step " + std::to_string(view.step) + ": " + what);
        };

        for (std::size_t i = 0; i < n; ++i)
            if (view.position[view.order[i]] != i) {
                fail("pos/vert not mutually inverse at index " + std::to_string(i));
                break;
            }

        for (std::size_t j = view.step + 1; j < n; ++j)
            if (view.working_degree[view.order[j]] < view.working_degree[view.order[j - 1]]) {
                fail("suffix not sorted by working degree at index " + std::to_string(j));
                break;
            }

        // Bucket fronts: for every degree above the current level, bin[d]
        // must point at the first unprocessed vertex of working degree >= d.
        // Entries at or below the level go stale once their bucket empties.
        std::uint32_t max_deg = 0;
        for (std::size_t j = view.step; j < n; ++j)
            max_deg = std::max(max_deg, view.working_degree[view.order[j]]);
        const std::uint32_t level =
            view.step < n ? view.working_degree[view.order[view.step]] : 0;

        std::vector<std::size_t> first_at_least(std::size_t{max_deg} + 2, n);
        for (std::size_t j = n; j-- > view.step;) {
            const std::uint32_t d = view.working_degree[view.order[j]];
            first_at_least[d] = j;
        }
        for (std::size_t d = max_deg + 1; d-- > 0;)
            first_at_least[d] = std::min(first_at_least[d], first_at_least[d + 1]);

        for (std::uint32_t d = level + 1; d <= max_deg; ++d)
            if (view.bucket_start[d] != first_at_least[d]) {
                fail("bin[" + std::to_string(d) + "] = " + std::to_string(view.bucket_start[d]) +
                     ", expected " + std::to_string(first_at_least[d]));
                break;
            }
    }

private:
    std::vector<std::string>* failures_;
};

// Structural correctness of an assignment against its graph: degree bound,
// nested cores, min-degree >= k inside every extracted k-core subgraph.
inline std::vector<std::string> check_structure(const Graph& g, const CoreAssignment& a) {
    std::vector<std::string> failures;
    const std::uint32_t top = a.max_core();

    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (a.core[v] > g.degree(v, a.mode)) {
            failures.push_back("core[" + std::to_string(v) + "] exceeds its degree");
            break;
        }

    std::vector<VertexId> previous = cores::k_core_vertices(a, 0);
    if (previous.size() != g.vertex_count()) failures.push_back("0-core is not every vertex");
    for (std::uint32_t k = 1; k <= top + 1; ++k) {
        const std::vector<VertexId> members = cores::k_core_vertices(a, k);
        if (!std::includes(previous.begin(), previous.end(), members.begin(), members.end()))
            failures.push_back("cores not nested at k=" + std::to_string(k));

        const cores::InducedSubgraph sub = cores::k_core_subgraph(g, a, k);
        if (sub.original_id != members)
            failures.push_back("subgraph relabeling mismatch at k=" + std::to_string(k));
        for (VertexId v = 0; v < sub.graph.vertex_count(); ++v)
            if (sub.graph.degree(v, a.mode) < k) {
                failures.push_back("k-core subgraph has degree < k at k=" + std::to_string(k));
                break;
            }
        previous = members;
    }
    if (top > 0 && cores::k_core_vertices(a, top + 1).size() != 0)
        failures.push_back("vertices above the main core order");
    return failures;
}

}  // namespace testsupport
