#include "cores/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace cores {

const char* to_string(DegreeMode mode) noexcept {
    switch (mode) {
        case DegreeMode::Undirected: return "undirected";
        case DegreeMode::In: return "in";
        case DegreeMode::Out: return "out";
        case DegreeMode::InOut: return "inout";
    }
    return "?";
}

void check_mode(const Graph& g, DegreeMode mode) {
    const bool wants_directed = mode != DegreeMode::Undirected;
    if (wants_directed != g.is_directed())
        throw UsageError(std::string("degree mode '") + to_string(mode) + "' requires a " +
                         (wants_directed ? "directed" : "undirected") + " graph");
}

std::uint32_t Graph::degree(VertexId v, DegreeMode mode) const {
    check_mode(*this, mode);
    switch (mode) {
        case DegreeMode::Undirected:
        case DegreeMode::Out:
            return static_cast<std::uint32_t>(out_neighbors(v).size());
        case DegreeMode::In:
            return static_cast<std::uint32_t>(in_neighbors(v).size());
        case DegreeMode::InOut:
            return static_cast<std::uint32_t>(out_neighbors(v).size() + in_neighbors(v).size());
    }
    return 0;
}

NeighborRange Graph::neighbors(VertexId v, DegreeMode mode) const {
    check_mode(*this, mode);
    switch (mode) {
        case DegreeMode::Undirected:
        case DegreeMode::Out:
            return {out_neighbors(v), {}};
        case DegreeMode::In:
            return {in_neighbors(v), {}};
        case DegreeMode::InOut:
            return {out_neighbors(v), in_neighbors(v)};
    }
    return {{}, {}};
}

namespace {

// Stable counting sort of lines by one endpoint; both passes together give
// lexicographic (u,v) order in O(n + m).
void sort_by_endpoint(const std::vector<Edge>& src, std::vector<Edge>& dst,
                      std::vector<std::size_t>& count, bool by_u) {
    std::fill(count.begin(), count.end(), 0);
    for (const Edge& e : src) ++count[by_u ? e.u : e.v];
    std::size_t sum = 0;
    for (std::size_t& c : count) {
        std::size_t here = c;
        c = sum;
        sum += here;
    }
    for (const Edge& e : src) dst[count[by_u ? e.u : e.v]++] = e;
}

}  // namespace

Graph build_graph(std::size_t n, std::span<const Edge> lines, bool directed,
                  LoopPolicy loop_policy, BuildStats* stats) {
    if (n > std::numeric_limits<VertexId>::max())
        throw InputError("vertex count " + std::to_string(n) + " exceeds the supported maximum");

    BuildStats local;
    std::vector<Edge> work;
    work.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Edge& e = lines[i];
        if (e.u >= n || e.v >= n)
            throw InputError("line " + std::to_string(i + 1) + ": endpoint " +
                             std::to_string(e.u >= n ? e.u : e.v) + " out of range (vertex count " +
                             std::to_string(n) + ")");
        if (e.u == e.v) {
            if (loop_policy == LoopPolicy::Reject)
                throw InputError("line " + std::to_string(i + 1) + ": self-loop on vertex " +
                                 std::to_string(e.u));
            ++local.loops_ignored;
            continue;
        }
        // Undirected lines are unordered pairs; store them low-high.
        work.push_back(!directed && e.u > e.v ? Edge{e.v, e.u} : e);
    }

    if (!work.empty()) {
        std::vector<std::size_t> count(n);
        std::vector<Edge> tmp(work.size());
        sort_by_endpoint(work, tmp, count, /*by_u=*/false);
        sort_by_endpoint(tmp, work, count, /*by_u=*/true);

        std::size_t kept = 0;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (kept > 0 && work[i] == work[kept - 1]) {
                ++local.duplicates_collapsed;
            } else {
                work[kept++] = work[i];
            }
        }
        work.resize(kept);
    }

    Graph g;
    g.n_ = n;
    g.m_ = work.size();
    g.directed_ = directed;

    g.out_off_.assign(n + 1, 0);
    for (const Edge& e : work) {
        ++g.out_off_[e.u + 1];
        if (!directed) ++g.out_off_[e.v + 1];
    }
    std::partial_sum(g.out_off_.begin(), g.out_off_.end(), g.out_off_.begin());
    g.out_.resize(g.out_off_[n]);
    {
        std::vector<std::size_t> cursor(g.out_off_.begin(), g.out_off_.end() - 1);
        // Lines arrive in (u,v) lexicographic order, which keeps every
        // per-vertex list ascending without a per-list sort.
        for (const Edge& e : work) {
            g.out_[cursor[e.u]++] = e.v;
            if (!directed) g.out_[cursor[e.v]++] = e.u;
        }
    }

    if (directed) {
        g.in_off_.assign(n + 1, 0);
        for (const Edge& e : work) ++g.in_off_[e.v + 1];
        std::partial_sum(g.in_off_.begin(), g.in_off_.end(), g.in_off_.begin());
        g.in_.resize(g.in_off_[n]);
        std::vector<std::size_t> cursor(g.in_off_.begin(), g.in_off_.end() - 1);
        for (const Edge& e : work) g.in_[cursor[e.v]++] = e.u;
    }

    if (stats) *stats = local;
    return g;
}

}  // namespace cores
