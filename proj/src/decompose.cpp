#include "cores/decompose.hpp"

#include <algorithm>
#include <limits>

namespace cores {

std::uint32_t CoreAssignment::max_core() const noexcept {
    std::uint32_t best = 0;
    for (std::uint32_t c : core) best = std::max(best, c);
    return best;
}

namespace {

constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Peeling a vertex must lower the working degree of every vertex whose
// mode-degree loses an incident line. For in-degree those are the deleted
// vertex's OUT-neighbors (an arc v->u leaving the graph costs u one
// in-neighbor), and symmetrically for out-degree.
struct PeelSides {
    bool out = false;
    bool in = false;
};

PeelSides peel_sides(DegreeMode mode) {
    switch (mode) {
        case DegreeMode::Undirected: return {true, false};
        case DegreeMode::In: return {true, false};
        case DegreeMode::Out: return {false, true};
        case DegreeMode::InOut: return {true, true};
    }
    return {};
}

PeelResult decompose_impl(const Graph& g, DegreeMode mode, const PeelObserver* observer) {
    check_mode(g, mode);
    const std::size_t n = g.vertex_count();

    PeelResult result;
    result.assignment.mode = mode;
    result.assignment.core.assign(n, 0);

    // deg doubles as the output core table: once a vertex is processed its
    // working degree never changes again and is its core number.
    std::vector<std::uint32_t>& deg = result.assignment.core;
    std::vector<VertexId> vert(n, kNoVertex);
    std::vector<std::uint32_t> pos(n, 0);

    std::uint32_t md = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v, mode);
        md = std::max(md, deg[v]);
    }

    // One bucket per possible degree. In+out degree is bounded by 2n-2, so
    // that mode sizes the table for the full range up front.
    const std::size_t bin_size =
        mode == DegreeMode::InOut ? std::max<std::size_t>(2 * n, 2) - 1 : std::size_t{md} + 1;
    std::vector<std::uint32_t> bin(bin_size, 0);

    // Bin sort: bucket sizes, prefix-sum into starting positions, scatter
    // (ascending vertex id breaks ties, keeping the layout deterministic).
    for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
    std::uint32_t start = 0;
    for (std::uint32_t d = 0; d <= md; ++d) {
        const std::uint32_t num = bin[d];
        bin[d] = start;
        start += num;
    }
    for (VertexId v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]];
        vert[pos[v]] = v;
        ++bin[deg[v]];
    }
    // The scatter advanced each start to the next bucket's start; shift one
    // position right to recover them.
    for (std::uint32_t d = md; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    const PeelSides sides = peel_sides(mode);
    for (std::size_t i = 0; i < n; ++i) {
        if (observer)
            (*observer)(PeelStateView{deg, vert, pos, bin, i});

        const VertexId v = vert[i];
        const std::uint32_t level = deg[v];

        auto relax = [&](VertexId u) {
            if (deg[u] > level) {
                const std::uint32_t du = deg[u];
                const std::uint32_t pu = pos[u];
                const std::uint32_t pw = bin[du];
                const VertexId w = vert[pw];
                if (u != w) {  // u may already sit at its bucket's first slot
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        };
        if (sides.out)
            for (VertexId u : g.out_neighbors(v)) relax(u);
        if (sides.in)
            for (VertexId u : g.in_neighbors(v)) relax(u);
    }

    result.order = std::move(vert);
    return result;
}

}  // namespace

CoreAssignment core_decompose(const Graph& g, DegreeMode mode) {
    return decompose_impl(g, mode, nullptr).assignment;
}

PeelResult core_decompose_traced(const Graph& g, DegreeMode mode, const PeelObserver& observer) {
    return decompose_impl(g, mode, observer ? &observer : nullptr);
}

std::vector<VertexId> k_core_vertices(const CoreAssignment& assignment, std::uint32_t k) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < assignment.core.size(); ++v)
        if (assignment.core[v] >= k) members.push_back(v);
    return members;
}

InducedSubgraph k_core_subgraph(const Graph& g, const CoreAssignment& assignment, std::uint32_t k) {
    if (assignment.core.size() != g.vertex_count())
        throw UsageError("core assignment size does not match the graph");

    std::vector<VertexId> members = k_core_vertices(assignment, k);
    std::vector<VertexId> new_id(g.vertex_count(), kNoVertex);
    for (VertexId i = 0; i < members.size(); ++i) new_id[members[i]] = i;

    std::vector<Edge> lines;
    for (VertexId v : members) {
        for (VertexId w : g.out_neighbors(v)) {
            if (new_id[w] == kNoVertex) continue;
            if (!g.is_directed() && w < v) continue;  // emit each edge once
            lines.push_back({new_id[v], new_id[w]});
        }
    }
    Graph sub = build_graph(members.size(), lines, g.is_directed());
    return {std::move(sub), std::move(members)};
}

CoreSummary summarize(const CoreAssignment& assignment) {
    CoreSummary summary;
    summary.vertex_count = assignment.core.size();
    const std::size_t n = summary.vertex_count;
    if (n == 0) return summary;

    std::vector<std::size_t> count(std::size_t{assignment.max_core()} + 1, 0);
    for (std::uint32_t c : assignment.core) ++count[c];

    std::size_t cumulative = 0;
    for (std::size_t k = count.size(); k-- > 0;) {
        if (count[k] == 0) continue;
        cumulative += count[k];
        summary.rows.push_back({static_cast<std::uint32_t>(k), count[k],
                                100.0 * static_cast<double>(count[k]) / static_cast<double>(n),
                                cumulative,
                                100.0 * static_cast<double>(cumulative) / static_cast<double>(n)});
    }
    return summary;
}

}  // namespace cores
