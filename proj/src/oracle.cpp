#include "cores/oracle.hpp"

#include <string>
#include <vector>

namespace cores {

namespace {

std::uint32_t induced_degree(const Graph& g, VertexId v, DegreeMode mode,
                             const std::vector<char>& alive) {
    std::uint32_t d = 0;
    for (VertexId u : g.neighbors(v, mode))
        if (alive[u]) ++d;
    return d;
}

// Deletes vertices of induced mode-degree < k until none remain, in place.
void delete_below(const Graph& g, DegreeMode mode, std::uint32_t k, std::vector<char>& alive,
                  std::size_t& remaining) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (alive[v] && induced_degree(g, v, mode, alive) < k) {
                alive[v] = 0;
                --remaining;
                changed = true;
            }
        }
    }
}

}  // namespace

CoreAssignment peel_oracle(const Graph& g, DegreeMode mode) {
    check_mode(g, mode);
    const std::size_t n = g.vertex_count();
    CoreAssignment result;
    result.mode = mode;
    result.core.assign(n, 0);

    std::vector<char> alive(n, 1);
    std::size_t remaining = n;
    // Phase k starts from the survivors of phase k-1 (cores are nested);
    // whoever survives phase k has core number at least k.
    for (std::uint32_t k = 1; remaining > 0; ++k) {
        delete_below(g, mode, k, alive, remaining);
        for (VertexId v = 0; v < n; ++v)
            if (alive[v]) result.core[v] = k;
    }
    return result;
}

bool is_k_core(const Graph& g, std::span<const VertexId> members, std::uint32_t k,
               DegreeMode mode) {
    check_mode(g, mode);
    const std::size_t n = g.vertex_count();

    std::vector<char> in_members(n, 0);
    for (VertexId v : members) {
        if (v >= n) throw UsageError("member vertex " + std::to_string(v) + " not in the graph");
        in_members[v] = 1;
    }
    for (VertexId v : members)
        if (induced_degree(g, v, mode, in_members) < k) return false;

    // Maximality: any set with the min-degree property is contained in the
    // deletion fixpoint, so equality with it is exactly maximality.
    std::vector<char> alive(n, 1);
    std::size_t remaining = n;
    delete_below(g, mode, k, alive, remaining);
    return alive == in_members;
}

}  // namespace cores
