#pragma once

#include <span>

#include "cores/decompose.hpp"
#include "cores/graph.hpp"

namespace cores {

// Brute-force reference implementation of cores by recursive deletion,
// deliberately built on repeated full scans so it shares no machinery with
// the bucket-peeling engine. Test support only; may be quadratic.
CoreAssignment peel_oracle(const Graph& g, DegreeMode mode);

// True iff the subgraph induced by members has mode-degree >= k everywhere
// AND members is maximal with that property (equals the recursive-deletion
// fixpoint at level k).
bool is_k_core(const Graph& g, std::span<const VertexId> members, std::uint32_t k,
               DegreeMode mode);

}  // namespace cores
