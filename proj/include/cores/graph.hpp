#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cores/errors.hpp"

namespace cores {

// Internal vertex ids are zero-based and dense. One-based external ids
// (Pajek) are converted at the IO boundary.
using VertexId = std::uint32_t;

// A line of the graph: an edge {u,v} for undirected graphs, an arc u->v for
// directed ones.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Degree notion selecting the core type. Undirected is valid only for
// undirected graphs, the other three only for directed graphs. InOut counts
// a reciprocal arc pair (u->v plus v->u) twice, so it is bounded by 2n-2.
enum class DegreeMode { Undirected, In, Out, InOut };

const char* to_string(DegreeMode mode) noexcept;

enum class LoopPolicy { Reject, Ignore };

struct BuildStats {
    std::size_t loops_ignored = 0;
    std::size_t duplicates_collapsed = 0;
};

// Neighbor sequence of one vertex under a degree mode. For InOut the out-list
// is chained before the in-list, so a reciprocal neighbor appears twice.
class NeighborRange {
public:
    NeighborRange(std::span<const VertexId> first, std::span<const VertexId> second) noexcept
        : first_(first), second_(second) {}

    class iterator {
    public:
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        iterator(const VertexId* cur, const VertexId* first_end, const VertexId* second_begin) noexcept
            : cur_(cur == first_end ? second_begin : cur),
              first_end_(first_end),
              second_begin_(second_begin) {}

        VertexId operator*() const noexcept { return *cur_; }
        iterator& operator++() noexcept {
            ++cur_;
            if (cur_ == first_end_) cur_ = second_begin_;
            return *this;
        }
        iterator operator++(int) noexcept {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.cur_ == b.cur_; }

    private:
        const VertexId* cur_;
        const VertexId* first_end_;
        const VertexId* second_begin_;
    };

    iterator begin() const noexcept {
        return {first_.data(), first_.data() + first_.size(), second_.data()};
    }
    iterator end() const noexcept {
        const VertexId* send = second_.data() + second_.size();
        return {send, send, send};
    }
    std::size_t size() const noexcept { return first_.size() + second_.size(); }
    bool empty() const noexcept { return size() == 0; }

private:
    std::span<const VertexId> first_;
    std::span<const VertexId> second_;
};

// Immutable graph over dense vertex ids with flat adjacency storage.
// Neighbor lists are sorted ascending and free of loops and duplicates.
// Safe for simultaneous read-only use from multiple threads.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t line_count() const noexcept { return m_; }
    bool is_directed() const noexcept { return directed_; }

    // Constant time. Throws UsageError if the mode does not fit the graph.
    std::uint32_t degree(VertexId v, DegreeMode mode) const;

    // Mode-relevant neighbors of v, each exactly once per incident line, in
    // ascending id order (out-list then in-list for InOut).
    NeighborRange neighbors(VertexId v, DegreeMode mode) const;

    // Raw lists. For undirected graphs both return the adjacency list.
    std::span<const VertexId> out_neighbors(VertexId v) const noexcept {
        return {out_.data() + out_off_[v], out_off_[v + 1] - out_off_[v]};
    }
    std::span<const VertexId> in_neighbors(VertexId v) const noexcept {
        if (!directed_) return out_neighbors(v);
        return {in_.data() + in_off_[v], in_off_[v + 1] - in_off_[v]};
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    friend Graph build_graph(std::size_t n, std::span<const Edge> lines, bool directed,
                             LoopPolicy loop_policy, BuildStats* stats);

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    bool directed_ = false;
    std::vector<std::size_t> out_off_{0};  // n+1 offsets into out_
    std::vector<VertexId> out_;            // adjacency (undirected) or out-lists
    std::vector<std::size_t> in_off_;      // directed only
    std::vector<VertexId> in_;
};

// Throws UsageError unless mode is Undirected for undirected graphs or one of
// In/Out/InOut for directed graphs.
void check_mode(const Graph& g, DegreeMode mode);

// Builds a simple graph in O(n + m): endpoints are validated, self-loops are
// handled per loop_policy, duplicate lines collapse to one (undirected lines
// are unordered, so (u,v) and (v,u) are the same line). Deterministic:
// identical inputs give identical internal layouts.
Graph build_graph(std::size_t n, std::span<const Edge> lines, bool directed,
                  LoopPolicy loop_policy = LoopPolicy::Ignore, BuildStats* stats = nullptr);

}  // namespace cores
