#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cores/decompose.hpp"
#include "cores/graph.hpp"

namespace cores {

struct LabeledGraph {
    Graph graph;
    // Empty when the source carried no labels, otherwise one entry per vertex.
    std::vector<std::string> labels;

    bool has_labels() const noexcept { return !labels.empty(); }
};

// Minimal Pajek .net dialect: '%' comment lines anywhere, a case-insensitive
// `*Vertices n` header, optional vertex lines `id "label"` (1-based ids),
// then `*Edges` / `*Arcs` sections with `u v` lines (trailing numbers such as
// weights are ignored). Any *Arcs section makes the graph directed; *Edges
// lines of a directed file expand to reciprocal arc pairs. List-style
// sections (*Edgeslist, *Arcslist, ...) are rejected as unsupported.
// Parse errors carry the 1-based line number.
LabeledGraph parse_pajek(std::istream& in, LoopPolicy loop_policy = LoopPolicy::Ignore,
                         BuildStats* stats = nullptr);

// Plain edge list: one `u v` pair of 0-based ids per line, '#' comment lines
// and blank lines skipped. The vertex count is 1 + max id unless overridden.
Graph parse_edgelist(std::istream& in, bool directed,
                     std::optional<std::size_t> vertex_count = std::nullopt,
                     LoopPolicy loop_policy = LoopPolicy::Ignore, BuildStats* stats = nullptr);

// Pajek .clu partition: `*Vertices n`, then line i+1 holds the core number of
// 0-based vertex i.
void write_clu(const CoreAssignment& assignment, std::ostream& out);

// Inverse of parse_pajek up to comment/whitespace normalization.
void write_pajek(const LabeledGraph& lg, std::ostream& out);

// Word adjacency graph: one vertex per word of 2..8 characters (shorter and
// longer words are dropped), an edge wherever one word turns into another by
// changing, removing or inserting a single character. Labels carry the words.
// A duplicate surviving word is an input error. Runs in time near-linear in
// the number of words via deletion-signature bucketing.
LabeledGraph word_graph(std::span<const std::string> words);

}  // namespace cores
