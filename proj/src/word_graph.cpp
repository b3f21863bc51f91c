#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cores/io.hpp"

namespace cores {

namespace {

constexpr std::size_t kMinLength = 2;
constexpr std::size_t kMaxLength = 8;

struct BucketEntry {
    VertexId word = 0;
    std::uint8_t erased_at = 0;  // position whose character was removed
};

}  // namespace

// Two distinct words are at edit distance exactly 1 iff
//   - equal length and they share a one-character-erased signature at the
//     same position (a substitution), or
//   - lengths differ by 1 and the shorter word is an erasure of the longer
//     (an insertion/removal).
// Grouping every word's single-character erasures therefore finds each edge
// without comparing all pairs; bucket work is proportional to the edges found.
LabeledGraph word_graph(std::span<const std::string> words) {
    std::vector<std::string> kept;
    for (const std::string& w : words)
        if (w.size() >= kMinLength && w.size() <= kMaxLength) kept.push_back(w);

    std::unordered_map<std::string, VertexId> index;
    index.reserve(kept.size() * 2);
    for (VertexId id = 0; id < kept.size(); ++id) {
        if (!index.emplace(kept[id], id).second)
            throw InputError("duplicate word '" + kept[id] + "'");
    }

    std::unordered_map<std::string, std::vector<BucketEntry>> buckets;
    buckets.reserve(kept.size() * kMaxLength);
    std::string erased;
    for (VertexId id = 0; id < kept.size(); ++id) {
        const std::string& w = kept[id];
        for (std::size_t i = 0; i < w.size(); ++i) {
            erased.assign(w, 0, i);
            erased.append(w, i + 1, std::string::npos);
            buckets[erased].push_back({id, static_cast<std::uint8_t>(i)});
        }
    }

    std::vector<Edge> edges;
    for (auto& [signature, entries] : buckets) {
        // Insertion/removal: the signature itself is a word one char shorter.
        if (auto it = index.find(signature); it != index.end()) {
            const VertexId shorter = it->second;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                // One word's erasures land consecutively; equal ones (from a
                // repeated character) would create the same edge twice.
                if (i > 0 && entries[i].word == entries[i - 1].word) continue;
                edges.push_back({shorter, entries[i].word});
            }
        }
        // Substitution: same erased position, same signature, distinct words.
        // Every pair inside a position run is a genuine edge, so the work
        // stays proportional to the edges produced.
        std::sort(entries.begin(), entries.end(),
                  [](const BucketEntry& a, const BucketEntry& b) { return a.erased_at < b.erased_at; });
        std::size_t run = 0;
        while (run < entries.size()) {
            std::size_t end = run;
            while (end < entries.size() && entries[end].erased_at == entries[run].erased_at) ++end;
            for (std::size_t i = run; i < end; ++i)
                for (std::size_t j = i + 1; j < end; ++j)
                    edges.push_back({entries[i].word, entries[j].word});
            run = end;
        }
    }

    LabeledGraph lg;
    lg.graph = build_graph(kept.size(), edges, /*directed=*/false);
    lg.labels = std::move(kept);
    return lg;
}

}  // namespace cores
