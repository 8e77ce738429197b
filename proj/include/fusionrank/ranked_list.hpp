#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace fusionrank {

struct ScoredEntry {
    std::string id;
    double score = 0.0;

    friend bool operator==(const ScoredEntry&, const ScoredEntry&) = default;
};

/// Ordered (id, score) pairs: descending score, ties by ascending id.
using RankedList = std::vector<ScoredEntry>;

/// The one tie-break rule used everywhere.
inline void sort_ranked(std::vector<ScoredEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const ScoredEntry& a, const ScoredEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.id < b.id;
    });
}

}  // namespace fusionrank
