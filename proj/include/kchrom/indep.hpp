#pragma once

#include <vector>

#include "kchrom/graph.hpp"

namespace kchrom {

// Independent sets bucketed by exact cardinality. Within a bucket, sets keep
// the enumeration order: lexicographic by increasing vertex list.
struct SetIndex {
    std::vector<std::vector<VertexSet>> by_size; // [s] holds the size-s sets

    int max_size() const { return static_cast<int>(by_size.size()) - 1; }
    const std::vector<VertexSet>& of_size(int s) const { return by_size[s]; }
    long total() const {
        long t = 0;
        for (const auto& bucket : by_size)
            t += static_cast<long>(bucket.size());
        return t;
    }
};

// Maximal independent sets (no vertex can be added) of size 1..max_size.
SetIndex enumerate_maximal_independent_sets(const Graph& g, int max_size);

// Independent sets, not necessarily maximal, whose vertices are pairwise at
// distance >= 3, of size 1..max_size.
SetIndex enumerate_distance3_independent_sets(const Graph& g, int max_size);

} // namespace kchrom
