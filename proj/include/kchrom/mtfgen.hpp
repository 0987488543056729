#pragma once

#include <vector>

#include "kchrom/graph.hpp"

namespace kchrom {

struct MtfGenOptions {
    int min_degree = 2;
    int workers = 1;
    // automatic: brute for n <= 10, levelwise above.
    enum class Mode { automatic, brute, levelwise } mode = Mode::automatic;
};

// All maximal triangle-free graphs of order n with minimum degree >=
// min_degree, one canonical representative per isomorphism class, sorted by
// canonical key.
//
// brute: breadth-first edge augmentation over all triangle-free graphs with
// per-level canonical dedup; terminal (open-pair-free) graphs are the output.
// Exhaustive by construction and kept as the oracle for the levelwise mode.
//
// levelwise: vertex-by-vertex growth. Each level stores one canonical
// representative per class of triangle-free graphs on m <= n vertices; a
// child attaches a new vertex to an independent set. When the representative
// still has deficient pairs (non-adjacent, no common neighbour), a child must
// cover the first such pair, since some later vertex has to and vertex order
// within the remainder is free; otherwise every independent set (including
// the empty one) is a valid attachment. A state is pruned when a maximum set
// of pairwise non-co-coverable deficient pairs (two pairs are co-coverable
// when the union of their endpoints is independent) already exceeds the
// number of vertices left to add.
std::vector<Graph> generate_mtf(int n, const MtfGenOptions& opt = {});

// All maximal triangle-free graphs obtainable from g by inserting admissible
// edges until none remain (canonical forms, sorted by key). g itself is
// returned when already maximal.
std::vector<Graph> mtf_closure(const Graph& g);

} // namespace kchrom
