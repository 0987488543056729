#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kchrom/graph.hpp"

namespace kchrom {

struct ExpandStats {
    std::vector<std::string> skipped; // graph6 of seeds with wrong chi
};

// Closes a set of k-chromatic graphs downward under single-edge removal:
// every subgraph reachable while the chromatic number stays k, one canonical
// representative per class, sorted by key. Removing an edge never raises the
// chromatic number, so branches that drop below k are pruned for good. Seeds
// whose chromatic number is not k are reported and skipped. Seeded from the
// maximal triangle-free k-chromatic graphs of order n this yields every
// triangle-free k-chromatic graph of that order, provided none exceeds
// chromatic number k there.
std::vector<Graph> expand_by_edge_removal(const std::vector<Graph>& seeds,
                                          int k, int workers = 1,
                                          ExpandStats* stats = nullptr);

// Complete family of triangle-free k-chromatic graphs of order n, built by
// seeding the walk with every maximal triangle-free graph of chromatic
// number >= k (descending through higher-chromatic seeds keeps the family
// complete even when such graphs exist at this order).
std::vector<Graph> chromatic_family(int k, int n, int workers = 1);

struct HeuristicResult {
    std::vector<Graph> pool;    // maximal triangle-free k-chromatic graphs
    std::vector<Graph> harvest; // pool members that are not vertex-critical
};

// Pool-growing local search. Each pass takes the unprocessed pool members,
// strips each to its k-chromatic edge-critical spanning subgraphs (all of
// them up to order 13, a seeded sample of removal orders above), completes
// those back to maximal, and keeps the completions that are k-chromatic; a
// processed graph that is not vertex-critical goes to the harvest. Stops at
// a fixpoint or after `budget` passes (budget 0: pool = seeds, no harvest).
// Sampling draws per-graph generators seeded by (seed, canonical key), so
// results do not depend on the worker count.
HeuristicResult heuristic_search(const std::vector<Graph>& seeds, int k,
                                 int budget, std::uint64_t seed,
                                 int workers = 1);

// All single-vertex deletions of g that stay k-chromatic, canonical and
// sorted. Throws std::invalid_argument when chi(g) != k.
std::vector<Graph> descend_order(const Graph& g, int k);

} // namespace kchrom
