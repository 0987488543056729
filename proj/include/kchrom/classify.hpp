#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kchrom/canon.hpp"
#include "kchrom/graph.hpp"

namespace kchrom {

struct GraphRecord {
    CanonicalKey key;
    Graph canonical;
    int order = 0;
    int chi = 0;
    int min_degree = 0;
    int max_degree = 0;
    std::uint64_t aut_order = 0;
    bool regular = false;
    bool maximal_triangle_free = false;
    bool vertex_critical = false; // with respect to its own chi
    bool critical = false;
    bool chi_verified = false; // random-relabel re-derivation succeeded
};

// Full classification of one graph. With verify_restarts > 0 the chromatic
// number is re-derived under that many random relabellings (seeded
// per-graph from `seed` and the canonical key, so worker splits do not
// change results).
GraphRecord classify_graph(const Graph& g, int verify_restarts = 0,
                           std::uint64_t seed = 0);

std::vector<GraphRecord> classify_all(const std::vector<Graph>& graphs,
                                      int verify_restarts = 0,
                                      std::uint64_t seed = 0, int workers = 1);

// Counts for the records with chi == k (others are tallied as off_target).
struct CountReport {
    int k = 0;
    long total = 0;
    long off_target = 0;
    std::map<int, std::map<int, long>> by_order_maxdeg; // order -> maxdeg -> n
    std::map<int, long> by_order;
    long vertex_critical = 0;
    long critical = 0;
    long maximal_triangle_free = 0;
    long regular = 0;
};

CountReport tally(const std::vector<GraphRecord>& records, int k);

// Human-readable table: one row per (order, maxdeg), then the flag totals.
std::string render_table(const CountReport& rep);

// One stable machine line per datum, "name [args] = value".
std::string render_lines(const CountReport& rep);

} // namespace kchrom
