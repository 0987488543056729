#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "kchrom/graph.hpp"

namespace kchrom {

// graph6 string of the canonically relabelled graph. Two graphs get the same
// key iff they are isomorphic; keys decode back to a representative.
using CanonicalKey = std::string;

struct CanonResult {
    Graph canonical;
    std::vector<int> to_canonical; // to_canonical[old id] = canonical id
    std::uint64_t aut_order = 1;
};

// want_aut_order=false skips the group-order computation (the search still
// collects automorphisms for pruning).
CanonResult canonicalize(const Graph& g, bool want_aut_order = true);

CanonicalKey canonical_key(const Graph& g);
Graph canonical_form(const Graph& g);

// Exact order of the automorphism group. Throws std::overflow_error when the
// order does not fit in 64 bits.
std::uint64_t automorphism_group_order(const Graph& g);

// Canonical-key set with deterministic, order-independent semantics: the
// final contents depend only on which keys were inserted, never on insertion
// order or thread count.
struct DedupStore {
    std::unordered_set<CanonicalKey> keys;

    bool insert(const CanonicalKey& k) { return keys.insert(k).second; }
    bool contains(const CanonicalKey& k) const { return keys.count(k) > 0; }
    std::size_t size() const { return keys.size(); }
    void merge(const DedupStore& o) { keys.insert(o.keys.begin(), o.keys.end()); }
    std::vector<CanonicalKey> sorted_keys() const;
};

// true when g's class was not present yet
bool dedup_insert(DedupStore& store, const Graph& g);

} // namespace kchrom
