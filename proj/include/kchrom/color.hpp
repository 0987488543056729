#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kchrom/graph.hpp"

namespace kchrom {

// Proper colouring witness. Colours are normalized to first-occurrence order
// over vertex ids: scanning 0..n-1, each new colour is the smallest unused.
struct Coloring {
    int colors_used = 0;
    std::vector<int> assignment;
};

// Exact decision via saturation-guided branch and bound with forward checking
// and forced-assignment propagation. New colours are introduced in increasing
// order, so the first branch vertex is pinned to colour 0.
std::optional<Coloring> find_k_coloring(const Graph& g, int k);
bool is_k_colorable(const Graph& g, int k);

int chromatic_number(const Graph& g);

bool verify_coloring(const Graph& g, const Coloring& c, int k);

// chi(g - v) < k for every vertex. Throws std::invalid_argument when
// chi(g) != k.
bool is_vertex_critical(const Graph& g, int k);

// Vertex-critical and every edge removal drops the chromatic number.
bool is_critical(const Graph& g, int k);

// For triangle-free g: chi <= ceil(maxdeg / 2) + 2. Throws
// std::invalid_argument when g has a triangle.
bool reed_check(const Graph& g);

// Independent re-derivation: re-solves under `restarts` random relabellings
// and confirms chi both ways (a verified witness at chi, none at chi-1).
bool verify_chromatic_number(const Graph& g, int chi, std::uint64_t seed,
                             int restarts = 3);

} // namespace kchrom
