#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kchrom/bitset.hpp"

namespace kchrom {

// Undirected simple graph, adjacency kept as one VertexSet per vertex.
// Orders 0..128 are valid; most pipeline graphs are far smaller.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(order) {}

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    void add_edge(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    void remove_edge(int u, int v) {
        adj[u].reset(v);
        adj[v].reset(u);
    }

    int degree(int v) const { return adj[v].count(); }
    int max_degree() const;
    int min_degree() const;
    int edge_count() const;
    bool is_regular() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const = default;
};

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

bool is_triangle_free(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Non-adjacent pairs with no common neighbour, i.e. the edges whose
// insertion keeps the graph triangle-free.
std::vector<std::pair<int, int>> open_pairs(const Graph& g);
bool has_open_pair(const Graph& g);

// Triangle-free and no insertable edge keeps it so. Equivalent to
// triangle-free plus diameter <= 2 once n >= 3; the insertion form below
// covers small orders as well.
bool is_maximal_triangle_free(const Graph& g);

bool is_connected(const Graph& g);

// Distances from src; unreachable = -1.
std::vector<int> bfs_distances(const Graph& g, int src);

// Keeps the vertices in `keep`, relabelled to 0..|keep|-1 in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph delete_vertex(const Graph& g, int v);
Graph delete_closed_neighbourhood(const Graph& g, int v);

// perm[old] = new id
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// Order 2n+1: originals, one shadow per original, one apex. Shadow i+n is
// adjacent to N(i) among originals, the apex to every shadow.
Graph mycielski(const Graph& g);

} // namespace kchrom
