#include "kchrom/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kchrom {

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = n;
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int m = 0;
    for (int v = 0; v < n; ++v) m += degree(v);
    return m / 2;
}

bool Graph::is_regular() const {
    return n == 0 || max_degree() == min_degree();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            if (g.adj[u].intersects(g.adj[v])) return false;
        }
    return true;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge (u,w) seen from root s gives a
    // closed walk of length dist[u]+dist[w]+1, and the minimum over all
    // roots is the girth.
    int best = -1;
    std::vector<int> dist(g.n), parent(g.n), queue(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int w : g.adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<std::pair<int, int>> open_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v) && !g.adj[u].intersects(g.adj[v]))
                out.emplace_back(u, v);
    return out;
}

bool has_open_pair(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v) && !g.adj[u].intersects(g.adj[v])) return true;
    return false;
}

bool is_maximal_triangle_free(const Graph& g) {
    return is_triangle_free(g) && !has_open_pair(g);
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1), queue(g.n);
    dist[src] = 0;
    int head = 0, tail = 0;
    queue[tail++] = src;
    while (head < tail) {
        int u = queue[head++];
        for (int w : g.adj[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue[tail++] = w;
            }
    }
    return dist;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<int> newid(g.n, -1);
    int m = 0;
    for (int v = 0; v < g.n; ++v)
        if (keep.test(v)) newid[v] = m++;
    Graph h(m);
    for (int u = 0; u < g.n; ++u) {
        if (newid[u] < 0) continue;
        for (int v : g.adj[u] & keep)
            if (v > u) h.add_edge(newid[u], newid[v]);
    }
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    VertexSet keep = VertexSet::first_n(g.n);
    keep.reset(v);
    return induced_subgraph(g, keep);
}

Graph delete_closed_neighbourhood(const Graph& g, int v) {
    VertexSet keep = VertexSet::first_n(g.n).minus(g.adj[v]);
    keep.reset(v);
    return induced_subgraph(g, keep);
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (v > u) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph mycielski(const Graph& g) {
    if (2 * g.n + 1 > VertexSet::capacity)
        throw std::invalid_argument("mycielski: resulting order exceeds 128");
    Graph h(2 * g.n + 1);
    int apex = 2 * g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v > u) h.add_edge(u, v);
            h.add_edge(u + g.n, v); // shadow of u covers N(u)
        }
    for (int u = 0; u < g.n; ++u) h.add_edge(u + g.n, apex);
    return h;
}

} // namespace kchrom
