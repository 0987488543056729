#include "kchrom/color.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace kchrom {

namespace {

// Colours available to v under the ascending-introduction rule: previously
// used colours not blocked by a neighbour, plus one fresh colour while any
// remain. Colour ids stay below k, so a VertexSet holds the block mask.
struct Solver {
    const Graph& g;
    int k;
    std::vector<int> assignment;
    std::vector<VertexSet> blocked; // colours taken by coloured neighbours
    VertexSet uncolored;
    int used = 0;

    // undo logs shared across frames; frames remember their high-water marks
    std::vector<std::pair<int, int>> block_log; // (vertex, colour) bits set
    std::vector<int> assign_log;

    explicit Solver(const Graph& graph, int colors)
        : g(graph), k(colors), assignment(graph.n, -1), blocked(graph.n),
          uncolored(VertexSet::first_n(graph.n)) {}

    struct Mark {
        std::size_t blocks, assigns;
        int used;
    };
    Mark mark() const { return {block_log.size(), assign_log.size(), used}; }

    void rewind(const Mark& m) {
        while (assign_log.size() > m.assigns) {
            int v = assign_log.back();
            assign_log.pop_back();
            assignment[v] = -1;
            uncolored.set(v);
        }
        while (block_log.size() > m.blocks) {
            auto [w, c] = block_log.back();
            block_log.pop_back();
            blocked[w].reset(c);
        }
        used = m.used;
    }

    void assign(int v, int c) {
        assignment[v] = c;
        uncolored.reset(v);
        assign_log.push_back(v);
        if (c == used)
            ++used;
        for (int w : g.adj[v] & uncolored) {
            if (!blocked[w].test(c)) {
                blocked[w].set(c);
                block_log.push_back({w, c});
            }
        }
    }

    // Number of colours open to v; when exactly one, report it.
    int domain(int v, int* only) const {
        int limit = std::min(used, k); // fresh colour is id `used` if used < k
        int cnt = 0, last = -1;
        for (int c = 0; c < limit; ++c) {
            if (!blocked[v].test(c)) {
                ++cnt;
                last = c;
                if (cnt > 1)
                    return cnt;
            }
        }
        if (used < k) {
            ++cnt;
            last = used;
        }
        if (cnt == 1 && only)
            *only = last;
        return cnt;
    }

    // Assign all forced vertices; false on a wipeout.
    bool propagate() {
        bool again = true;
        while (again) {
            again = false;
            for (int v : uncolored) {
                int only = -1;
                int cnt = domain(v, &only);
                if (cnt == 0)
                    return false;
                if (cnt == 1) {
                    assign(v, only);
                    again = true;
                    break;
                }
            }
        }
        return true;
    }

    int pick_branch() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : uncolored) {
            int sat = blocked[v].count();
            int deg = (g.adj[v] & uncolored).count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool search() {
        Mark m = mark();
        if (!propagate()) {
            rewind(m);
            return false;
        }
        if (uncolored.empty())
            return true;
        int v = pick_branch();
        int limit = std::min(used + 1, k); // at most one fresh colour
        for (int c = 0; c < limit; ++c) {
            if (blocked[v].test(c))
                continue;
            Mark inner = mark();
            assign(v, c);
            if (search())
                return true;
            rewind(inner);
        }
        rewind(m);
        return false;
    }
};

Coloring normalized(const std::vector<int>& raw) {
    Coloring out;
    out.assignment.assign(raw.size(), -1);
    std::vector<int> remap;
    for (std::size_t v = 0; v < raw.size(); ++v) {
        int c = raw[v];
        if (c >= static_cast<int>(remap.size()))
            remap.resize(c + 1, -1);
        if (remap[c] < 0)
            remap[c] = out.colors_used++;
        out.assignment[v] = remap[c];
    }
    return out;
}

std::optional<Coloring> greedy_coloring(const Graph& g, int k) {
    std::vector<int> raw(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        VertexSet taken;
        for (int w : g.adj[v])
            if (raw[w] >= 0)
                taken.set(raw[w]);
        int c = 0;
        while (taken.test(c))
            ++c;
        if (c >= k)
            return std::nullopt;
        raw[v] = c;
    }
    return normalized(raw);
}

std::optional<Coloring> bipartition(const Graph& g) {
    std::vector<int> raw(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (raw[s] >= 0)
            continue;
        raw[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : g.adj[v]) {
                if (raw[w] < 0) {
                    raw[w] = 1 - raw[v];
                    queue.push_back(w);
                } else if (raw[w] == raw[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return normalized(raw);
}

} // namespace

std::optional<Coloring> find_k_coloring(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("find_k_coloring: negative k");
    if (g.n == 0)
        return Coloring{};
    if (k == 0)
        return std::nullopt;
    if (k == 1) {
        if (g.edge_count() > 0)
            return std::nullopt;
        Coloring c;
        c.colors_used = 1;
        c.assignment.assign(g.n, 0);
        return c;
    }
    if (k == 2)
        return bipartition(g);
    if (k > g.max_degree())
        return greedy_coloring(g, k); // always succeeds
    Solver s(g, k);
    if (!s.search())
        return std::nullopt;
    return normalized(s.assignment);
}

bool is_k_colorable(const Graph& g, int k) {
    return find_k_coloring(g, k).has_value();
}

int chromatic_number(const Graph& g) {
    if (g.n == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    for (int k = 2;; ++k)
        if (is_k_colorable(g, k))
            return k; // terminates: chi <= maxdeg + 1
}

bool verify_coloring(const Graph& g, const Coloring& c, int k) {
    if (static_cast<int>(c.assignment.size()) != g.n)
        return false;
    for (int v = 0; v < g.n; ++v)
        if (c.assignment[v] < 0 || c.assignment[v] >= k)
            return false;
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v])
            return false;
    return true;
}

bool is_vertex_critical(const Graph& g, int k) {
    if (chromatic_number(g) != k)
        throw std::invalid_argument(
            "is_vertex_critical: graph is not k-chromatic");
    for (int v = 0; v < g.n; ++v)
        if (!is_k_colorable(delete_vertex(g, v), k - 1))
            return false;
    return true;
}

bool is_critical(const Graph& g, int k) {
    if (!is_vertex_critical(g, k))
        return false;
    for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.remove_edge(u, v);
        if (!is_k_colorable(h, k - 1))
            return false;
    }
    return true;
}

bool reed_check(const Graph& g) {
    if (!is_triangle_free(g))
        throw std::invalid_argument("reed_check: graph has a triangle");
    int bound = (g.max_degree() + 1) / 2 + 2;
    return chromatic_number(g) <= bound;
}

bool verify_chromatic_number(const Graph& g, int chi, std::uint64_t seed,
                             int restarts) {
    if (chi < 0 || restarts < 1)
        return false;
    std::mt19937_64 rng(seed);
    std::vector<int> perm(g.n);
    for (int r = 0; r < restarts; ++r) {
        for (int i = 0; i < g.n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = apply_permutation(g, perm);
        auto witness = find_k_coloring(h, chi);
        if (!witness || !verify_coloring(h, *witness, chi))
            return false;
        if (chi > 0 && is_k_colorable(h, chi - 1))
            return false;
    }
    return true;
}

} // namespace kchrom
