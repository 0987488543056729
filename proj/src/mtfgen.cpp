#include "kchrom/mtfgen.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "kchrom/canon.hpp"
#include "kchrom/io.hpp"
#include "kchrom/parallel.hpp"

namespace kchrom {

namespace {

Graph with_new_vertex(const Graph& h, VertexSet s) {
    Graph c = h;
    c.n = h.n + 1;
    c.adj.resize(c.n);
    for (int u : s)
        c.add_edge(h.n, u);
    return c;
}

// Every independent set of g (the empty set included) that contains `seed`,
// once each, extra vertices taken in ascending order.
template <typename Emit>
void indep_sets(const Graph& g, int from, VertexSet chosen, VertexSet excluded,
                const Emit& emit) {
    emit(chosen);
    for (int v = from; v < g.n; ++v) {
        if (excluded.test(v))
            continue;
        indep_sets(g, v + 1, chosen | VertexSet::single(v),
                   excluded | g.adj[v], emit);
    }
}

// Greedy antichain of pairwise non-co-coverable deficient pairs. Two pairs
// can share a covering vertex only when all four endpoints are independent
// (the covering vertex's neighbourhood is independent in a triangle-free
// graph), so the antichain size lower-bounds the vertices still needed.
int cover_lower_bound(const Graph& g,
                      const std::vector<std::pair<int, int>>& pairs) {
    std::vector<VertexSet> kept;
    for (auto [a, b] : pairs) {
        VertexSet u = VertexSet::single(a) | VertexSet::single(b);
        bool independent_with_kept = false;
        for (VertexSet k : kept) {
            VertexSet both = u | k;
            bool edge = false;
            for (int x : both)
                if (g.adj[x].intersects(both)) {
                    edge = true;
                    break;
                }
            if (!edge) {
                independent_with_kept = true;
                break;
            }
        }
        if (!independent_with_kept)
            kept.push_back(u);
    }
    return static_cast<int>(kept.size());
}

struct LevelMaps {
    std::map<CanonicalKey, Graph> next;
    std::map<CanonicalKey, Graph> finals;
};

void expand_state(const Graph& h, int n, LevelMaps& out) {
    int r_after = n - h.n - 1; // vertices left after the one being added
    auto deficient = open_pairs(h);
    auto consider = [&](VertexSet s) {
        Graph child = with_new_vertex(h, s);
        auto child_pairs = open_pairs(child);
        if (r_after == 0) {
            if (child_pairs.empty()) { // maximal triangle-free at order n
                Graph canon = canonical_form(child);
                CanonicalKey key = graph6_encode(canon);
                out.finals.emplace(std::move(key), std::move(canon));
            }
            return;
        }
        if (cover_lower_bound(child, child_pairs) > r_after)
            return;
        Graph canon = canonical_form(child);
        CanonicalKey key = graph6_encode(canon);
        out.next.emplace(std::move(key), std::move(canon));
    };
    if (deficient.empty()) {
        indep_sets(h, 0, VertexSet(), VertexSet(), consider);
    } else {
        // the new vertex must close the first deficient pair of this
        // (canonical) representative; any completion has a vertex doing so,
        // and remaining vertices may be added in any order afterwards
        auto [a, b] = deficient.front();
        VertexSet seed = VertexSet::single(a) | VertexSet::single(b);
        indep_sets(h, 0, seed, h.adj[a] | h.adj[b] | seed, consider);
    }
}

std::vector<Graph> run_levelwise(int n, const MtfGenOptions& opt) {
    std::map<CanonicalKey, Graph> finals;
    std::vector<Graph> level{Graph(1)};
    for (int m = 1; m < n; ++m) {
        int workers = resolve_workers(opt.workers);
        std::vector<LevelMaps> local(workers);
        run_sharded(workers, [&](int w) {
            for (std::size_t i = 0; i < level.size(); ++i)
                if (owns(i, w, workers))
                    expand_state(level[i], n, local[w]);
        });
        std::map<CanonicalKey, Graph> next;
        for (auto& lm : local) {
            next.merge(lm.next);
            finals.merge(lm.finals);
        }
        level.clear();
        level.reserve(next.size());
        for (auto& [key, g] : next)
            level.push_back(std::move(g));
    }
    if (n == 1)
        finals.emplace(graph6_encode(level[0]), level[0]); // K1 is maximal
    std::vector<Graph> out;
    for (auto& [key, g] : finals)
        if (g.min_degree() >= opt.min_degree)
            out.push_back(std::move(g));
    return out;
}

std::vector<Graph> run_brute(int n, const MtfGenOptions& opt) {
    std::map<CanonicalKey, Graph> level;
    {
        Graph e = Graph(n);
        CanonicalKey key = graph6_encode(e);
        level.emplace(std::move(key), std::move(e));
    }
    std::map<CanonicalKey, Graph> finals;
    while (!level.empty()) {
        std::vector<const Graph*> states;
        states.reserve(level.size());
        for (auto& [key, g] : level)
            states.push_back(&g);
        int workers = resolve_workers(opt.workers);
        std::vector<std::map<CanonicalKey, Graph>> local_next(workers);
        std::vector<std::map<CanonicalKey, Graph>> local_finals(workers);
        run_sharded(workers, [&](int w) {
            for (std::size_t i = 0; i < states.size(); ++i) {
                if (!owns(i, w, workers))
                    continue;
                const Graph& g = *states[i];
                auto pairs = open_pairs(g);
                if (pairs.empty()) { // no admissible edge: maximal
                    local_finals[w].emplace(graph6_encode(g), g);
                    continue;
                }
                for (auto [u, v] : pairs) {
                    Graph child = g;
                    child.add_edge(u, v);
                    Graph canon = canonical_form(child);
                    CanonicalKey key = graph6_encode(canon);
                    local_next[w].emplace(std::move(key), std::move(canon));
                }
            }
        });
        std::map<CanonicalKey, Graph> next;
        for (int w = 0; w < workers; ++w) {
            next.merge(local_next[w]);
            finals.merge(local_finals[w]);
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [key, g] : finals)
        if (g.min_degree() >= opt.min_degree)
            out.push_back(std::move(g));
    return out;
}

void closure_walk(const Graph& g, DedupStore& seen,
                  std::map<CanonicalKey, Graph>& out) {
    Graph canon = canonical_form(g);
    CanonicalKey key = graph6_encode(canon);
    if (!seen.insert(key))
        return;
    auto pairs = open_pairs(canon);
    if (pairs.empty()) {
        out.emplace(std::move(key), std::move(canon));
        return;
    }
    for (auto [u, v] : pairs) {
        Graph child = canon;
        child.add_edge(u, v);
        closure_walk(child, seen, out);
    }
}

} // namespace

std::vector<Graph> generate_mtf(int n, const MtfGenOptions& opt) {
    if (n <= 0)
        return {};
    if (n > VertexSet::capacity)
        throw std::invalid_argument("generate_mtf: order exceeds capacity");
    bool brute = opt.mode == MtfGenOptions::Mode::brute ||
                 (opt.mode == MtfGenOptions::Mode::automatic && n <= 10);
    return brute ? run_brute(n, opt) : run_levelwise(n, opt);
}

std::vector<Graph> mtf_closure(const Graph& g) {
    if (!is_triangle_free(g))
        throw std::invalid_argument("mtf_closure: graph has a triangle");
    DedupStore seen;
    std::map<CanonicalKey, Graph> out;
    closure_walk(g, seen, out);
    std::vector<Graph> result;
    result.reserve(out.size());
    for (auto& [key, h] : out)
        result.push_back(std::move(h));
    return result;
}

} // namespace kchrom
