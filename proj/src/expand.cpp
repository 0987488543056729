#include "kchrom/expand.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "kchrom/canon.hpp"
#include "kchrom/color.hpp"
#include "kchrom/io.hpp"
#include "kchrom/mtfgen.hpp"
#include "kchrom/parallel.hpp"

namespace kchrom {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// DFS down the edge-removal lattice keeping chi >= k; collects chi == k
// nodes. Seeds may sit above k.
void removal_walk(const Graph& g, int k, DedupStore& seen,
                  std::map<CanonicalKey, Graph>& out) {
    Graph canon = canonical_form(g);
    CanonicalKey key = graph6_encode(canon);
    if (!seen.insert(key))
        return;
    if (chromatic_number(canon) == k)
        out.emplace(std::move(key), canon);
    for (auto [u, v] : canon.edges()) {
        Graph child = canon;
        child.remove_edge(u, v);
        if (is_k_colorable(child, k - 1))
            continue; // chi dropped below k: nothing k-chromatic survives
        removal_walk(child, k, seen, out);
    }
}

std::vector<Graph> merged_values(std::vector<std::map<CanonicalKey, Graph>>& parts) {
    std::map<CanonicalKey, Graph> all;
    for (auto& p : parts)
        all.merge(p);
    std::vector<Graph> out;
    out.reserve(all.size());
    for (auto& [key, g] : all)
        out.push_back(std::move(g));
    return out;
}

// Spanning subgraphs of g in which every edge is needed to stay k-chromatic.
// Exhaustive over removal orders (memoized) up to order 13; above that,
// `tries` random removal descents from the supplied generator.
void edge_critical_walk(const Graph& g, int k, DedupStore& seen,
                        std::map<CanonicalKey, Graph>& out) {
    Graph canon = canonical_form(g);
    CanonicalKey key = graph6_encode(canon);
    if (!seen.insert(key))
        return;
    bool any_removable = false;
    for (auto [u, v] : canon.edges()) {
        Graph child = canon;
        child.remove_edge(u, v);
        if (is_k_colorable(child, k - 1))
            continue;
        any_removable = true;
        edge_critical_walk(child, k, seen, out);
    }
    if (!any_removable)
        out.emplace(std::move(key), std::move(canon));
}

std::vector<Graph> edge_critical_subgraphs(const Graph& g, int k,
                                           std::mt19937_64& rng, int tries) {
    std::map<CanonicalKey, Graph> out;
    if (g.n <= 13) {
        DedupStore seen;
        edge_critical_walk(g, k, seen, out);
    } else {
        for (int t = 0; t < tries; ++t) {
            Graph h = g;
            for (;;) {
                std::vector<std::pair<int, int>> removable;
                for (auto [u, v] : h.edges()) {
                    Graph child = h;
                    child.remove_edge(u, v);
                    if (!is_k_colorable(child, k - 1))
                        removable.push_back({u, v});
                }
                if (removable.empty())
                    break;
                auto [u, v] = removable[rng() % removable.size()];
                h.remove_edge(u, v);
            }
            Graph canon = canonical_form(h);
            CanonicalKey key = graph6_encode(canon);
            out.emplace(std::move(key), std::move(canon));
        }
    }
    std::vector<Graph> result;
    result.reserve(out.size());
    for (auto& [key, h] : out)
        result.push_back(std::move(h));
    return result;
}

} // namespace

std::vector<Graph> expand_by_edge_removal(const std::vector<Graph>& seeds,
                                          int k, int workers,
                                          ExpandStats* stats) {
    workers = resolve_workers(workers);
    std::vector<std::map<CanonicalKey, Graph>> local(workers);
    std::vector<std::vector<std::string>> local_skips(workers);
    run_sharded(workers, [&](int w) {
        DedupStore seen;
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            if (!owns(i, w, workers))
                continue;
            if (chromatic_number(seeds[i]) != k) {
                local_skips[w].push_back(graph6_encode(seeds[i]));
                continue;
            }
            removal_walk(seeds[i], k, seen, local[w]);
        }
    });
    if (stats)
        for (auto& skips : local_skips)
            for (auto& s : skips)
                stats->skipped.push_back(std::move(s));
    return merged_values(local);
}

std::vector<Graph> chromatic_family(int k, int n, int workers) {
    MtfGenOptions opt;
    opt.min_degree = 0;
    opt.workers = workers;
    std::vector<Graph> seeds;
    for (auto& g : generate_mtf(n, opt))
        if (!is_k_colorable(g, k - 1)) // chi >= k
            seeds.push_back(std::move(g));
    workers = resolve_workers(workers);
    std::vector<std::map<CanonicalKey, Graph>> local(workers);
    run_sharded(workers, [&](int w) {
        DedupStore seen;
        for (std::size_t i = 0; i < seeds.size(); ++i)
            if (owns(i, w, workers))
                removal_walk(seeds[i], k, seen, local[w]);
    });
    return merged_values(local);
}

HeuristicResult heuristic_search(const std::vector<Graph>& seeds, int k,
                                 int budget, std::uint64_t seed,
                                 int workers) {
    constexpr int kSampleTries = 8;
    std::map<CanonicalKey, Graph> pool;
    for (const auto& s : seeds) {
        if (!is_maximal_triangle_free(s) || chromatic_number(s) != k)
            throw std::invalid_argument(
                "heuristic_search: seed is not maximal triangle-free "
                "k-chromatic: " +
                graph6_encode(s));
        Graph canon = canonical_form(s);
        CanonicalKey key = graph6_encode(canon);
        pool.emplace(std::move(key), std::move(canon));
    }
    std::map<CanonicalKey, Graph> harvest;
    std::vector<const std::pair<const CanonicalKey, Graph>*> frontier;
    for (auto& entry : pool)
        frontier.push_back(&entry);
    int nworkers = resolve_workers(workers);
    for (int pass = 0; pass < budget && !frontier.empty(); ++pass) {
        std::vector<std::map<CanonicalKey, Graph>> found(nworkers);
        std::vector<std::map<CanonicalKey, Graph>> nonvc(nworkers);
        run_sharded(nworkers, [&](int w) {
            for (std::size_t i = 0; i < frontier.size(); ++i) {
                if (!owns(i, w, nworkers))
                    continue;
                const auto& [key, g] = *frontier[i];
                if (!is_vertex_critical(g, k))
                    nonvc[w].emplace(key, g);
                std::mt19937_64 rng(seed ^ fnv1a(key));
                for (const Graph& crit :
                     edge_critical_subgraphs(g, k, rng, kSampleTries)) {
                    for (Graph& closed : mtf_closure(crit)) {
                        if (chromatic_number(closed) != k)
                            continue;
                        CanonicalKey ck = graph6_encode(closed);
                        found[w].emplace(std::move(ck), std::move(closed));
                    }
                }
            }
        });
        for (auto& m : nonvc)
            harvest.merge(m);
        std::map<CanonicalKey, Graph> fresh;
        for (auto& m : found)
            fresh.merge(m);
        frontier.clear();
        for (auto& [key, g] : fresh) {
            auto [it, inserted] = pool.emplace(key, std::move(g));
            if (inserted)
                frontier.push_back(&*it);
        }
    }
    HeuristicResult res;
    for (auto& [key, g] : pool)
        res.pool.push_back(g);
    for (auto& [key, g] : harvest)
        res.harvest.push_back(g);
    return res;
}

std::vector<Graph> descend_order(const Graph& g, int k) {
    if (chromatic_number(g) != k)
        throw std::invalid_argument("descend_order: graph is not k-chromatic");
    std::map<CanonicalKey, Graph> out;
    for (int v = 0; v < g.n; ++v) {
        Graph h = delete_vertex(g, v);
        if (is_k_colorable(h, k - 1))
            continue;
        Graph canon = canonical_form(h);
        CanonicalKey key = graph6_encode(canon);
        out.emplace(std::move(key), std::move(canon));
    }
    std::vector<Graph> result;
    result.reserve(out.size());
    for (auto& [key, h] : out)
        result.push_back(std::move(h));
    return result;
}

} // namespace kchrom
