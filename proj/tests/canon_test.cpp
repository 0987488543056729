#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "kchrom/canon.hpp"
#include "kchrom/io.hpp"
#include "test_util.hpp"

using namespace kchrom;
using namespace kchrom::testutil;

namespace {

// Brute-force canonical form: the lexicographically least upper-triangle bit
// mask over all n! relabellings. Only sane for n <= 6.
std::uint64_t min_perm_mask(const Graph& g) {
    std::vector<int> p(g.n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t m = 0;
        int bit = 0;
        for (int j = 1; j < g.n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.has_edge(p[i], p[j])) m |= std::uint64_t(1) << bit;
        best = std::min(best, m);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

} // namespace

TEST_SUITE_BEGIN("canon");

TEST_CASE("keys are invariant under relabelling") {
    std::mt19937_64 rng(7);
    std::vector<Graph> gs{cycle_graph(5), petersen(), grotzsch(),
                          complete_bipartite(3, 3)};
    for (int t = 0; t < 6; ++t) gs.push_back(random_graph(10, 0.4, rng));
    for (const Graph& g : gs) {
        CanonicalKey key = canonical_key(g);
        for (int t = 0; t < 12; ++t) {
            Graph h = apply_permutation(g, random_permutation(g.n, rng));
            CHECK(canonical_key(h) == key);
        }
    }
}

TEST_CASE("canonical labelling agrees with the all-permutations oracle") {
    // One canonical class per oracle class and vice versa, across every
    // labelled graph on up to 6 vertices.
    const std::size_t expected_classes[] = {11, 34, 156};
    for (int n = 4; n <= 6; ++n) {
        std::map<std::uint64_t, std::set<CanonicalKey>> classes;
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = labeled_graph(n, mask);
            classes[min_perm_mask(g)].insert(canonical_key(g));
        }
        CHECK(classes.size() == expected_classes[n - 4]);
        std::set<CanonicalKey> all_keys;
        for (const auto& [mask, keys] : classes) {
            CHECK(keys.size() == 1);
            all_keys.insert(keys.begin(), keys.end());
        }
        CHECK(all_keys.size() == classes.size());
    }
}

TEST_CASE("class counts on 7 and 8 vertices") {
    // Grow every graph one edge at a time from the empty graph, deduping by
    // key; the totals are the published numbers of graphs on n nodes.
    for (auto [n, expected] : {std::pair{7, 1044ul}, std::pair{8, 12346ul}}) {
        DedupStore seen;
        std::vector<Graph> level{Graph(n)};
        dedup_insert(seen, level.front());
        while (!level.empty()) {
            std::vector<Graph> next;
            for (const Graph& g : level)
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        if (g.has_edge(u, v)) continue;
                        Graph h = g;
                        h.add_edge(u, v);
                        Graph c = canonical_form(h);
                        if (dedup_insert(seen, c)) next.push_back(std::move(c));
                    }
            level = std::move(next);
        }
        CHECK(seen.size() == expected);
    }
}

TEST_CASE("canonical_form is reached by the reported permutation") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(3 + int(rng() % 9), 0.5, rng);
        CanonResult r = canonicalize(g);
        CHECK(apply_permutation(g, r.to_canonical) == r.canonical);
        CHECK(graph6_encode(r.canonical) == canonical_key(g));
    }
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group_order(cycle_graph(5)) == 10);
    CHECK(automorphism_group_order(petersen()) == 120);
    CHECK(automorphism_group_order(grotzsch()) == 10);
    CHECK(automorphism_group_order(complete_bipartite(3, 3)) == 72);
    CHECK(automorphism_group_order(complete_bipartite(4, 4)) == 1152);
    CHECK(automorphism_group_order(complete_bipartite(1, 6)) == 720);
    CHECK(automorphism_group_order(path_graph(4)) == 2);
    CHECK(automorphism_group_order(Graph(5)) == 120);
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    CHECK(automorphism_group_order(two_k2) == 8);
    CHECK(automorphism_group_order(Graph(0)) == 1);
    CHECK(automorphism_group_order(Graph(1)) == 1);
}

TEST_CASE("aut order is a relabelling invariant") {
    std::mt19937_64 rng(23);
    for (const Graph& g : {petersen(), grotzsch()}) {
        for (int t = 0; t < 5; ++t) {
            Graph h = apply_permutation(g, random_permutation(g.n, rng));
            CHECK(automorphism_group_order(h) == automorphism_group_order(g));
        }
    }
}

TEST_CASE("dedup store") {
    DedupStore store;
    CHECK(store.insert("b"));
    CHECK(!store.insert("b"));
    CHECK(store.insert("a"));
    CHECK(store.contains("a"));
    CHECK(!store.contains("c"));
    CHECK(store.sorted_keys() == std::vector<CanonicalKey>{"a", "b"});

    DedupStore other;
    other.insert("c");
    other.insert("a");
    store.merge(other);
    CHECK(store.size() == 3);
    CHECK(store.sorted_keys() == std::vector<CanonicalKey>{"a", "b", "c"});

    std::mt19937_64 rng(5);
    DedupStore relabels;
    for (int t = 0; t < 20; ++t)
        dedup_insert(relabels,
                     apply_permutation(petersen(),
                                       random_permutation(10, rng)));
    CHECK(relabels.size() == 1);
}

TEST_SUITE_END();
