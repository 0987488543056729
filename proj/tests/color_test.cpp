#include "doctest.h"

#include <random>

#include "kchrom/color.hpp"
#include "test_util.hpp"

using namespace kchrom;
using namespace kchrom::testutil;

namespace {

// Exhaustive oracle: smallest k admitting any of the k^n assignments.
bool oracle_k_colorable(const Graph& g, int k) {
    if (g.n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> c(g.n, 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                if (g.has_edge(u, v) && c[u] == c[v]) ok = false;
        if (ok) return true;
        int i = 0;
        while (i < g.n && ++c[i] == k) c[i++] = 0;
        if (i == g.n) return false;
    }
}

int oracle_chromatic(const Graph& g) {
    for (int k = 0;; ++k)
        if (oracle_k_colorable(g, k)) return k;
}

bool first_occurrence_normalized(const Coloring& c) {
    int seen = 0;
    for (int x : c.assignment) {
        if (x > seen) return false;
        if (x == seen) ++seen;
    }
    return seen == c.colors_used;
}

} // namespace

TEST_SUITE_BEGIN("color");

TEST_CASE("chromatic numbers of the usual suspects") {
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(1)) == 1);
    CHECK(chromatic_number(Graph(5)) == 1);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(cycle_graph(7)) == 3);
    CHECK(chromatic_number(complete_bipartite(3, 3)) == 2);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(grotzsch()) == 4);
}

TEST_CASE("solver agrees with the assignment-enumeration oracle") {
    for (int n = 1; n <= 5; ++n)
        for (unsigned long mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = labeled_graph(n, mask);
            int chi = oracle_chromatic(g);
            CHECK(chromatic_number(g) == chi);
            CHECK(is_k_colorable(g, chi));
            CHECK(!is_k_colorable(g, chi - 1));
        }
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        Graph g = labeled_graph(6, rng() % labeled_graph_count(6));
        CHECK(chromatic_number(g) == oracle_chromatic(g));
    }
}

TEST_CASE("witnesses are proper and normalized") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(4 + int(rng() % 9), 0.45, rng);
        int chi = chromatic_number(g);
        auto c = find_k_coloring(g, chi);
        REQUIRE(c.has_value());
        CHECK(c->colors_used == chi);
        CHECK(int(c->assignment.size()) == g.n);
        CHECK(verify_coloring(g, *c, chi));
        CHECK(first_occurrence_normalized(*c));
        CHECK(!find_k_coloring(g, chi - 1).has_value());
    }
}

TEST_CASE("verify_coloring rejects bad witnesses") {
    Graph g = cycle_graph(5);
    Coloring c{3, {0, 1, 0, 1, 2}};
    CHECK(verify_coloring(g, c, 3));
    Coloring clash{3, {0, 0, 0, 1, 2}};
    CHECK(!verify_coloring(g, clash, 3));
    Coloring short_vec{3, {0, 1, 0}};
    CHECK(!verify_coloring(g, short_vec, 3));
    Coloring over_k{3, {0, 1, 0, 1, 3}};
    CHECK(!verify_coloring(g, over_k, 3));
    CHECK(!verify_coloring(g, c, 2));
}

TEST_CASE("small k edge cases") {
    CHECK(is_k_colorable(Graph(0), 0));
    CHECK(!is_k_colorable(Graph(1), 0));
    CHECK(is_k_colorable(Graph(3), 1));
    CHECK(!is_k_colorable(path_graph(2), 1));
    CHECK(is_k_colorable(cycle_graph(6), 2));
    CHECK(!is_k_colorable(cycle_graph(5), 2));
    CHECK(is_k_colorable(complete_bipartite(4, 7), 2));
    // above the max-degree bound everything succeeds greedily
    CHECK(is_k_colorable(petersen(), 4));
    CHECK(is_k_colorable(grotzsch(), 6));
}

TEST_CASE("vertex criticality") {
    CHECK(is_vertex_critical(cycle_graph(5), 3));
    CHECK(is_vertex_critical(grotzsch(), 4));
    CHECK(!is_vertex_critical(petersen(), 3));
    CHECK(is_vertex_critical(cycle_graph(7), 3));
    CHECK(!is_vertex_critical(cycle_graph(6), 2));
    CHECK_THROWS_AS((void)is_vertex_critical(cycle_graph(5), 4),
                    std::invalid_argument);

    Graph padded = grotzsch(); // isolated vertex: chi 4 but not critical
    padded.adj.resize(12);
    padded.n = 12;
    CHECK(chromatic_number(padded) == 4);
    CHECK(!is_vertex_critical(padded, 4));
}

TEST_CASE("edge criticality") {
    CHECK(is_critical(cycle_graph(5), 3));
    CHECK(is_critical(grotzsch(), 4));
    CHECK(!is_critical(petersen(), 3));
    CHECK(is_critical(complete_bipartite(1, 1), 2));
    CHECK_THROWS_AS((void)is_critical(petersen(), 4), std::invalid_argument);
}

TEST_CASE("triangle-free degree bound") {
    CHECK(reed_check(cycle_graph(5)));
    CHECK(reed_check(grotzsch()));
    CHECK(reed_check(petersen()));
    CHECK(reed_check(Graph(3)));
    CHECK_THROWS_AS((void)reed_check(cycle_graph(3)), std::invalid_argument);
}

TEST_CASE("independent chi re-verification") {
    CHECK(verify_chromatic_number(grotzsch(), 4, 99));
    CHECK(!verify_chromatic_number(grotzsch(), 3, 99));
    CHECK(!verify_chromatic_number(grotzsch(), 5, 99));
    CHECK(verify_chromatic_number(petersen(), 3, 1, 5));
    CHECK(verify_chromatic_number(Graph(1), 1, 0));
}

TEST_SUITE_END();
