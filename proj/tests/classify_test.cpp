#include "doctest.h"

#include "kchrom/classify.hpp"
#include "kchrom/color.hpp"
#include "kchrom/expand.hpp"
#include "kchrom/io.hpp"
#include "kchrom/mtfgen.hpp"
#include "test_util.hpp"

using namespace kchrom;
using namespace kchrom::testutil;

TEST_SUITE_BEGIN("classify");

TEST_CASE("record for the order-eleven graph") {
    GraphRecord r = classify_graph(grotzsch(), 2, 77);
    CHECK(r.key == canonical_key(grotzsch()));
    CHECK(r.canonical == canonical_form(grotzsch()));
    CHECK(r.order == 11);
    CHECK(r.canonical.edge_count() == 20);
    CHECK(r.chi == 4);
    CHECK(r.min_degree == 3);
    CHECK(r.max_degree == 5);
    CHECK(r.aut_order == 10);
    CHECK(!r.regular);
    CHECK(r.maximal_triangle_free);
    CHECK(r.vertex_critical);
    CHECK(r.critical);
    CHECK(r.chi_verified);
}

TEST_CASE("record for an even cycle") {
    GraphRecord r = classify_graph(cycle_graph(6));
    CHECK(r.order == 6);
    CHECK(r.chi == 2);
    CHECK(r.aut_order == 12);
    CHECK(r.regular);
    CHECK(!r.maximal_triangle_free);
    CHECK(!r.vertex_critical);
    CHECK(!r.critical);
    CHECK(!r.chi_verified); // no restarts requested
}

TEST_CASE("batch classification is worker-count independent") {
    MtfGenOptions opt;
    opt.min_degree = 0;
    auto gs = generate_mtf(8, opt);
    auto solo = classify_all(gs, 1, 5, 1);
    auto team = classify_all(gs, 1, 5, 4);
    REQUIRE(solo.size() == gs.size());
    REQUIRE(team.size() == gs.size());
    for (std::size_t i = 0; i < solo.size(); ++i) {
        CHECK(solo[i].key == team[i].key);
        CHECK(solo[i].chi == team[i].chi);
        CHECK(solo[i].aut_order == team[i].aut_order);
        CHECK(solo[i].chi_verified);
        CHECK(team[i].chi_verified);
    }
}

TEST_CASE("tally splits on and off target") {
    std::vector<Graph> gs{grotzsch(), cycle_graph(5), cycle_graph(7)};
    auto records = classify_all(gs);
    CountReport rep = tally(records, 3);
    CHECK(rep.k == 3);
    CHECK(rep.total == 2);
    CHECK(rep.off_target == 1);
    CHECK(rep.by_order[5] == 1);
    CHECK(rep.by_order[7] == 1);
    CHECK(rep.by_order_maxdeg[5][2] == 1);
    CHECK(rep.vertex_critical == 2); // odd cycles are vertex-critical
    CHECK(rep.critical == 2);
    CHECK(rep.maximal_triangle_free == 1); // C7 has open pairs
    CHECK(rep.regular == 2);
}

TEST_CASE("the order-twelve table reproduces") {
    MtfGenOptions opt;
    opt.min_degree = 2;
    std::vector<Graph> seeds;
    for (Graph& g : generate_mtf(12, opt))
        if (!is_k_colorable(g, 3)) seeds.push_back(std::move(g));
    auto family = expand_by_edge_removal(seeds, 4, 2);
    CountReport rep = tally(classify_all(family, 0, 0, 2), 4);
    CHECK(rep.total == 24);
    CHECK(rep.off_target == 0);
    CHECK(rep.by_order_maxdeg[12][4] == 3);
    CHECK(rep.by_order_maxdeg[12][5] == 18);
    CHECK(rep.by_order_maxdeg[12][6] == 3);
    CHECK(rep.vertex_critical == 4);
    CHECK(rep.critical == 2);
    CHECK(rep.maximal_triangle_free == 5);
    CHECK(rep.regular == 1);

    std::string table = render_table(rep);
    CHECK(table.find("24") != std::string::npos);
    std::string lines = render_lines(rep);
    CHECK(lines.find("count order=12 maxdeg=5 = 18") != std::string::npos);
    CHECK(lines.find("total = 24") != std::string::npos);
}

TEST_CASE("bundled 24-vertex fixture") {
    Graph g = read_adjacency_list_file(KCHROM_FIXTURE_DIR
                                       "/graph_24_7regular.adj");
    GraphRecord r = classify_graph(g, 1, 3);
    CHECK(r.order == 24);
    CHECK(r.regular);
    CHECK(r.max_degree == 7);
    CHECK(girth(g).value_or(0) == 4);
    CHECK(r.chi == 5);
    CHECK(r.chi_verified);
    CHECK(r.maximal_triangle_free);
    CHECK(r.vertex_critical);
    CHECK(!r.critical);
    CHECK(r.aut_order == 2);
}

TEST_CASE("bundled 40-vertex fixture, cheap facts only") {
    Graph g = read_adjacency_list_file(KCHROM_FIXTURE_DIR
                                       "/graph_40_chi6.adj");
    CHECK(g.n == 40);
    CHECK(is_triangle_free(g));
    CHECK(girth(g).value_or(0) == 4);
    CHECK(is_maximal_triangle_free(g));
    CHECK(g.max_degree() >= 11);
    CHECK(g.max_degree() <= 14);
    std::uint64_t aut = automorphism_group_order(g);
    CHECK((aut == 1 || aut == 2));
    // the chromatic number itself is exercised by the acceptance run
}

TEST_SUITE_END();
