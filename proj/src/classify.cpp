#include "kchrom/classify.hpp"

#include <sstream>

#include "kchrom/color.hpp"
#include "kchrom/io.hpp"
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

} // namespace

GraphRecord classify_graph(const Graph& g, int verify_restarts,
                           std::uint64_t seed) {
    GraphRecord r;
    CanonResult canon = canonicalize(g, true);
    r.canonical = std::move(canon.canonical);
    r.key = graph6_encode(r.canonical);
    r.aut_order = canon.aut_order;
    r.order = g.n;
    r.chi = chromatic_number(g);
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.regular = g.is_regular();
    r.maximal_triangle_free = is_maximal_triangle_free(g);
    r.vertex_critical = g.n > 0 && is_vertex_critical(g, r.chi);
    r.critical = r.vertex_critical && is_critical(g, r.chi);
    if (verify_restarts > 0)
        r.chi_verified = verify_chromatic_number(
            g, r.chi, seed ^ fnv1a(r.key), verify_restarts);
    return r;
}

std::vector<GraphRecord> classify_all(const std::vector<Graph>& graphs,
                                      int verify_restarts, std::uint64_t seed,
                                      int workers) {
    workers = resolve_workers(workers);
    std::vector<GraphRecord> records(graphs.size());
    run_sharded(workers, [&](int w) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (owns(i, w, workers))
                records[i] = classify_graph(graphs[i], verify_restarts, seed);
    });
    return records;
}

CountReport tally(const std::vector<GraphRecord>& records, int k) {
    CountReport rep;
    rep.k = k;
    for (const auto& r : records) {
        if (r.chi != k) {
            ++rep.off_target;
            continue;
        }
        ++rep.total;
        ++rep.by_order[r.order];
        ++rep.by_order_maxdeg[r.order][r.max_degree];
        if (r.vertex_critical)
            ++rep.vertex_critical;
        if (r.critical)
            ++rep.critical;
        if (r.maximal_triangle_free)
            ++rep.maximal_triangle_free;
        if (r.regular)
            ++rep.regular;
    }
    return rep;
}

std::string render_table(const CountReport& rep) {
    std::ostringstream out;
    out << "chromatic number " << rep.k << ": " << rep.total << " classes";
    if (rep.off_target > 0)
        out << " (" << rep.off_target << " off-target ignored)";
    out << "\n";
    out << "order  maxdeg  count\n";
    for (const auto& [order, row] : rep.by_order_maxdeg) {
        for (const auto& [maxdeg, count] : row) {
            out << "  " << order << "      " << maxdeg << "      " << count
                << "\n";
        }
        out << "  " << order << "    all      " << rep.by_order.at(order)
            << "\n";
    }
    out << "vertex-critical: " << rep.vertex_critical << "\n";
    out << "critical: " << rep.critical << "\n";
    out << "maximal triangle-free: " << rep.maximal_triangle_free << "\n";
    out << "regular: " << rep.regular << "\n";
    return out.str();
}

std::string render_lines(const CountReport& rep) {
    std::ostringstream out;
    out << "k = " << rep.k << "\n";
    out << "total = " << rep.total << "\n";
    out << "off_target = " << rep.off_target << "\n";
    for (const auto& [order, row] : rep.by_order_maxdeg) {
        out << "count order=" << order << " = " << rep.by_order.at(order)
            << "\n";
        for (const auto& [maxdeg, count] : row)
            out << "count order=" << order << " maxdeg=" << maxdeg << " = "
                << count << "\n";
    }
    out << "vertex_critical = " << rep.vertex_critical << "\n";
    out << "critical = " << rep.critical << "\n";
    out << "maximal_triangle_free = " << rep.maximal_triangle_free << "\n";
    out << "regular = " << rep.regular << "\n";
    return out.str();
}

} // namespace kchrom
