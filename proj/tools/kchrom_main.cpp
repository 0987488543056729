#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "kchrom/canon.hpp"
#include "kchrom/classify.hpp"
#include "kchrom/color.hpp"
#include "kchrom/expand.hpp"
#include "kchrom/extend.hpp"
#include "kchrom/graph.hpp"
#include "kchrom/io.hpp"
#include "kchrom/mtfgen.hpp"

using namespace kchrom;

namespace {

std::vector<Graph> load_graph6(const std::string& path) {
    if (path.empty() || path == "-")
        return read_graph6_stream(std::cin);
    return read_graph6_file(path);
}

void store_graph6(const std::string& path, const std::vector<Graph>& gs) {
    if (path.empty() || path == "-") {
        write_graph6_stream(std::cout, gs);
        return;
    }
    write_graph6_file(path, gs);
}

void write_adjlist(std::ostream& out, const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        out << v << ":";
        for (int w : g.adj[v])
            out << " " << w;
        out << "\n";
    }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle-free k-chromatic graph pipeline"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    int workers = 1;

    // gen-mtf
    auto* gen = app.add_subcommand(
        "gen-mtf", "enumerate maximal triangle-free graphs of an order");
    int gen_n = 0, gen_mindeg = 2;
    std::string gen_mode = "auto";
    gen->add_option("--n", gen_n, "order")->required();
    gen->add_option("--min-degree", gen_mindeg, "minimum degree filter");
    gen->add_option("--mode", gen_mode, "auto, brute or levelwise")
        ->check(CLI::IsMember({"auto", "brute", "levelwise"}));
    gen->add_option("--workers", workers, "worker threads (0 = hardware)");
    gen->add_option("-o,--out", out_path, "output graph6 file");

    // extend
    auto* ext = app.add_subcommand(
        "extend", "degree-d extension of a host family");
    ExtensionSpec spec;
    bool ext_girth5 = false;
    ext->add_option("--k", spec.k, "target chromatic number")->required();
    ext->add_option("--n", spec.n, "target order")->required();
    ext->add_option("--d", spec.d, "target maximum degree")->required();
    ext->add_flag("--girth5", ext_girth5,
                  "girth-5 mode: hosts of girth >= 5 and maxdeg <= d, "
                  "distance-3 attachment sets");
    ext->add_flag("--vertex-critical", spec.vertex_critical_only,
                  "keep only vertex-critical outputs");
    ext->add_option("-i,--hosts", in_path, "host graph6 file (default stdin)");
    ext->add_option("--workers", workers, "worker threads (0 = hardware)");
    ext->add_option("-o,--out", out_path, "output graph6 file");

    // expand
    auto* exp = app.add_subcommand(
        "expand", "close k-chromatic graphs downward under edge removal");
    int exp_k = 0;
    exp->add_option("--k", exp_k, "chromatic number to preserve")->required();
    exp->add_option("-i,--seeds", in_path, "seed graph6 file (default stdin)");
    exp->add_option("--workers", workers, "worker threads (0 = hardware)");
    exp->add_option("-o,--out", out_path, "output graph6 file");

    // classify
    auto* cls = app.add_subcommand(
        "classify", "count classes by order and maximum degree");
    int cls_k = 0, cls_restarts = 0;
    std::uint64_t cls_seed = 1;
    bool cls_lines = false;
    cls->add_option("--k", cls_k, "chromatic number to tally")->required();
    cls->add_option("--verify-restarts", cls_restarts,
                    "re-derive each chromatic number under this many random "
                    "relabellings");
    cls->add_option("--seed", cls_seed, "seed for the re-derivation");
    cls->add_flag("--lines", cls_lines, "machine-readable lines");
    cls->add_option("-i,--in", in_path, "input graph6 file (default stdin)");
    cls->add_option("--workers", workers, "worker threads (0 = hardware)");

    // mycielski
    auto* myc = app.add_subcommand(
        "mycielski", "apply the Mycielski construction to each input graph");
    myc->add_option("-i,--in", in_path, "input graph6 file (default stdin)");
    myc->add_option("-o,--out", out_path, "output graph6 file");

    // heuristic
    auto* heu = app.add_subcommand(
        "heuristic",
        "grow a pool of maximal triangle-free k-chromatic graphs and harvest "
        "the non-vertex-critical ones");
    int heu_k = 0, heu_budget = 4;
    std::uint64_t heu_seed = 1;
    std::string harvest_path;
    heu->add_option("--k", heu_k, "chromatic number")->required();
    heu->add_option("--budget", heu_budget, "maximum passes");
    heu->add_option("--seed", heu_seed, "sampling seed");
    heu->add_option("-i,--seeds", in_path, "seed graph6 file (default stdin)");
    heu->add_option("-o,--out", out_path, "pool output graph6 file");
    heu->add_option("--harvest", harvest_path, "harvest output graph6 file");
    heu->add_option("--workers", workers, "worker threads (0 = hardware)");

    // certify-lower-bound
    auto* cert = app.add_subcommand(
        "certify-lower-bound",
        "case analysis that no triangle-free graph of order n reaches "
        "chromatic number k");
    int cert_k = 0, cert_n = 0;
    CertifyOptions cert_opt;
    cert->add_option("--k", cert_k, "chromatic number")->required();
    cert->add_option("--n", cert_n, "order")->required();
    cert->add_option("--assume", cert_opt.assume,
                     "imported fact, e.g. n(5)=22");
    cert->add_option("--enum-cap", cert_opt.enum_cap,
                     "largest order settled by direct enumeration");
    cert->add_option("--workers", workers, "worker threads (0 = hardware)");

    // verify
    auto* ver = app.add_subcommand(
        "verify", "re-derive and print the properties of each input graph");
    std::uint64_t ver_seed = 1;
    int ver_restarts = 2;
    ver->add_option("-i,--in", in_path, "input graph6 file (default stdin)");
    ver->add_option("--seed", ver_seed, "relabelling seed");
    ver->add_option("--restarts", ver_restarts,
                    "random relabellings for the chromatic re-derivation");

    // canon
    auto* can = app.add_subcommand("canon", "canonical form of each graph");
    bool can_aut = false;
    can->add_flag("--aut", can_aut, "append the automorphism group order");
    can->add_option("-i,--in", in_path, "input graph6 file (default stdin)");
    can->add_option("-o,--out", out_path, "output graph6 file");

    // convert
    auto* conv = app.add_subcommand(
        "convert", "convert between adjacency-list and graph6");
    std::string conv_from = "adjlist", conv_to;
    conv->add_option("--from", conv_from, "adjlist or g6")
        ->check(CLI::IsMember({"adjlist", "g6"}));
    conv->add_option("--to", conv_to, "adjlist or g6 (default: the other)")
        ->check(CLI::IsMember({"adjlist", "g6"}));
    conv->add_option("-i,--in", in_path, "input file (default stdin)");
    conv->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            MtfGenOptions opt;
            opt.min_degree = gen_mindeg;
            opt.workers = workers;
            if (gen_mode == "brute")
                opt.mode = MtfGenOptions::Mode::brute;
            else if (gen_mode == "levelwise")
                opt.mode = MtfGenOptions::Mode::levelwise;
            auto out = generate_mtf(gen_n, opt);
            std::cerr << "gen-mtf: " << out.size() << " classes\n";
            store_graph6(out_path, out);
        } else if (ext->parsed()) {
            spec.girth_min = ext_girth5 ? 5 : 3;
            spec.workers = workers;
            auto hosts = load_graph6(in_path);
            ExtendStats stats;
            auto out = extend_all(spec, hosts, &stats);
            for (const auto& rep : stats.skipped)
                std::cerr << "extend: skipped host " << rep.key << ": "
                          << rep.reason << "\n";
            std::cerr << "extend: " << stats.hosts_used << " hosts, "
                      << stats.assignments << " assignments, " << out.size()
                      << " classes\n";
            store_graph6(out_path, out);
        } else if (exp->parsed()) {
            auto seeds = load_graph6(in_path);
            ExpandStats stats;
            auto out = expand_by_edge_removal(seeds, exp_k, workers, &stats);
            for (const auto& key : stats.skipped)
                std::cerr << "expand: skipped seed " << key
                          << ": chromatic number is not k\n";
            std::cerr << "expand: " << out.size() << " classes\n";
            store_graph6(out_path, out);
        } else if (cls->parsed()) {
            auto graphs = load_graph6(in_path);
            auto records = classify_all(graphs, cls_restarts, cls_seed,
                                        workers);
            auto rep = tally(records, cls_k);
            std::cout << (cls_lines ? render_lines(rep) : render_table(rep));
            if (cls_restarts > 0) {
                long ok = 0;
                for (const auto& r : records)
                    if (r.chi_verified)
                        ++ok;
                std::cout << "chromatic re-derivation: " << ok << "/"
                          << records.size() << " verified\n";
            }
        } else if (myc->parsed()) {
            std::vector<Graph> out;
            for (const auto& g : load_graph6(in_path))
                out.push_back(mycielski(g));
            store_graph6(out_path, out);
        } else if (heu->parsed()) {
            auto seeds = load_graph6(in_path);
            auto res = heuristic_search(seeds, heu_k, heu_budget, heu_seed,
                                        workers);
            std::cerr << "heuristic: pool " << res.pool.size() << ", harvest "
                      << res.harvest.size() << "\n";
            store_graph6(out_path, res.pool);
            if (!harvest_path.empty())
                write_graph6_file(harvest_path, res.harvest);
        } else if (cert->parsed()) {
            cert_opt.workers = workers;
            auto c = lower_bound_certificate(cert_k, cert_n, cert_opt);
            std::cout << c.render();
        } else if (ver->parsed()) {
            auto graphs = load_graph6(in_path);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                const Graph& g = graphs[i];
                GraphRecord r = classify_graph(g, ver_restarts, ver_seed);
                auto gi = girth(g);
                std::cout << "graph " << i << ": order=" << g.n
                          << " edges=" << g.edge_count()
                          << " mindeg=" << r.min_degree
                          << " maxdeg=" << r.max_degree
                          << " regular=" << yesno(r.regular)
                          << " triangle-free=" << yesno(is_triangle_free(g))
                          << " girth="
                          << (gi ? std::to_string(*gi) : std::string("none"))
                          << " chi=" << r.chi
                          << " chi-verified=" << yesno(r.chi_verified)
                          << " maximal-triangle-free="
                          << yesno(r.maximal_triangle_free)
                          << " vertex-critical=" << yesno(r.vertex_critical)
                          << " critical=" << yesno(r.critical)
                          << " aut=" << r.aut_order << " key=" << r.key
                          << "\n";
            }
        } else if (can->parsed()) {
            auto graphs = load_graph6(in_path);
            if (can_aut) {
                for (const auto& g : graphs) {
                    CanonResult res = canonicalize(g, true);
                    std::cout << graph6_encode(res.canonical)
                              << " aut=" << res.aut_order << "\n";
                }
            } else {
                std::vector<Graph> out;
                for (const auto& g : graphs)
                    out.push_back(canonical_form(g));
                store_graph6(out_path, out);
            }
        } else if (conv->parsed()) {
            if (conv_to.empty())
                conv_to = conv_from == "adjlist" ? "g6" : "adjlist";
            std::vector<Graph> graphs;
            if (conv_from == "adjlist") {
                if (in_path.empty() || in_path == "-")
                    graphs.push_back(parse_adjacency_list(std::cin));
                else
                    graphs.push_back(read_adjacency_list_file(in_path));
            } else {
                graphs = load_graph6(in_path);
            }
            if (conv_to == "g6") {
                store_graph6(out_path, graphs);
            } else {
                std::ofstream file;
                std::ostream* out = &std::cout;
                if (!out_path.empty() && out_path != "-") {
                    file.open(out_path);
                    if (!file)
                        throw std::runtime_error("cannot open " + out_path);
                    out = &file;
                }
                for (const auto& g : graphs)
                    write_adjlist(*out, g);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
