#include "kchrom/extend.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kchrom/canon.hpp"
#include "kchrom/color.hpp"
#include "kchrom/expand.hpp"
#include "kchrom/indep.hpp"
#include "kchrom/io.hpp"
#include "kchrom/mtfgen.hpp"
#include "kchrom/parallel.hpp"

namespace kchrom {

void ExtensionSpec::validate() const {
    if (k < 3 || k > 7)
        throw std::invalid_argument("ExtensionSpec: k must be in [3, 7]");
    if (girth_min != 3 && girth_min != 5)
        throw std::invalid_argument("ExtensionSpec: girth_min must be 3 or 5");
    if (n < 1 || n > VertexSet::capacity)
        throw std::invalid_argument("ExtensionSpec: order out of range");
    if (d < k)
        throw std::invalid_argument(
            "ExtensionSpec: a triangle-free graph with chromatic number k has "
            "a vertex of degree >= k, so d >= k is required");
    if (k == 7 && d < 8)
        throw std::invalid_argument(
            "ExtensionSpec: 7-chromatic triangle-free graphs have maximum "
            "degree >= 8, so d >= 8 is required");
}

namespace {

struct RunParams {
    int k, n, d;
    bool girth5 = false;
    bool vc_only = false;
    // family: keep leaves with chi == k (hosts are (k-1)-chromatic, so the
    // upper bound is automatic). at_least: keep chi >= k, used by the
    // certificate where hosts of chromatic number k are admitted too.
    enum class LeafChi { family, at_least } leaf_chi = LeafChi::family;
};

struct HostRun {
    const Graph& host;
    const RunParams& p;
    SetIndex sets;
    std::vector<int> degree; // accumulated degree of each host vertex
    VertexSet saturated;     // host vertices already at degree d
    VertexSet used;          // union of chosen sets (girth mode disjointness)
    std::vector<VertexSet> chosen;
    std::map<CanonicalKey, Graph>& out;
    long& assignments;

    HostRun(const Graph& h, const RunParams& params,
            std::map<CanonicalKey, Graph>& o, long& a)
        : host(h), p(params), out(o), assignments(a) {
        sets = p.girth5
                   ? enumerate_distance3_independent_sets(host, p.d - 1)
                   : enumerate_maximal_independent_sets(host, p.d - 1);
        degree.resize(host.n);
        for (int v = 0; v < host.n; ++v) {
            degree[v] = host.degree(v);
            if (degree[v] >= p.d)
                saturated.set(v);
        }
    }

    Graph build() const {
        Graph g = host;
        g.n = p.n;
        g.adj.resize(p.n);
        int apex = p.n - 1;
        for (int i = 0; i < p.d; ++i) {
            int ni = host.n + i;
            for (int u : chosen[i])
                g.add_edge(ni, u);
            g.add_edge(apex, ni);
        }
        return g;
    }

    void leaf() {
        ++assignments;
        Graph g = build();
        if (g.max_degree() != p.d || !is_triangle_free(g))
            return;
        if (p.girth5) {
            auto gi = girth(g);
            if (gi && *gi < 5)
                return;
        } else if (!is_maximal_triangle_free(g)) {
            return;
        }
        if (is_k_colorable(g, p.k - 1))
            return; // chi < k
        if (p.leaf_chi == RunParams::LeafChi::family &&
            !is_k_colorable(g, p.k))
            return; // chi > k can only arise from k-chromatic hosts
        if (p.vc_only && !is_vertex_critical(g, chromatic_number(g)))
            return;
        Graph canon = canonical_form(g);
        CanonicalKey key = graph6_encode(canon);
        out.emplace(std::move(key), std::move(canon));
    }

    // Multisets of attachment sets in canonical order: sizes weakly
    // decreasing, indices non-decreasing within a size class (strictly
    // increasing when only vertex-critical outputs are wanted: two
    // neighbours sharing a set make the output non-critical).
    void rec(int size, int index) {
        if (static_cast<int>(chosen.size()) == p.d) {
            leaf();
            return;
        }
        const auto& bucket = sets.of_size(size);
        for (std::size_t j = static_cast<std::size_t>(index);
             j < bucket.size(); ++j) {
            VertexSet s = bucket[j];
            if (s.intersects(saturated))
                continue;
            if (p.girth5 && s.intersects(used))
                continue;
            for (int u : s)
                if (++degree[u] == p.d)
                    saturated.set(u);
            VertexSet prev_used = used;
            used |= s;
            chosen.push_back(s);
            rec(size, p.vc_only ? static_cast<int>(j) + 1
                                : static_cast<int>(j));
            chosen.pop_back();
            used = prev_used;
            for (int u : s) {
                if (degree[u] == p.d)
                    saturated.reset(u);
                --degree[u];
            }
        }
        if (size > 1)
            rec(size - 1, 0);
    }

    void run() {
        if (p.d - 1 >= 1)
            rec(p.d - 1, 0);
    }
};

std::string host_problem(const Graph& h, const RunParams& p, int expect_chi_lo,
                         int expect_chi_hi) {
    if (h.n != p.n - p.d - 1)
        return "order is not n-d-1";
    if (!is_triangle_free(h))
        return "not triangle-free";
    if (p.girth5) {
        auto gi = girth(h);
        if (gi && *gi < 5)
            return "girth below 5";
        if (h.max_degree() > p.d)
            return "maximum degree above d";
    } else if (h.max_degree() > p.d - 1) {
        return "maximum degree above d-1";
    }
    int chi = chromatic_number(h);
    if (chi < expect_chi_lo || chi > expect_chi_hi)
        return "chromatic number is not k-1";
    return {};
}

std::vector<Graph> run_extension(const std::vector<Graph>& hosts,
                                 const RunParams& p, int workers,
                                 int expect_chi_lo, int expect_chi_hi,
                                 ExtendStats* stats) {
    workers = resolve_workers(workers);
    std::vector<std::map<CanonicalKey, Graph>> local(workers);
    std::vector<long> local_assignments(workers, 0);
    std::vector<std::vector<HostReport>> local_skips(workers);
    std::vector<long> local_used(workers, 0);
    run_sharded(workers, [&](int w) {
        for (std::size_t i = 0; i < hosts.size(); ++i) {
            if (!owns(i, w, workers))
                continue;
            std::string problem =
                host_problem(hosts[i], p, expect_chi_lo, expect_chi_hi);
            if (!problem.empty()) {
                local_skips[w].push_back(
                    {graph6_encode(hosts[i]), std::move(problem)});
                continue;
            }
            ++local_used[w];
            HostRun run(hosts[i], p, local[w], local_assignments[w]);
            run.run();
        }
    });
    std::map<CanonicalKey, Graph> all;
    for (auto& part : local)
        all.merge(part);
    if (stats) {
        for (int w = 0; w < workers; ++w) {
            stats->hosts_used += local_used[w];
            stats->assignments += local_assignments[w];
            for (auto& rep : local_skips[w])
                stats->skipped.push_back(std::move(rep));
        }
        stats->outputs += static_cast<long>(all.size());
    }
    std::vector<Graph> out;
    out.reserve(all.size());
    for (auto& [key, g] : all)
        out.push_back(std::move(g));
    return out;
}

} // namespace

std::vector<Graph> extend_all(const ExtensionSpec& spec,
                              const std::vector<Graph>& hosts,
                              ExtendStats* stats) {
    spec.validate();
    if (spec.d > spec.n - 1)
        return {}; // no order-n graph has a vertex of that degree
    RunParams p;
    p.k = spec.k;
    p.n = spec.n;
    p.d = spec.d;
    p.girth5 = spec.girth_min == 5;
    p.vc_only = spec.vertex_critical_only;
    p.leaf_chi = RunParams::LeafChi::family;
    return run_extension(hosts, p, spec.workers, spec.k - 1, spec.k - 1,
                         stats);
}

// ---------------------------------------------------------------------------
// Lower-bound certificate
// ---------------------------------------------------------------------------

namespace {

// Facts of the form "no triangle-free graph of order m has chromatic number
// >= q", proven by enumeration, lifted by two sound rules, or imported.
struct FactEngine {
    int enum_cap;
    int workers;
    std::map<int, int> assumed_below; // q -> bound: assumed for all m < bound
    std::map<int, std::pair<int, long>> enum_cache; // m -> (max chi, classes)
    std::vector<std::string>* assumptions_used;
    std::vector<std::string>* fact_lines;

    enum class Status { proven, exists, unknown };
    struct Fact {
        Status st;
        std::string how;
    };
    std::map<std::pair<int, int>, Fact> memo;

    std::pair<int, long> enum_stats(int m) {
        auto it = enum_cache.find(m);
        if (it != enum_cache.end())
            return it->second;
        MtfGenOptions opt;
        opt.min_degree = 0;
        opt.workers = workers;
        int max_chi = 0;
        long classes = 0;
        for (const auto& g : generate_mtf(m, opt)) {
            ++classes;
            max_chi = std::max(max_chi, chromatic_number(g));
        }
        auto val = std::make_pair(max_chi, classes);
        enum_cache.emplace(m, val);
        return val;
    }

    Fact query(int q, int m) {
        if (m <= 4)
            return {Status::proven, "orders <= 4 are bipartite"};
        auto key = std::make_pair(q, m);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        memo[key] = {Status::unknown, "in progress"}; // cut recursion cycles
        Fact f = derive(q, m);
        memo[key] = f;
        if (fact_lines && f.st != Status::unknown) {
            std::ostringstream line;
            line << "fact: no triangle-free graph of order " << m
                 << " has chromatic number >= " << q << " ["
                 << (f.st == Status::proven ? f.how : "REFUTED: " + f.how)
                 << "]";
            fact_lines->push_back(line.str());
        }
        return f;
    }

    Fact derive(int q, int m) {
        if (m <= enum_cap) {
            auto [max_chi, classes] = enum_stats(m);
            std::ostringstream how;
            if (max_chi < q) {
                how << "enumerated " << classes
                    << " maximal triangle-free classes, max chromatic number "
                    << max_chi;
                return {Status::proven, how.str()};
            }
            how << "enumeration found a class with chromatic number "
                << max_chi;
            return {Status::exists, how.str()};
        }
        if (auto it = assumed_below.find(q);
            it != assumed_below.end() && m < it->second) {
            std::ostringstream how;
            how << "assumed from n(" << q << ")=" << it->second;
            if (assumptions_used)
                assumptions_used->push_back(how.str() + " at order " +
                                            std::to_string(m));
            return {Status::proven, how.str()};
        }
        // monotone rule: no chi >= q-1 implies no chi >= q
        if (q > 3) {
            Fact lower = query(q - 1, m);
            if (lower.st == Status::proven) {
                return {Status::proven,
                        "implied by the order-" + std::to_string(m) +
                            " fact for chromatic number >= " +
                            std::to_string(q - 1)};
            }
        }
        // critical-subgraph rule: a q-chromatic witness contains a
        // q-critical subgraph with minimum degree >= q-1; deleting a closed
        // neighbourhood leaves chromatic number >= q-1 at order <= m-q.
        if (q > 3) {
            bool all_lower = true;
            for (int mp = 5; mp <= m - q && all_lower; ++mp)
                if (query(q - 1, mp).st != Status::proven)
                    all_lower = false;
            if (all_lower)
                return {Status::proven,
                        "every witness would leave a smaller one: orders <= " +
                            std::to_string(m - q) +
                            " exclude chromatic number >= " +
                            std::to_string(q - 1)};
        }
        return {Status::unknown, "no applicable rule"};
    }
};

} // namespace

std::string LowerBoundCertificate::render() const {
    std::ostringstream out;
    out << "lower-bound certificate k=" << k << " n=" << n << "\n";
    out << "verdict: " << verdict << "\n";
    for (const auto& c : cases)
        out << "case d=" << c.d << " host-order=" << c.host_order
            << " hosts=" << c.hosts << " outputs=" << c.outputs
            << " status=" << c.status << "\n";
    for (const auto& f : facts)
        out << f << "\n";
    if (assumptions.empty()) {
        out << "assumptions: none\n";
    } else {
        for (const auto& a : assumptions)
            out << "assumption: " << a << "\n";
    }
    return out.str();
}

LowerBoundCertificate lower_bound_certificate(int k, int n,
                                              const CertifyOptions& opt) {
    if (k < 4 || k > 7)
        throw std::invalid_argument(
            "lower_bound_certificate: k must be in [4, 7] (the case split on "
            "the maximum degree needs every witness component to satisfy the "
            "Brooks bound strictly)");
    if (n < 5 || n > VertexSet::capacity)
        throw std::invalid_argument("lower_bound_certificate: bad order");

    LowerBoundCertificate cert;
    cert.k = k;
    cert.n = n;

    FactEngine facts;
    facts.enum_cap = opt.enum_cap;
    facts.workers = opt.workers;
    facts.assumptions_used = &cert.assumptions;
    facts.fact_lines = &cert.facts;
    for (const auto& a : opt.assume) {
        int q = 0, bound = 0;
        if (std::sscanf(a.c_str(), "n(%d)=%d", &q, &bound) != 2 || q < 3 ||
            bound < 1)
            throw std::invalid_argument(
                "lower_bound_certificate: assumption must look like n(5)=22");
        facts.assumed_below[q] = bound;
    }

    int dmin = k == 7 ? 8 : k;
    cert.facts.push_back(
        "note: a maximal witness has a vertex of maximum degree d, and "
        "triangle-free chromatic-number-" +
        std::to_string(k) + " graphs have maximum degree >= " +
        std::to_string(dmin) + "; cases run d = " + std::to_string(dmin) +
        " .. " + std::to_string(n - 1));

    bool any_witness = false;
    bool any_undecided = false;

    for (int d = dmin; d <= n - 1; ++d) {
        CertifyCase cs;
        cs.d = d;
        cs.host_order = n - d - 1;
        int m = cs.host_order;
        if (m <= opt.enum_cap) {
            // complete family of hosts with chromatic number >= k-1 (the
            // deleted-neighbourhood graph of a witness has chromatic number
            // k-1 or k; higher is impossible at enumerable orders or the
            // enumeration would show it)
            std::vector<Graph> hosts;
            auto [max_chi, classes] = facts.enum_stats(m);
            (void)classes;
            for (int c = k - 1; c <= std::max(max_chi, k - 1); ++c)
                for (auto& h : chromatic_family(c, m))
                    if (h.max_degree() <= d - 1)
                        hosts.push_back(std::move(h));
            RunParams p;
            p.k = k;
            p.n = n;
            p.d = d;
            p.leaf_chi = RunParams::LeafChi::at_least;
            ExtendStats st;
            auto outputs =
                run_extension(hosts, p, opt.workers, k - 1, VertexSet::capacity,
                              &st);
            cs.hosts = static_cast<long>(hosts.size());
            cs.outputs = static_cast<long>(outputs.size());
            if (!outputs.empty()) {
                cs.status = "witness";
                any_witness = true;
            } else {
                cs.status = "closed";
            }
        } else {
            auto f = facts.query(k - 1, m);
            if (f.st == FactEngine::Status::proven) {
                cs.status = "closed (no hosts: " + f.how + ")";
            } else if (f.st == FactEngine::Status::exists) {
                cs.status = "undecided (hosts exist but the family is not "
                            "enumerable at this order)";
                any_undecided = true;
            } else {
                cs.status =
                    "undecided (host order above the enumeration cap and no "
                    "fact excludes hosts)";
                any_undecided = true;
            }
        }
        cert.cases.push_back(std::move(cs));
    }

    if (any_witness)
        cert.verdict = "witness-found";
    else if (any_undecided)
        cert.verdict = "undecided";
    else
        cert.verdict = "none-exists";

    if (n <= opt.enum_cap) {
        auto [max_chi, classes] = facts.enum_stats(n);
        bool enum_says_none = max_chi < k;
        bool agree = (enum_says_none && cert.verdict == "none-exists") ||
                     (!enum_says_none && cert.verdict == "witness-found");
        std::ostringstream line;
        line << "cross-check: direct enumeration at order " << n << " ("
             << classes << " maximal classes, max chromatic number " << max_chi
             << ") " << (agree ? "confirms" : "CONTRADICTS")
             << " the case analysis";
        cert.facts.push_back(line.str());
    }
    return cert;
}

} // namespace kchrom
