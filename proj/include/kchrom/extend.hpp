#pragma once

#include <string>
#include <vector>

#include "kchrom/graph.hpp"

namespace kchrom {

// Target family: maximal triangle-free k-chromatic graphs of order n with
// maximum degree exactly d, built around a vertex v of degree d. Hosts are
// the graphs left after deleting v and its neighbours: (k-1)-chromatic
// triangle-free graphs of order n-d-1 with maximum degree <= d-1. In girth-5
// mode hosts instead have girth >= 5 and maximum degree <= d, the attachment
// sets are distance-3 independent sets (pairwise disjoint across neighbours),
// and outputs are girth-5 k-chromatic graphs, maximality not required.
struct ExtensionSpec {
    int k = 4;
    int n = 11;
    int d = 5;
    int girth_min = 3;                 // 3 (maximal triangle-free) or 5
    bool vertex_critical_only = false; // distinct sets, vertex-critical output
    int workers = 1;

    void validate() const; // throws std::invalid_argument
    int host_order() const { return n - d - 1; }
};

struct HostReport {
    std::string key; // graph6 of the offending host as given
    std::string reason;
};

struct ExtendStats {
    long hosts_used = 0;
    long assignments = 0; // completed attachment patterns
    long outputs = 0;     // distinct isomorphism classes kept
    std::vector<HostReport> skipped;
};

// Runs the degree-d extension from every valid host. Invalid hosts are
// reported in stats->skipped and ignored. Returns canonical representatives
// sorted by key.
std::vector<Graph> extend_all(const ExtensionSpec& spec,
                              const std::vector<Graph>& hosts,
                              ExtendStats* stats = nullptr);

struct CertifyCase {
    int d = 0;
    int host_order = 0;
    long hosts = 0;   // hosts examined (both admissible chromatic classes)
    long outputs = 0; // extension outputs found
    std::string status; // closed | witness | undecided (reason appended)
};

struct LowerBoundCertificate {
    int k = 0;
    int n = 0;
    std::string verdict; // none-exists | witness-found | undecided
    std::vector<CertifyCase> cases;
    std::vector<std::string> facts;       // order-by-order derivation lines
    std::vector<std::string> assumptions; // imported facts actually used
    std::string render() const;           // stable line-oriented text
};

struct CertifyOptions {
    // Orders up to this are settled by exhaustive enumeration; beyond it a
    // needed fact must come from `assume` or the case stays undecided.
    int enum_cap = 12;
    // Facts of the form "n(5)=22": the smallest 5-chromatic triangle-free
    // graph has order 22, i.e. none exist below.
    std::vector<std::string> assume;
    int workers = 1;
};

// Case analysis showing no triangle-free graph of order n has chromatic
// number >= k (4 <= k <= 7): for each admissible degree d of a hypothetical
// maximal witness, extend the complete host family and confirm emptiness.
// Every unproven input is surfaced as an assumption or an undecided case.
LowerBoundCertificate lower_bound_certificate(int k, int n,
                                              const CertifyOptions& opt = {});

} // namespace kchrom
