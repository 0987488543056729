#include "kchrom/canon.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kchrom/io.hpp"

namespace kchrom {

namespace {

using Perm = std::vector<int>;

// ---------------------------------------------------------------------------
// Schreier-Sims stabilizer chain, enough to get exact group orders for the
// generator sets the canonical search discovers.

struct StabChain {
    int n;
    std::vector<int> base;
    std::vector<std::vector<Perm>> gens;        // generators of each stabilizer level
    std::vector<std::vector<Perm>> transversal; // [level][point] -> rep taking base[level] to point (empty = outside orbit)

    explicit StabChain(int n_) : n(n_) {}

    static Perm inverse(const Perm& p) {
        Perm q(p.size());
        for (size_t i = 0; i < p.size(); ++i) q[p[i]] = int(i);
        return q;
    }
    static Perm compose(const Perm& a, const Perm& b) { // apply b first, then a
        Perm c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    }
    static bool is_identity(const Perm& p) {
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] != int(i)) return false;
        return true;
    }

    void rebuild_orbit(size_t level) {
        auto& tr = transversal[level];
        tr.assign(n, Perm());
        int b = base[level];
        Perm id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        tr[b] = id;
        std::vector<int> queue{b};
        for (size_t h = 0; h < queue.size(); ++h) {
            int p = queue[h];
            for (const Perm& s : gens[level]) {
                int q = s[p];
                if (tr[q].empty()) {
                    tr[q] = compose(s, tr[p]);
                    queue.push_back(q);
                }
            }
        }
    }

    void insert(Perm p, size_t level) {
        if (is_identity(p)) return;
        if (level == base.size()) {
            int b = 0;
            while (p[b] == b) ++b;
            base.push_back(b);
            gens.emplace_back();
            transversal.emplace_back();
            rebuild_orbit(level);
        }
        // sift
        int image = p[base[level]];
        if (!transversal[level][image].empty()) {
            Perm residue = compose(inverse(transversal[level][image]), p);
            insert(std::move(residue), level + 1);
            return;
        }
        gens[level].push_back(p);
        rebuild_orbit(level);
        // close under Schreier generators
        for (int q = 0; q < n; ++q) {
            if (transversal[level][q].empty()) continue;
            for (const Perm& s : gens[level]) {
                Perm schreier =
                    compose(inverse(transversal[level][s[q]]),
                            compose(s, transversal[level][q]));
                insert(std::move(schreier), level + 1);
            }
        }
    }

    std::uint64_t order() const {
        std::uint64_t result = 1;
        for (size_t l = 0; l < base.size(); ++l) {
            std::uint64_t orbit = 0;
            for (int q = 0; q < n; ++q)
                if (!transversal[l][q].empty()) ++orbit;
            if (orbit != 0 &&
                result > std::numeric_limits<std::uint64_t>::max() / orbit)
                throw std::overflow_error(
                    "automorphism group order exceeds 64 bits");
            result *= orbit;
        }
        return result;
    }
};

// ---------------------------------------------------------------------------
// Canonical search: equitable partition refinement plus backtracking over the
// first smallest non-singleton cell, pruned by discovered automorphisms. The
// certificate is the lexicographically smallest packed upper-triangle
// encoding over all refinement leaves, which is exactly the graph6 body of
// the winning labelling.

struct PartitionState {
    std::vector<int> lab;        // position -> vertex
    std::vector<int> cell_start; // position -> start position of its cell
};

struct Searcher {
    const Graph& g;
    int n;

    std::string first_cert;
    Perm first_lab;
    std::string best_cert;
    Perm best_lab;
    bool have_first = false, have_best = false;

    std::vector<Perm> auts;      // discovered automorphisms (dedup'd)
    std::vector<int> path;       // individualized vertices, root to current

    explicit Searcher(const Graph& graph) : g(graph), n(graph.n) {}

    int cell_end(const PartitionState& s, int start) const {
        int e = start + 1;
        while (e < n && s.cell_start[e] == start) ++e;
        return e;
    }

    void refine(PartitionState& s, std::vector<int> worklist) const {
        size_t head = 0;
        std::vector<int> vcount(n); // indexed by vertex id
        while (head < worklist.size()) {
            int ws = worklist[head++];
            ws = s.cell_start[ws]; // the cell currently containing that position
            int we = cell_end(s, ws);
            VertexSet w;
            for (int p = ws; p < we; ++p) w.set(s.lab[p]);

            for (int cs = 0; cs < n;) {
                int ce = cell_end(s, cs);
                if (ce - cs >= 2) {
                    int lo = n + 1, hi = -1;
                    for (int p = cs; p < ce; ++p) {
                        int c = (g.adj[s.lab[p]] & w).count();
                        vcount[s.lab[p]] = c;
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                    }
                    if (lo != hi) {
                        std::stable_sort(
                            s.lab.begin() + cs, s.lab.begin() + ce,
                            [&](int a, int b) { return vcount[a] < vcount[b]; });
                        int run = cs;
                        int prev = vcount[s.lab[cs]];
                        for (int p = cs; p < ce; ++p) {
                            int c = vcount[s.lab[p]];
                            if (c != prev) {
                                run = p;
                                prev = c;
                                worklist.push_back(p);
                            }
                            s.cell_start[p] = run;
                        }
                        worklist.push_back(cs);
                    }
                }
                cs = ce;
            }
        }
    }

    std::string certificate(const std::vector<int>& lab) const {
        std::string out;
        int bit = 0, acc = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                acc = (acc << 1) | (g.has_edge(lab[u], lab[v]) ? 1 : 0);
                if (++bit == 6) {
                    out.push_back(char(acc + 63));
                    acc = 0;
                    bit = 0;
                }
            }
        if (bit > 0) out.push_back(char((acc << (6 - bit)) + 63));
        return out;
    }

    void record_automorphism(const Perm& ref_lab, const Perm& lab) {
        Perm sigma(n);
        bool ident = true;
        for (int i = 0; i < n; ++i) {
            sigma[ref_lab[i]] = lab[i];
            if (ref_lab[i] != lab[i]) ident = false;
        }
        if (ident) return;
        if (std::find(auts.begin(), auts.end(), sigma) == auts.end())
            auts.push_back(std::move(sigma));
    }

    void leaf(const PartitionState& s) {
        std::string cert = certificate(s.lab);
        if (!have_first) {
            first_cert = cert;
            first_lab = s.lab;
            have_first = true;
        } else if (cert == first_cert) {
            record_automorphism(first_lab, s.lab);
        }
        if (!have_best || cert < best_cert) {
            best_cert = cert;
            best_lab = s.lab;
            have_best = true;
        } else if (cert == best_cert && s.lab != best_lab) {
            record_automorphism(best_lab, s.lab);
        }
    }

    // orbit partition of all vertices under automorphisms fixing `path` pointwise
    std::vector<int> path_orbits() const {
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Perm& a : auts) {
            bool fixes = true;
            for (int p : path)
                if (a[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int i = 0; i < n; ++i) {
                int ra = find(i), rb = find(a[i]);
                if (ra != rb) parent[ra] = rb;
            }
        }
        std::vector<int> root(n);
        for (int i = 0; i < n; ++i) root[i] = find(i);
        return root;
    }

    void recurse(const PartitionState& s) {
        // first smallest non-singleton cell
        int target = -1, target_len = n + 1;
        for (int cs = 0; cs < n;) {
            int ce = cell_end(s, cs);
            if (ce - cs >= 2 && ce - cs < target_len) {
                target = cs;
                target_len = ce - cs;
            }
            cs = ce;
        }
        if (target < 0) {
            leaf(s);
            return;
        }
        int te = target + target_len;
        std::vector<int> branched;
        for (int p = target; p < te; ++p) {
            int v = s.lab[p];
            if (!branched.empty()) {
                std::vector<int> orbit = path_orbits();
                bool skip = false;
                for (int u : branched)
                    if (orbit[u] == orbit[v]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            branched.push_back(v);

            PartitionState child = s;
            // move v to the front of the target cell, keep the rest in order
            auto it = std::find(child.lab.begin() + target,
                                child.lab.begin() + te, v);
            std::rotate(child.lab.begin() + target, it, it + 1);
            child.cell_start[target] = target;
            for (int q = target + 1; q < te; ++q) child.cell_start[q] = target + 1;

            refine(child, {target});
            path.push_back(v);
            recurse(child);
            path.pop_back();
        }
    }

    void run() {
        PartitionState s;
        s.lab.resize(n);
        s.cell_start.resize(n);
        // initial invariant: (degree, sorted neighbour degrees), ascending
        std::vector<std::vector<int>> inv(n);
        for (int v = 0; v < n; ++v) {
            inv[v].push_back(g.degree(v));
            for (int u : g.adj[v]) inv[v].push_back(g.degree(u));
            std::sort(inv[v].begin() + 1, inv[v].end());
        }
        for (int i = 0; i < n; ++i) s.lab[i] = i;
        std::sort(s.lab.begin(), s.lab.end(),
                  [&](int a, int b) { return inv[a] < inv[b]; });
        std::vector<int> initial_cells;
        for (int p = 0; p < n; ++p) {
            if (p == 0 || inv[s.lab[p]] != inv[s.lab[p - 1]]) {
                s.cell_start[p] = p;
                initial_cells.push_back(p);
            } else {
                s.cell_start[p] = s.cell_start[p - 1];
            }
        }
        refine(s, initial_cells);
        recurse(s);
    }
};

} // namespace

CanonResult canonicalize(const Graph& g, bool want_aut_order) {
    CanonResult out;
    if (g.n == 0) {
        out.canonical = g;
        return out;
    }
    Searcher search(g);
    search.run();

    out.to_canonical.resize(g.n);
    for (int pos = 0; pos < g.n; ++pos) out.to_canonical[search.best_lab[pos]] = pos;
    out.canonical = apply_permutation(g, out.to_canonical);
    if (want_aut_order) {
        StabChain chain(g.n);
        for (const Perm& a : search.auts) chain.insert(a, 0);
        out.aut_order = chain.order();
    }
    return out;
}

CanonicalKey canonical_key(const Graph& g) {
    return graph6_encode(canonicalize(g, false).canonical);
}

Graph canonical_form(const Graph& g) { return canonicalize(g, false).canonical; }

std::uint64_t automorphism_group_order(const Graph& g) {
    return canonicalize(g, true).aut_order;
}

std::vector<CanonicalKey> DedupStore::sorted_keys() const {
    std::vector<CanonicalKey> out(keys.begin(), keys.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool dedup_insert(DedupStore& store, const Graph& g) {
    return store.insert(canonical_key(g));
}

} // namespace kchrom
