#include "kchrom/indep.hpp"

#include <algorithm>

namespace kchrom {

namespace {

// DFS over vertices in ascending order; `exclude[v]` masks vertices that
// conflict with an already-chosen one. Both enumerations share this walk and
// differ only in the conflict mask and the emission test.
template <typename Emit>
void grow(const Graph& g, const std::vector<VertexSet>& conflict, int from,
          VertexSet chosen, int size, int max_size, VertexSet excluded,
          const Emit& emit) {
    if (size >= 1)
        emit(chosen, size);
    if (size == max_size)
        return;
    for (int v = from; v < g.n; ++v) {
        if (excluded.test(v))
            continue;
        grow(g, conflict, v + 1, chosen | VertexSet::single(v), size + 1,
             max_size, excluded | conflict[v], emit);
    }
}

} // namespace

SetIndex enumerate_maximal_independent_sets(const Graph& g, int max_size) {
    SetIndex out;
    out.by_size.resize(std::max(max_size, 0) + 1);
    if (max_size < 1 || g.n == 0)
        return out;
    VertexSet all = VertexSet::first_n(g.n);
    auto dominates = [&](VertexSet s) {
        VertexSet covered = s;
        for (int v : s)
            covered |= g.adj[v];
        return covered == all;
    };
    grow(g, g.adj, 0, VertexSet(), 0, max_size, VertexSet(),
         [&](VertexSet s, int size) {
             if (dominates(s))
                 out.by_size[size].push_back(s);
         });
    return out;
}

SetIndex enumerate_distance3_independent_sets(const Graph& g, int max_size) {
    SetIndex out;
    out.by_size.resize(std::max(max_size, 0) + 1);
    if (max_size < 1 || g.n == 0)
        return out;
    // conflict = closed ball of radius 2: anything nearer than distance 3
    std::vector<VertexSet> ball2(g.n);
    for (int v = 0; v < g.n; ++v) {
        ball2[v] = g.adj[v] | VertexSet::single(v);
        for (int w : g.adj[v])
            ball2[v] |= g.adj[w];
    }
    grow(g, ball2, 0, VertexSet(), 0, max_size, VertexSet(),
         [&](VertexSet s, int size) { out.by_size[size].push_back(s); });
    return out;
}

} // namespace kchrom
