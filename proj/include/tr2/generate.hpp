#ifndef TR2_GENERATE_HPP
#define TR2_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tr2/graph.hpp"

namespace tr2 {

inline Graph make_path(int n) {
    if (n < 1) throw domain_error("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw domain_error("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

inline Graph make_complete(int n) {
    if (n < 1) throw domain_error("complete graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// X = 0..m-1, Y = m..m+n-1.
inline Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw domain_error("complete bipartite requires m, n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::from_edges(m + n, edges);
}

namespace detail {

// Recursive numbering shared by the generator and the gadget class maps:
// the root of an order-k block comes first, then for i = 1..k-1 two whole
// order-i blocks in sequence.
inline int cmbt_size(int order) {
    int size = 1;
    for (int i = 1; i < order; ++i) size *= 3;
    return size; // 3^(order-1)
}

inline void cmbt_edges(int order, int base, std::vector<std::pair<int, int>>& edges) {
    int next = base + 1;
    for (int i = 1; i < order; ++i)
        for (int copy = 0; copy < 2; ++copy) {
            edges.emplace_back(base, next);
            cmbt_edges(i, next, edges);
            next += cmbt_size(i);
        }
}

} // namespace detail

// Complete minimum broadcast tree for threshold two: the order-k root has
// degree 2(k-1) and its child pairs root copies of orders 1..k-1. Vertex
// count is 3^(k-1); vertex 0 is the root.
inline RootedTree generate_cmbt(int k) {
    if (k < 1) throw domain_error("cmbt order must be >= 1");
    std::vector<std::pair<int, int>> edges;
    detail::cmbt_edges(k, 0, edges);
    return RootedTree(Graph::from_edges(detail::cmbt_size(k), edges), 0);
}

struct NearCompleteBipartite {
    Graph graph;
    // True when a side has fewer than two vertices, so no 4-cycle can be
    // removed and the plain complete bipartite graph is emitted instead.
    bool degenerate = false;
};

// K_{a,b} with a = 2*floor(t/2), b = a-1, minus the 4-cycle induced by the
// two highest-index vertices of each side. X = 0..a-1, Y = a..a+b-1.
inline NearCompleteBipartite generate_near_complete_bipartite(int t) {
    if (t < 2) throw domain_error("near-complete-bipartite requires t >= 2");
    int a = 2 * (t / 2);
    int b = a - 1;
    std::vector<std::pair<int, int>> edges;
    bool degenerate = b < 2;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            if (!degenerate && i >= a - 2 && j >= b - 2) continue;
            edges.emplace_back(i, a + j);
        }
    return {Graph::from_edges(a + b, edges), degenerate};
}

enum class StandardFamily { path, cycle, complete, complete_bipartite };

inline Graph generate_standard(StandardFamily kind, int p1, int p2 = 0) {
    switch (kind) {
        case StandardFamily::path: return make_path(p1);
        case StandardFamily::cycle: return make_cycle(p1);
        case StandardFamily::complete: return make_complete(p1);
        case StandardFamily::complete_bipartite: return make_complete_bipartite(p1, p2);
    }
    throw domain_error("unknown family");
}

// Seeded generator with a fixed bounded-draw algorithm. mt19937 output is
// pinned by the standard; std::uniform_int_distribution is not, so draws go
// through a plain modulo to keep outputs byte-identical everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(static_cast<uint_fast32_t>(seed)) {}

    // uniform-ish in [lo, hi]
    int range(int lo, int hi) {
        if (lo > hi) throw domain_error("empty range");
        uint32_t span = static_cast<uint32_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % span);
    }

    bool coin() { return (gen_() & 1u) != 0; }

private:
    std::mt19937 gen_;
};

// Uniform-attachment random tree: vertex i >= 1 attaches to a random j < i.
inline Graph random_tree(uint64_t seed, int n) {
    if (n < 1) throw domain_error("random tree requires n >= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(rng.range(0, i - 1), i);
    return Graph::from_edges(n, edges);
}

// Connected split graph: 0..q-1 is a clique, each later vertex gets a
// nonempty random subset of it. The emitted clique part need not be maximum.
inline Graph random_split(uint64_t seed, int n) {
    if (n < 1) throw domain_error("random split requires n >= 1");
    Rng rng(seed);
    int q = rng.range(1, n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) edges.emplace_back(i, j);
    for (int s = q; s < n; ++s) {
        bool any = false;
        for (int v = 0; v < q; ++v)
            if (rng.coin()) {
                edges.emplace_back(v, s);
                any = true;
            }
        if (!any) edges.emplace_back(rng.range(0, q - 1), s);
    }
    return Graph::from_edges(n, edges);
}

// Connected bipartite chain graph via a staircase: X vertex i is adjacent
// to the first c_i Y vertices with c non-increasing, c_0 = |Y|, c_last >= 1.
inline Graph random_chain(uint64_t seed, int n) {
    if (n < 1) throw domain_error("random chain requires n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    Rng rng(seed);
    int p = rng.range(1, n - 1);
    int q = n - p;
    std::vector<int> counts(static_cast<size_t>(p));
    counts[0] = q;
    for (int i = 1; i < p; ++i) counts[static_cast<size_t>(i)] = rng.range(1, q);
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < counts[static_cast<size_t>(i)]; ++j) edges.emplace_back(i, p + j);
    return Graph::from_edges(n, edges);
}

} // namespace tr2

#endif
