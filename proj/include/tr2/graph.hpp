#ifndef TR2_GRAPH_HPP
#define TR2_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "tr2/errors.hpp"

namespace tr2 {

// Simple undirected graph over dense 0-based vertex ids. Immutable after
// construction; adjacency lists are kept sorted so membership tests are
// binary searches and emitted files are reproducible.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw domain_error("vertex count must be non-negative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw domain_error("edge endpoint out of range");
            if (u == v) throw domain_error("self-loop not allowed");
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
                throw domain_error("duplicate edge not allowed");
        }
        g.m_ = static_cast<int>(edges.size());
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool adjacent(int u, int v) const {
        const auto& nbrs = adj_[static_cast<size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
        return d;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : neighbors(u))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(u);
            for (int w : g.neighbors(u))
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[static_cast<size_t>(id)].begin(), out[static_cast<size_t>(id)].end());
    }
    return out;
}

// Subgraph induced on `vertices`; new ids follow the order given. Also
// returns old-id -> caller keeps `vertices` as the new-id -> old-id map.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i])) {
            int j = index[static_cast<size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

// Two-coloring by BFS from vertex 0 (per component from its smallest
// vertex). Returns the color array, or empty if an odd cycle exists.
inline std::vector<int> bipartition_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
                    return {};
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) {
    return g.vertex_count() == 0 || !bipartition_colors(g).empty();
}

inline bool has_p3(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 2) return true;
    return false;
}

// Tree rooted at a chosen vertex. Parent pointers and a BFS order are
// derived at construction; every non-root vertex appears after its parent.
struct RootedTree {
    Graph graph;
    int root = 0;
    std::vector<int> parent;    // root maps to -1
    std::vector<int> bfs_order; // starts at root

    RootedTree(Graph g, int r) : graph(std::move(g)), root(r) {
        int n = graph.vertex_count();
        if (n == 0) throw domain_error("tree must have at least one vertex");
        if (r < 0 || r >= n) throw domain_error("root out of range");
        if (graph.edge_count() != n - 1) throw domain_error("not a tree: m != n-1");
        parent.assign(static_cast<size_t>(n), -2);
        bfs_order.reserve(static_cast<size_t>(n));
        parent[static_cast<size_t>(r)] = -1;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            bfs_order.push_back(u);
            for (int w : graph.neighbors(u))
                if (parent[static_cast<size_t>(w)] == -2) {
                    parent[static_cast<size_t>(w)] = u;
                    q.push(w);
                }
        }
        if (static_cast<int>(bfs_order.size()) != n)
            throw domain_error("not a tree: disconnected");
    }
};

} // namespace tr2

#endif
