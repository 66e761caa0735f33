#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace ggk {

struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1 with sorted neighbour lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw precondition_error("negative vertex count");
    }
    Graph(int n, std::span<const Edge> edges) : Graph(n) {
        for (const Edge& e : edges) add_edge(e.u, e.v);
    }
    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    bool valid_vertex(int v) const { return v >= 0 && v < order(); }

    bool has_edge(int u, int v) const {
        if (!valid_vertex(u) || !valid_vertex(v)) return false;
        const auto& nu = neighbours(u);
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    void add_edge(int u, int v) {
        if (!valid_vertex(u) || !valid_vertex(v))
            throw precondition_error("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v) throw precondition_error("self-loop at " + std::to_string(u));
        if (has_edge(u, v))
            throw precondition_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
        ++edge_count_;
    }

    int add_vertex() {
        adj_.emplace_back();
        return order() - 1;
    }

    // Edges with u < v, ascending.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < order(); ++u)
            for (int v : neighbours(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    VertexSet closed_neighbourhood(int v) const {
        VertexSet s = VertexSet::from_range(neighbours(v));
        s.insert(v);
        return s;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    static void insert_sorted(std::vector<int>& list, int v) {
        list.insert(std::upper_bound(list.begin(), list.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Component id per vertex (ids in order of smallest member) and the count.
inline std::pair<std::vector<int>, int> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(u))
                if (comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return {comp, count};
}

inline bool is_connected(const Graph& g) { return connected_components(g).second <= 1; }

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

// Subgraph induced by `keep` (any order); vertex i of the result is keep[i].
inline Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int w : g.neighbours(keep[i]))
            if (pos[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), pos[w]);
    return h;
}

// Vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    Graph h(g.order());
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.order() + b.order());
    for (const Edge& e : a.edges()) h.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) h.add_edge(e.u + a.order(), e.v + a.order());
    return h;
}

// Tree with a root, parent/depth arrays and a 1-based breadth-first index.
struct RootedTree {
    Graph tree;
    int root = 0;
    std::vector<int> parent;                 // -1 at the root
    std::vector<int> depth;
    std::vector<int> bfs_index;              // 1-based
    std::vector<int> bfs_order;              // bfs_order[i-1] has index i
    std::vector<std::vector<int>> children;  // ascending id

    int order() const { return tree.order(); }
};

// Siblings are visited by ascending id; children of lower-indexed parents
// come first within a depth.
inline RootedTree bfs_root(const Graph& t, int c) {
    if (!is_tree(t)) throw precondition_error("bfs_root: input is not a tree");
    if (!t.valid_vertex(c)) throw precondition_error("bfs_root: root " + std::to_string(c) + " out of range");
    const auto n = static_cast<std::size_t>(t.order());
    RootedTree rt;
    rt.tree = t;
    rt.root = c;
    rt.parent.assign(n, -1);
    rt.depth.assign(n, -1);
    rt.bfs_index.assign(n, 0);
    rt.children.assign(n, {});
    std::queue<int> q;
    q.push(c);
    rt.depth[c] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        rt.bfs_order.push_back(u);
        rt.bfs_index[u] = static_cast<int>(rt.bfs_order.size());
        for (int w : t.neighbours(u)) {
            if (rt.depth[w] != -1) continue;
            rt.depth[w] = rt.depth[u] + 1;
            rt.parent[w] = u;
            rt.children[u].push_back(w);
            q.push(w);
        }
    }
    return rt;
}

// Cut-edges via low-link, ascending.
inline std::vector<Edge> bridges(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    struct Frame {
        int v, parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (disc[s] != -1) continue;
        disc[s] = low[s] = timer++;
        stack.push_back({s, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbours(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, p = f.parent;
                stack.pop_back();
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) out.emplace_back(p, v);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Vertices on v's side of the tree edge (u, v), v included.
inline std::vector<int> side_of_edge(const Graph& t, int u, int v) {
    std::vector<int> out{v};
    std::vector<int> stack{v};
    std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
    seen[u] = seen[v] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : t.neighbours(x))
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
                stack.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ggk
