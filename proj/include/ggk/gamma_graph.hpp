#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace ggk {

// (other γ-set id, vertex swapped in)
struct SwapRecord {
    int set = 0;
    int vertex = 0;

    bool operator==(const SwapRecord&) const = default;
};

// Law checks recorded while GAMMATREE runs. Each entry is a human-readable
// description of one failed check.
struct GammatreeLog {
    int duplicate_discoveries = 0;
    std::vector<std::string> index_law;
    std::vector<std::string> height_law;

    bool clean() const { return index_law.empty() && height_law.empty(); }
};

// The γ-graph: γ-sets of `source` as vertices, swap-adjacency as edges.
struct GammaGraph {
    Graph source;
    int gamma = 0;
    std::vector<VertexSet> sets;
    std::vector<std::vector<int>> adjacency;  // sorted ids

    // Only filled by gammatree.
    std::vector<int> index;
    std::vector<std::vector<SwapRecord>> swap_parents;
    std::vector<std::vector<SwapRecord>> swap_children;
    GammatreeLog log;

    int order() const { return static_cast<int>(sets.size()); }

    int size() const {
        std::size_t twice = 0;
        for (const auto& a : adjacency) twice += a.size();
        return static_cast<int>(twice / 2);
    }

    bool adjacent(int a, int b) const {
        const auto& l = adjacency[a];
        return std::binary_search(l.begin(), l.end(), b);
    }

    int degree(int a) const { return static_cast<int>(adjacency[a].size()); }

    Graph graph() const {
        Graph g(order());
        for (int a = 0; a < order(); ++a)
            for (int b : adjacency[a])
                if (a < b) g.add_edge(a, b);
        return g;
    }

    std::unordered_map<VertexSet, int, VertexSetHash> id_map() const {
        std::unordered_map<VertexSet, int, VertexSetHash> m;
        for (int i = 0; i < order(); ++i) m.emplace(sets[i], i);
        return m;
    }

    int find(const VertexSet& s) const {
        auto it = std::find(sets.begin(), sets.end(), s);
        return it == sets.end() ? -1 : static_cast<int>(it - sets.begin());
    }

    // The vertex of sets[a] that is not in sets[b] (adjacent a, b).
    int swapped_out(int a, int b) const { return (sets[a] - sets[b]).front(); }
};

namespace detail {

inline bool link_ids(std::vector<std::vector<int>>& adj, int a, int b) {
    auto& la = adj[a];
    auto it = std::lower_bound(la.begin(), la.end(), b);
    if (it != la.end() && *it == b) return false;
    la.insert(it, b);
    auto& lb = adj[b];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
    return true;
}

inline void add_record(std::vector<SwapRecord>& list, SwapRecord r) {
    if (std::find(list.begin(), list.end(), r) == list.end()) list.push_back(r);
}

} // namespace detail

// Brute force: enumerate all γ-sets, then test every pair for a single swap
// along an edge of g.
inline GammaGraph gamma_graph_oracle(const Graph& g, int cap = gamma_set_enumeration_cap) {
    GammaSets gs = enumerate_gamma_sets(g, cap);
    GammaGraph gg;
    gg.source = g;
    gg.gamma = gs.gamma;
    gg.sets = std::move(gs.sets);
    gg.adjacency.assign(gg.sets.size(), {});
    for (int a = 0; a < gg.order(); ++a)
        for (int b = a + 1; b < gg.order(); ++b) {
            VertexSet diff = gg.sets[a] ^ gg.sets[b];
            if (diff.size() != 2) continue;
            int u = (gg.sets[a] - gg.sets[b]).front();
            int v = (gg.sets[b] - gg.sets[a]).front();
            if (g.has_edge(u, v)) detail::link_ids(gg.adjacency, a, b);
        }
    return gg;
}

// Seeded with the highest γ-set, processes discovered sets first-in
// first-out and grows the γ-graph by the three swap rules, closing 4-cycles
// through the parent/child swap records. Duplicate discoveries are merged by
// set content. Index and height laws are checked on every swap and recorded
// in the result's log.
inline GammaGraph gammatree(const RootedTree& rt) {
    const Graph& t = rt.tree;
    const VertexSet highest = highest_gamma_set(rt);
    GammaGraph gg;
    gg.source = t;
    gg.gamma = highest.size();
    std::unordered_map<VertexSet, int, VertexSetHash> ids;
    std::vector<int> height;

    auto add_set = [&](const VertexSet& s, int idx) {
        int id = gg.order();
        gg.sets.push_back(s);
        gg.adjacency.emplace_back();
        gg.index.push_back(idx);
        gg.swap_parents.emplace_back();
        gg.swap_children.emplace_back();
        height.push_back(set_height(rt, s));
        ids.emplace(s, id);
        return id;
    };
    auto expected_index = [&](const VertexSet& s) {
        int m = 0;
        for (int w : s - highest) m = std::max(m, rt.bfs_index[w]);
        return m;
    };

    add_set(highest, 0);
    for (int q = 0; q < gg.order(); ++q) {
        const VertexSet d = gg.sets[q];
        const int index_d = gg.index[q];
        if (q > 0 && height[q] < height[q - 1])
            gg.log.height_law.push_back("discovery order not by height at " + d.to_string());

        for (int v : d) {
            VertexSet pn = private_neighbours(t, d, v);
            std::vector<int> swap;
            if (pn.size() == 1 && pn.contains(v)) {
                for (int x : t.neighbours(v))
                    if (rt.bfs_index[x] > index_d) swap.push_back(x);
            } else {
                VertexSet ext = pn;
                ext.erase(v);
                if (ext.size() == 1 && rt.bfs_index[ext.front()] > index_d) swap.push_back(ext.front());
            }

            for (int x : swap) {
                const VertexSet next = d.swapped(v, x);
                int id;
                if (auto it = ids.find(next); it != ids.end()) {
                    id = it->second;
                    ++gg.log.duplicate_discoveries;
                    if (gg.index[id] != rt.bfs_index[x])
                        gg.log.index_law.push_back("rediscovered " + next.to_string() + " with a different index");
                    detail::add_record(gg.swap_parents[id], {q, x});
                } else {
                    id = add_set(next, rt.bfs_index[x]);
                    gg.swap_parents[id] = {{q, x}};
                    if (gg.index[id] != expected_index(next))
                        gg.log.index_law.push_back("i(" + next.to_string() + ") = " + std::to_string(gg.index[id]) +
                                                   ", expected " + std::to_string(expected_index(next)));
                }
                if (height[id] != height[q] + 1)
                    gg.log.height_law.push_back("swap " + d.to_string() + " -> " + next.to_string() +
                                                " does not raise the height by one");
                detail::link_ids(gg.adjacency, q, id);
                detail::add_record(gg.swap_children[q], {id, x});

                const std::vector<SwapRecord> parents = gg.swap_parents[q];
                for (const SwapRecord& pa : parents) {
                    const std::vector<SwapRecord> kids = gg.swap_children[pa.set];
                    for (const SwapRecord& kb : kids) {
                        if (kb.vertex != x || kb.set == id) continue;
                        detail::link_ids(gg.adjacency, id, kb.set);
                        detail::add_record(gg.swap_children[kb.set], {id, pa.vertex});
                        detail::add_record(gg.swap_parents[id], {kb.set, pa.vertex});
                    }
                }
            }
        }
    }
    return gg;
}

// Induced subgraph of the oracle γ-graph on the γ-sets avoiding x.
inline GammaGraph restricted_gamma_graph(const Graph& g, int x, int cap = gamma_set_enumeration_cap) {
    if (!g.valid_vertex(x)) throw precondition_error("restricted_gamma_graph: vertex out of range");
    GammaGraph full = gamma_graph_oracle(g, cap);
    std::vector<int> keep_id(full.sets.size(), -1);
    GammaGraph out;
    out.source = g;
    out.gamma = full.gamma;
    for (int i = 0; i < full.order(); ++i)
        if (!full.sets[i].contains(x)) {
            keep_id[i] = out.order();
            out.sets.push_back(full.sets[i]);
        }
    out.adjacency.assign(out.sets.size(), {});
    for (int i = 0; i < full.order(); ++i)
        for (int j : full.adjacency[i])
            if (keep_id[i] >= 0 && keep_id[j] >= 0) out.adjacency[keep_id[i]].push_back(keep_id[j]);
    return out;
}

// For a tree vertex x lying in no γ-set: the Cartesian product of the
// γ-graphs of the components of t - x, minus the product of their
// restricted γ-graphs (tuples where no component's set contains its vertex
// adjacent to x). Vertices carry the union sets in t's labels.
inline GammaGraph gamma_via_forbidden_vertex(const Graph& t, int x) {
    if (!is_tree(t)) throw precondition_error("gamma_via_forbidden_vertex: input is not a tree");
    if (!t.valid_vertex(x)) throw precondition_error("gamma_via_forbidden_vertex: vertex out of range");
    GammaSets all = enumerate_gamma_sets(t);
    for (const VertexSet& s : all.sets)
        if (s.contains(x))
            throw precondition_error("gamma_via_forbidden_vertex: " + std::to_string(x) + " lies in the γ-set " +
                                     s.to_string());

    struct Part {
        std::vector<int> vertices;  // local -> global
        int attach = 0;             // local id of the neighbour of x
        GammaGraph gg;
        std::vector<VertexSet> global_sets;
    };
    std::vector<Part> parts;
    for (int xi : t.neighbours(x)) {
        Part p;
        p.vertices = side_of_edge(t, x, xi);
        p.attach = static_cast<int>(std::lower_bound(p.vertices.begin(), p.vertices.end(), xi) - p.vertices.begin());
        p.gg = gamma_graph_oracle(induced_subgraph(t, p.vertices));
        for (const VertexSet& s : p.gg.sets) {
            VertexSet g;
            for (int v : s) g.insert(p.vertices[v]);
            p.global_sets.push_back(g);
        }
        parts.push_back(std::move(p));
    }

    GammaGraph out;
    out.source = t;
    std::size_t total = 1;
    for (const Part& p : parts) {
        out.gamma += p.gg.gamma;
        total *= static_cast<std::size_t>(p.gg.order());
    }
    if (out.gamma != all.gamma)
        throw theorem_violation("thm:forbidden-vertex", "component domination numbers do not add up");

    // Mixed-radix tuple index, first part most significant.
    const std::size_t k = parts.size();
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::size_t>(parts[i].gg.order());
    std::vector<int> tuple_id(total, -1);
    std::vector<int> coord(k, 0);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rem = code;
        bool kept = false;
        VertexSet u;
        for (std::size_t i = 0; i < k; ++i) {
            coord[i] = static_cast<int>(rem / stride[i]);
            rem %= stride[i];
            const Part& p = parts[i];
            if (p.gg.sets[coord[i]].contains(p.attach)) kept = true;
            u |= p.global_sets[coord[i]];
        }
        if (!kept) continue;
        tuple_id[code] = out.order();
        out.sets.push_back(u);
    }
    out.adjacency.assign(out.sets.size(), {});
    for (std::size_t code = 0; code < total; ++code) {
        if (tuple_id[code] < 0) continue;
        std::size_t rem = code;
        for (std::size_t i = 0; i < k; ++i) {
            int c = static_cast<int>(rem / stride[i]);
            rem %= stride[i];
            for (int nb : parts[i].gg.adjacency[c]) {
                std::size_t other = code + (static_cast<std::size_t>(nb) - static_cast<std::size_t>(c)) * stride[i];
                if (tuple_id[other] >= 0) out.adjacency[tuple_id[code]].push_back(tuple_id[other]);
            }
        }
    }
    for (auto& a : out.adjacency) std::sort(a.begin(), a.end());
    return out;
}

// Same γ-sets and the same swap edges, ids aside.
inline bool same_set_family(const GammaGraph& a, const GammaGraph& b, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.order() != b.order())
        return fail(std::to_string(a.order()) + " vs " + std::to_string(b.order()) + " γ-sets");
    auto bid = b.id_map();
    std::vector<int> map(static_cast<std::size_t>(a.order()));
    for (int i = 0; i < a.order(); ++i) {
        auto it = bid.find(a.sets[i]);
        if (it == bid.end()) return fail(a.sets[i].to_string() + " missing from the second family");
        map[i] = it->second;
    }
    if (a.size() != b.size())
        return fail(std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " edges");
    for (int i = 0; i < a.order(); ++i)
        for (int j : a.adjacency[i])
            if (!b.adjacent(map[i], map[j]))
                return fail("edge " + a.sets[i].to_string() + " -- " + a.sets[j].to_string() + " missing");
    return true;
}

// "gamma-graph <n_sets> <gamma>", one set per line in id order, then
// "edges <m>" and one "a b" line per edge (a < b).
inline std::string serialize_gamma_graph(const GammaGraph& gg) {
    std::ostringstream out;
    out << "gamma-graph " << gg.order() << ' ' << gg.gamma << '\n';
    for (const VertexSet& s : gg.sets) out << s.to_string() << '\n';
    out << "edges " << gg.size() << '\n';
    for (int a = 0; a < gg.order(); ++a)
        for (int b : gg.adjacency[a])
            if (a < b) out << a << ' ' << b << '\n';
    return out.str();
}

} // namespace ggk
