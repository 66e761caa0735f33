#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace ggk {

inline constexpr int gamma_set_enumeration_cap = 32;

inline VertexSet all_vertices(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.order(); ++v) s.insert(v);
    return s;
}

// N[s]
inline VertexSet closed_neighbourhood(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (int v : s) {
        out.insert(v);
        for (int w : g.neighbours(v)) out.insert(w);
    }
    return out;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
    return closed_neighbourhood(g, s).size() == g.order();
}

// pn(x, d) = N[x] - N[d - {x}]
inline VertexSet private_neighbours(const Graph& g, const VertexSet& d, int x) {
    if (!d.contains(x)) throw precondition_error("private_neighbours: " + std::to_string(x) + " not in " + d.to_string());
    VertexSet rest = d;
    rest.erase(x);
    return g.closed_neighbourhood(x) - closed_neighbourhood(g, rest);
}

// pn(x, d) - {x}
inline VertexSet external_private_neighbours(const Graph& g, const VertexSet& d, int x) {
    VertexSet pn = private_neighbours(g, d, x);
    pn.erase(x);
    return pn;
}

struct GammaSets {
    int gamma = 0;
    std::vector<VertexSet> sets;  // lexicographic
};

namespace detail {

class GammaSetSearch {
public:
    GammaSetSearch(const Graph& g, int k) : g_(g), k_(k), all_(all_vertices(g)) {
        for (int v = 0; v < g.order(); ++v) closed_.push_back(g.closed_neighbourhood(v));
    }

    std::vector<VertexSet> run() {
        VertexSet none;
        go(none, none, none);
        return std::move(found_);
    }

private:
    // Branch on who dominates the smallest undominated vertex; each branch
    // forbids the earlier candidates, so every set is produced once.
    void go(VertexSet& chosen, const VertexSet& dominated, const VertexSet& excluded) {
        if (dominated.size() == g_.order()) {
            found_.push_back(chosen);
            return;
        }
        if (chosen.size() == k_) return;
        int u = (all_ - dominated).front();
        VertexSet local = excluded;
        for (int w : closed_[u]) {
            if (local.contains(w)) continue;
            chosen.insert(w);
            go(chosen, dominated | closed_[w], local);
            chosen.erase(w);
            local.insert(w);
        }
    }

    const Graph& g_;
    int k_;
    VertexSet all_;
    std::vector<VertexSet> closed_;
    std::vector<VertexSet> found_;
};

} // namespace detail

// Exhaustive γ-set enumeration. Tries cardinalities in ascending order, so
// the first cardinality with a hit is γ.
inline GammaSets enumerate_gamma_sets(const Graph& g, int cap = gamma_set_enumeration_cap) {
    if (g.order() > cap)
        throw precondition_error("enumerate_gamma_sets: " + std::to_string(g.order()) + " vertices exceeds cap " +
                                 std::to_string(cap));
    if (g.order() > VertexSet::capacity) throw precondition_error("enumerate_gamma_sets: graph too large");
    GammaSets out;
    if (g.order() == 0) {
        out.sets.emplace_back();
        return out;
    }
    for (int k = 1; k <= g.order(); ++k) {
        auto sets = detail::GammaSetSearch(g, k).run();
        if (sets.empty()) continue;
        std::sort(sets.begin(), sets.end());
        out.gamma = k;
        out.sets = std::move(sets);
        break;
    }
    return out;
}

// Σ depth(x) over x in d.
inline int set_height(const RootedTree& rt, const VertexSet& d) {
    int h = 0;
    for (int v : d) {
        if (v >= rt.order()) throw precondition_error("set_height: vertex out of range");
        h += rt.depth[v];
    }
    return h;
}

enum class HighestLabel { bound, free, required };

// Tree-domination label automaton run leaves-up in reverse BFS order, with
// the root excluded from the loop. Yields the unique minimum-height γ-set.
inline VertexSet highest_gamma_set(const RootedTree& rt) {
    std::vector<HighestLabel> label(static_cast<std::size_t>(rt.order()), HighestLabel::bound);
    VertexSet s;
    for (int pos = rt.order(); pos >= 2; --pos) {
        int v = rt.bfs_order[pos - 1];
        int u = rt.parent[v];
        switch (label[v]) {
        case HighestLabel::free:
            break;
        case HighestLabel::bound:
            label[u] = HighestLabel::required;
            break;
        case HighestLabel::required:
            s.insert(v);
            if (label[u] == HighestLabel::bound) label[u] = HighestLabel::free;
            break;
        }
    }
    if (label[rt.root] != HighestLabel::free) s.insert(rt.root);
    return s;
}

inline bool is_gamma_set_of_tree(const RootedTree& rt, const VertexSet& d) {
    return is_dominating(rt.tree, d) && d.size() == highest_gamma_set(rt).size();
}

// Every x in d - {root} has a child among its d-private neighbours.
inline bool is_highest(const RootedTree& rt, const VertexSet& d) {
    if (!is_gamma_set_of_tree(rt, d)) throw precondition_error("is_highest: " + d.to_string() + " is not a γ-set");
    for (int x : d) {
        if (x == rt.root) continue;
        VertexSet pn = private_neighbours(rt.tree, d, x);
        bool ok = std::any_of(rt.children[x].begin(), rt.children[x].end(), [&](int y) { return pn.contains(y); });
        if (!ok) return false;
    }
    return true;
}

} // namespace ggk
