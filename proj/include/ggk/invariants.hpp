#pragma once

#include <string>
#include <vector>

#include "domination.hpp"
#include "error.hpp"
#include "gamma_graph.hpp"
#include "graph.hpp"

// Property checks on a γ-graph of a tree. Each returns one record per failed
// instance; an empty result means the property held.

namespace ggk {

// Every vertex is a distinct γ-set and every edge is one slide along a tree
// edge.
inline Violations check_gamma_sets(const GammaGraph& gg) {
    Violations out;
    auto ids = gg.id_map();
    if (static_cast<int>(ids.size()) != gg.order()) out.push_back({"gg:duplicate-set", "a γ-set occurs twice"});
    for (const VertexSet& d : gg.sets)
        if (d.size() != gg.gamma || !is_dominating(gg.source, d))
            out.push_back({"gg:not-gamma-set", d.to_string()});
    for (int a = 0; a < gg.order(); ++a)
        for (int b : gg.adjacency[a]) {
            if (b < a) continue;
            VertexSet diff = gg.sets[a] ^ gg.sets[b];
            if (diff.size() != 2 || !gg.source.has_edge(gg.swapped_out(a, b), gg.swapped_out(b, a)))
                out.push_back({"gg:bad-edge", gg.sets[a].to_string() + " " + gg.sets[b].to_string()});
        }
    return out;
}

inline Violations check_connected(const GammaGraph& gg) {
    if (is_connected(gg.graph())) return {};
    return {{"thm:connected", std::to_string(connected_components(gg.graph()).second) + " components"}};
}

inline Violations check_bipartite(const GammaGraph& gg) {
    std::vector<int> side(static_cast<std::size_t>(gg.order()), -1);
    for (int s = 0; s < gg.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int a = queue[h];
            for (int b : gg.adjacency[a]) {
                if (side[b] < 0) {
                    side[b] = 1 - side[a];
                    queue.push_back(b);
                } else if (side[b] == side[a]) {
                    return {{"thm:bipartite", "odd cycle through " + gg.sets[a].to_string() + " " +
                                                  gg.sets[b].to_string()}};
                }
            }
        }
    }
    return {};
}

// D1 ~ D2 = D1 - u + v implies pn(u, D1) = pn(v, D2) ⊆ {u, v}.
inline Violations check_adjacent_private_neighbours(const GammaGraph& gg) {
    Violations out;
    for (int a = 0; a < gg.order(); ++a)
        for (int b : gg.adjacency[a]) {
            if (b < a) continue;
            const int u = gg.swapped_out(a, b), v = gg.swapped_out(b, a);
            VertexSet pa = private_neighbours(gg.source, gg.sets[a], u);
            VertexSet pb = private_neighbours(gg.source, gg.sets[b], v);
            if (pa != pb || !pa.is_subset_of(VertexSet{u, v}))
                out.push_back({"obs:adjacent-pn", gg.sets[a].to_string() + " " + gg.sets[b].to_string() + ": " +
                                                      pa.to_string() + " vs " + pb.to_string()});
        }
    return out;
}

// For a γ-set D and z outside it, at most one v in D makes D - v + z a γ-set.
inline Violations check_unique_swap_in(const GammaGraph& gg) {
    Violations out;
    auto ids = gg.id_map();
    const int n = gg.source.order();
    for (const VertexSet& d : gg.sets)
        for (int z = 0; z < n; ++z) {
            if (d.contains(z)) continue;
            int hits = 0;
            for (int v : d)
                if (ids.count(d.swapped(v, z))) ++hits;
            if (hits > 1)
                out.push_back({"lem:unique-swap-in", d.to_string() + " admits " + std::to_string(hits) +
                                                         " swaps bringing in " + std::to_string(z)});
        }
    return out;
}

// At a γ-graph leaf D of a tree with >= 3 vertices: exactly one member x has
// fewer than two external private neighbours; x has exactly one, or is a
// self-private tree leaf; and D is the only γ-set containing x.
inline Violations check_leaf_lemmas(const GammaGraph& gg) {
    Violations out;
    const Graph& t = gg.source;
    if (t.order() < 3) return out;
    for (int a = 0; a < gg.order(); ++a) {
        if (gg.degree(a) != 1) continue;
        const VertexSet& d = gg.sets[a];
        std::vector<int> low;
        for (int v : d)
            if (external_private_neighbours(t, d, v).size() < 2) low.push_back(v);
        if (low.size() != 1) {
            out.push_back({"lem:leaf-pn", d.to_string() + " has " + std::to_string(low.size()) + " low members"});
            continue;
        }
        const int x = low.front();
        const VertexSet pn = private_neighbours(t, d, x);
        if (external_private_neighbours(t, d, x).size() != 1 && !(t.degree(x) == 1 && pn.contains(x)))
            out.push_back({"lem:leaf-pn", d.to_string() + ": member " + std::to_string(x) +
                                              " has no external pn and is not a self-private leaf"});
        for (int b = 0; b < gg.order(); ++b)
            if (b != a && gg.sets[b].contains(x))
                out.push_back({"lem:leaf-unique", std::to_string(x) + " lies in " + d.to_string() + " and " +
                                                      gg.sets[b].to_string()});
    }
    return out;
}

// Across an edge D ~ F, the private neighbours of a common member change by
// at most one vertex in each direction.
inline Violations check_private_neighbour_drift(const GammaGraph& gg) {
    Violations out;
    for (int a = 0; a < gg.order(); ++a)
        for (int b : gg.adjacency[a]) {
            if (b < a) continue;
            for (int x : gg.sets[a] & gg.sets[b]) {
                VertexSet pd = private_neighbours(gg.source, gg.sets[a], x);
                VertexSet pf = private_neighbours(gg.source, gg.sets[b], x);
                if ((pd - pf).size() > 1 || (pf - pd).size() > 1)
                    out.push_back({"lem:pn-drift", "member " + std::to_string(x) + " of " + gg.sets[a].to_string() +
                                                       " and " + gg.sets[b].to_string()});
            }
        }
    return out;
}

// Index and height law failures recorded by gammatree.
inline Violations check_gammatree_laws(const GammaGraph& gg) {
    Violations out;
    for (const auto& m : gg.log.index_law) out.push_back({"lem:index-law", m});
    for (const auto& m : gg.log.height_law) out.push_back({"lem:height-law", m});
    return out;
}

} // namespace ggk
