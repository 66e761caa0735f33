#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "gamma_graph.hpp"
#include "graph.hpp"

namespace ggk {

// Thrown by construct_inverse when the target contains the double star H.
class not_realizable_error : public precondition_error {
public:
    explicit not_realizable_error(Edge e)
        : precondition_error("tree contains H: vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                             " are adjacent and both have degree >= 3"),
          edge_(e) {}

    Edge edge() const noexcept { return edge_; }

private:
    Edge edge_;
};

// First edge (ascending) whose endpoints both have degree >= 3.
inline std::optional<Edge> find_h_edge(const Graph& g) {
    for (const Edge& e : g.edges())
        if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3) return e;
    return std::nullopt;
}

// A tree is the γ-graph of some tree iff no two vertices of degree >= 3 are
// adjacent (equivalently, H is not a subtree).
inline bool is_realizable_tree(const Graph& g) {
    if (!is_tree(g)) throw precondition_error("is_realizable_tree: input is not a tree");
    return !find_h_edge(g).has_value();
}

struct YTree {
    Graph tree;
    int center = 0;
};

inline YTree build_y(int n) {
    if (n < 1) throw precondition_error("build_Y: n must be >= 1");
    return {make_y(n), 0};
}

// T1 ⊕ T2: t1 keeps its ids, t2 is shifted by |t1|, and the new vertex
// |t1| + |t2| is joined to v1 and to the shifted v2.
inline Graph link_trees(const Graph& t1, int v1, const Graph& t2, int v2) {
    if (!t1.valid_vertex(v1) || !t2.valid_vertex(v2)) throw precondition_error("link_trees: invalid vertex");
    Graph t = disjoint_union(t1, t2);
    int v = t.add_vertex();
    t.add_edge(v, v1);
    t.add_edge(v, t1.order() + v2);
    return t;
}

// Members of d with fewer than two d-external private neighbours.
inline std::vector<int> low_private_members(const Graph& t, const VertexSet& d) {
    std::vector<int> out;
    for (int v : d)
        if (external_private_neighbours(t, d, v).size() < 2) out.push_back(v);
    return out;
}

inline bool every_member_has_external_pn(const Graph& t, const VertexSet& d) {
    for (int v : d)
        if (external_private_neighbours(t, d, v).empty()) return false;
    return true;
}

// The vertex to link at for a leaf γ-set whose members all have external
// private neighbours: its unique member with exactly one.
inline int leaf_link_vertex(const Graph& t, const VertexSet& leaf_set) {
    if (!every_member_has_external_pn(t, leaf_set))
        throw theorem_violation("lem:link", "leaf set " + leaf_set.to_string() + " has a member without external pn");
    std::vector<int> low = low_private_members(t, leaf_set);
    if (low.size() != 1)
        throw theorem_violation("lem:leaf-pn", "leaf set " + leaf_set.to_string() + " has " +
                                                   std::to_string(low.size()) + " low-private members");
    return low.front();
}

struct RealizationWitness {
    Graph target;
    Graph witness;
    std::vector<VertexSet> set_of;  // target vertex -> γ-set of witness

    // (γ-set, target vertex) pairs ordered by γ-set.
    std::vector<std::pair<VertexSet, int>> correspondence() const {
        std::vector<std::pair<VertexSet, int>> out;
        for (int v = 0; v < static_cast<int>(set_of.size()); ++v) out.emplace_back(set_of[v], v);
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

struct Realization {
    Graph tree;
    std::vector<VertexSet> set_of;
};

inline VertexSet shifted(const VertexSet& s, int by) {
    VertexSet out;
    for (int v : s) out.insert(v + by);
    return out;
}

// Pieces below the top level are linked at their leaves later; a K2 piece
// is realized by P2 rather than Y_1.
inline Realization realize(const Graph& g, bool top = true) {
    const int n = g.order();
    if (n == 1) return {Graph(1), {VertexSet{0}}};
    if (n == 2 && !top) return {make_path(2), {VertexSet{0}, VertexSet{1}}};

    int x = -1;
    for (int v = 0; v < n && x < 0; ++v)
        if (g.degree(v) == 2) x = v;

    if (x < 0) {
        // H-free with no degree-2 vertex: a star K_{1,m}, m >= 2, realized by Y_m.
        int center = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > g.degree(center)) center = v;
        const int m = n - 1;
        Realization r{make_y(m), std::vector<VertexSet>(static_cast<std::size_t>(n))};
        VertexSet stems;
        for (int j = 0; j < m; ++j) stems.insert(4 * j + 2);
        r.set_of[center] = stems | VertexSet{0};
        int j = 0;
        for (int v = 0; v < n; ++v)
            if (v != center) r.set_of[v] = stems | VertexSet{4 * j++ + 1};
        return r;
    }

    const int n1 = g.neighbours(x)[0], n2 = g.neighbours(x)[1];
    std::vector<int> side1 = side_of_edge(g, x, n1), side2 = side_of_edge(g, x, n2);
    side1.insert(std::lower_bound(side1.begin(), side1.end(), x), x);
    side2.insert(std::lower_bound(side2.begin(), side2.end(), x), x);
    auto local_of = [](const std::vector<int>& side, int v) {
        return static_cast<int>(std::lower_bound(side.begin(), side.end(), v) - side.begin());
    };

    Realization r1 = realize(induced_subgraph(g, side1), false);
    Realization r2 = realize(induced_subgraph(g, side2), false);
    const VertexSet x1 = r1.set_of[local_of(side1, x)];
    const VertexSet x2 = r2.set_of[local_of(side2, x)];
    const int v1 = leaf_link_vertex(r1.tree, x1);
    const int v2 = leaf_link_vertex(r2.tree, x2);

    if (r1.tree.order() + r2.tree.order() + 1 > VertexSet::capacity)
        throw precondition_error("construct_inverse: witness tree exceeds the VertexSet capacity");

    const int offset = r1.tree.order();
    Realization r{link_trees(r1.tree, v1, r2.tree, v2), std::vector<VertexSet>(static_cast<std::size_t>(n))};
    const VertexSet x2s = shifted(x2, offset);
    for (std::size_t i = 0; i < side1.size(); ++i) r.set_of[side1[i]] = r1.set_of[i] | x2s;
    for (std::size_t i = 0; i < side2.size(); ++i) r.set_of[side2[i]] = x1 | shifted(r2.set_of[i], offset);
    r.set_of[x] = x1 | x2s;
    return r;
}

} // namespace detail

// Checks that the witness's γ-graph is the target under set_of.
inline bool verify_realization(const RealizationWitness& w, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    GammaGraph gg = gammatree(bfs_root(w.witness, 0));
    if (gg.order() != w.target.order())
        return fail("witness has " + std::to_string(gg.order()) + " γ-sets, target has " +
                    std::to_string(w.target.order()) + " vertices");
    auto ids = gg.id_map();
    std::vector<int> map;
    for (const VertexSet& s : w.set_of) {
        auto it = ids.find(s);
        if (it == ids.end()) return fail(s.to_string() + " is not a γ-set of the witness");
        map.push_back(it->second);
    }
    if (!is_isomorphism(w.target, gg.graph(), map)) return fail("correspondence is not an isomorphism");
    return true;
}

// Inductive inverse construction: stars come from Y_n; otherwise split at
// the smallest-id degree-2 vertex, realize both halves (each keeping the
// split vertex as a leaf) and link the witnesses at the low-private members
// of the identified leaf γ-sets. The result is verified before returning.
inline RealizationWitness construct_inverse(const Graph& g) {
    if (!is_tree(g)) throw precondition_error("construct_inverse: input is not a tree");
    if (auto e = find_h_edge(g)) throw not_realizable_error(*e);
    detail::Realization r = detail::realize(g);
    RealizationWitness w{g, std::move(r.tree), std::move(r.set_of)};
    std::string why;
    if (!verify_realization(w, &why)) throw theorem_violation("thm:realization", why);
    return w;
}

enum class LeafCaseTag { self_private_leaf, one_external_self_private, one_external_not_self };

inline std::string to_string(LeafCaseTag t) {
    switch (t) {
    case LeafCaseTag::self_private_leaf: return "self_private_leaf";
    case LeafCaseTag::one_external_self_private: return "one_external_self_private";
    case LeafCaseTag::one_external_not_self: return "one_external_not_self";
    }
    return "?";
}

struct LeafReduction {
    Graph tree;
    LeafCaseTag tag = LeafCaseTag::self_private_leaf;
    int member = 0;  // the low-private member x of the removed leaf set
};

// Removes γ-graph leaf `leaf_set_id` (an id of gammatree(t) rooted at 0) by
// editing t, then checks the new tree's γ-graph is the old one minus that
// leaf.
inline LeafReduction reduce_leaf(const Graph& t, int leaf_set_id) {
    if (!is_tree(t)) throw precondition_error("reduce_leaf: input is not a tree");
    GammaGraph gg = gammatree(bfs_root(t, 0));
    if (leaf_set_id < 0 || leaf_set_id >= gg.order() || gg.degree(leaf_set_id) != 1)
        throw precondition_error("reduce_leaf: γ-set " + std::to_string(leaf_set_id) + " is not a leaf of the γ-graph");
    const VertexSet& leaf = gg.sets[leaf_set_id];

    std::vector<int> low = low_private_members(t, leaf);
    if (low.size() != 1)
        throw theorem_violation("lem:leaf-pn", std::to_string(low.size()) + " low-private members in " + leaf.to_string());
    const int x = low.front();
    const VertexSet pn = private_neighbours(t, leaf, x);
    const VertexSet ext = external_private_neighbours(t, leaf, x);

    LeafReduction out;
    out.member = x;
    if (ext.size() == 1) {
        const int y = ext.front();
        std::vector<int> below = side_of_edge(t, y, x);  // x and its descendants with t rooted at y
        std::vector<char> drop(static_cast<std::size_t>(t.order()), 0);
        for (int v : below) drop[v] = 1;
        if (pn.contains(x)) {
            out.tag = LeafCaseTag::one_external_self_private;
            drop[x] = 0;
        } else {
            out.tag = LeafCaseTag::one_external_not_self;
        }
        std::vector<int> keep;
        for (int v = 0; v < t.order(); ++v)
            if (!drop[v]) keep.push_back(v);
        out.tree = induced_subgraph(t, keep);
        if (out.tag == LeafCaseTag::one_external_self_private) {
            int yl = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), y) - keep.begin());
            int leaf_v = out.tree.add_vertex();
            out.tree.add_edge(yl, leaf_v);
        }
    } else {
        if (!pn.contains(x) || t.degree(x) != 1)
            throw theorem_violation("lem:leaf-pn", "member " + std::to_string(x) + " of " + leaf.to_string() +
                                                       " has no external pn but is not a self-private tree leaf");
        out.tag = LeafCaseTag::self_private_leaf;
        out.tree = t;
        int stem = t.neighbours(x)[0];
        int leaf_v = out.tree.add_vertex();
        out.tree.add_edge(stem, leaf_v);
    }

    std::vector<int> rest;
    for (int i = 0; i < gg.order(); ++i)
        if (i != leaf_set_id) rest.push_back(i);
    Graph expected = induced_subgraph(gg.graph(), rest);
    Graph got = gammatree(bfs_root(out.tree, 0)).graph();
    if (!are_isomorphic(expected, got))
        throw theorem_violation("thm:leaf-removal", "reduced tree does not realize the γ-graph minus " + leaf.to_string());
    return out;
}

struct CutEdgeSplit {
    Graph first;   // realizes G1 + e (the side of the edge's first γ-set)
    Graph second;  // realizes G2 + e
};

namespace detail {

// Tree realizing the component of `from` plus the edge (from, to). Every
// member of `to` that can be swapped out, other than the one swapped out
// towards `from`, gets a new pendant leaf. If that member has no external
// private neighbour, its branches away from the swapped-in vertex are
// removed first.
inline Graph pin_cut_edge_side(const Graph& t, const GammaGraph& gg, int from, int to) {
    const int toward = gg.swapped_out(to, from);
    const int incoming = gg.swapped_out(from, to);
    VertexSet pinned;
    for (int nb : gg.adjacency[to]) {
        if (nb == from) continue;
        int out = gg.swapped_out(to, nb);
        if (out != toward) pinned.insert(out);
    }

    std::vector<char> drop(static_cast<std::size_t>(t.order()), 0);
    if (external_private_neighbours(t, gg.sets[to], toward).empty())
        for (int w : t.neighbours(toward))
            if (w != incoming)
                for (int v : side_of_edge(t, toward, w)) drop[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < t.order(); ++v)
        if (!drop[v]) keep.push_back(v);

    Graph t2 = induced_subgraph(t, keep);
    for (int z : pinned) {
        if (drop[z]) continue;
        int zl = static_cast<int>(std::lower_bound(keep.begin(), keep.end(), z) - keep.begin());
        int leaf = t2.add_vertex();
        t2.add_edge(zl, leaf);
    }
    return t2;
}

} // namespace detail

// For a bridge AB of gammatree(t) (rooted at 0), builds trees whose
// γ-graphs are G1 + e and G2 + e, each checked against the oracle.
inline CutEdgeSplit split_at_cut_edge(const Graph& t, Edge e) {
    if (!is_tree(t)) throw precondition_error("split_at_cut_edge: input is not a tree");
    GammaGraph gg = gammatree(bfs_root(t, 0));
    if (gg.size() == 0) throw precondition_error("split_at_cut_edge: the γ-graph has no edges");
    const int a = e.u, b = e.v;
    if (a < 0 || b >= gg.order() || !gg.adjacent(a, b))
        throw precondition_error("split_at_cut_edge: not an edge of the γ-graph");
    Graph g = gg.graph();
    auto br = bridges(g);
    if (!std::binary_search(br.begin(), br.end(), Edge(a, b)))
        throw precondition_error("split_at_cut_edge: edge is not a bridge of the γ-graph");

    // side_of_edge works on any graph once the bridge is removed.
    auto component_plus = [&](int root, int other) {
        std::vector<int> side = side_of_edge(g, other, root);
        side.insert(std::lower_bound(side.begin(), side.end(), other), other);
        return induced_subgraph(g, side);
    };
    Graph g1e = component_plus(a, b);
    Graph g2e = component_plus(b, a);

    CutEdgeSplit out{detail::pin_cut_edge_side(t, gg, a, b), detail::pin_cut_edge_side(t, gg, b, a)};
    if (!are_isomorphic(gamma_graph_oracle(out.first).graph(), g1e))
        throw theorem_violation("lem:cut-edge", "first side witness does not realize G1 + e");
    if (!are_isomorphic(gamma_graph_oracle(out.second).graph(), g2e))
        throw theorem_violation("lem:cut-edge", "second side witness does not realize G2 + e");
    return out;
}

} // namespace ggk
