#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ggk {

// Edge list relabeled under a canonical vertex ordering. Two graphs have
// equal forms iff they are isomorphic.
struct CanonicalForm {
    int order = 0;
    std::vector<Edge> edges;

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;

    Graph to_graph() const { return Graph(order, edges); }
};

namespace detail {

inline std::vector<int> tree_centers(const Graph& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : t.neighbours(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// AHU encodings of every vertex with the tree rooted at r, plus the rooted
// parent array and a BFS order.
struct RootedEncoding {
    std::vector<std::string> code;
    std::vector<int> parent;
    std::vector<int> order;
};

inline RootedEncoding encode_rooted(const Graph& t, int r) {
    const auto n = static_cast<std::size_t>(t.order());
    RootedEncoding e;
    e.code.assign(n, {});
    e.parent.assign(n, -1);
    std::vector<char> seen(n, 0);
    e.order.push_back(r);
    seen[r] = 1;
    for (std::size_t i = 0; i < e.order.size(); ++i) {
        int u = e.order[i];
        for (int w : t.neighbours(u))
            if (!seen[w]) {
                seen[w] = 1;
                e.parent[w] = u;
                e.order.push_back(w);
            }
    }
    std::vector<std::vector<const std::string*>> kids(n);
    for (auto it = e.order.rbegin(); it != e.order.rend(); ++it) {
        int v = *it;
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
        std::string s = "(";
        for (const std::string* k : ks) s += *k;
        s += ')';
        e.code[v] = std::move(s);
        if (e.parent[v] != -1) kids[e.parent[v]].push_back(&e.code[v]);
    }
    return e;
}

inline std::vector<int> tree_canonical_labeling(const Graph& t) {
    RootedEncoding best;
    int best_root = -1;
    for (int c : tree_centers(t)) {
        RootedEncoding e = encode_rooted(t, c);
        if (best_root == -1 || e.code[c] < best.code[best_root]) {
            best = std::move(e);
            best_root = c;
        }
    }
    const auto n = static_cast<std::size_t>(t.order());
    std::vector<std::vector<int>> kids(n);
    for (int v : best.order)
        if (best.parent[v] != -1) kids[best.parent[v]].push_back(v);
    std::vector<int> lab(n, -1);
    int next = 0;
    std::vector<int> stack{best_root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        lab[v] = next++;
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end(), [&](int a, int b) { return best.code[a] < best.code[b]; });
        for (auto it = ks.rbegin(); it != ks.rend(); ++it) stack.push_back(*it);
    }
    return lab;
}

// Individualization-refinement search for general graphs. The canonical
// leaf minimizes (refinement trace, relabeled edge list); automorphisms found
// along the way prune sibling branches in the same orbit. Exponential in the
// worst case, fine at desk scale.
class CanonicalSearch {
public:
    using Partition = std::vector<std::vector<int>>;

    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<int> run() {
        Partition p(1);
        for (int v = 0; v < n_; ++v) p[0].push_back(v);
        if (n_ == 0) return {};
        std::vector<int> prefix;
        std::vector<std::vector<int>> traces;
        search(std::move(p), prefix, traces);
        return best_lab_;
    }

private:
    void refine(Partition& p) const {
        std::vector<int> cnt(static_cast<std::size_t>(n_));
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < p.size(); ++s) {
                std::fill(cnt.begin(), cnt.end(), 0);
                for (int x : p[s])
                    for (int y : g_.neighbours(x)) ++cnt[y];
                Partition q;
                q.reserve(p.size() + 4);
                bool split = false;
                for (const auto& cell : p) {
                    if (cell.size() == 1) {
                        q.push_back(cell);
                        continue;
                    }
                    std::vector<int> vals;
                    for (int v : cell) vals.push_back(cnt[v]);
                    std::sort(vals.begin(), vals.end());
                    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
                    if (vals.size() == 1) {
                        q.push_back(cell);
                        continue;
                    }
                    split = true;
                    for (int val : vals) {
                        std::vector<int> sub;
                        for (int v : cell)
                            if (cnt[v] == val) sub.push_back(v);
                        q.push_back(std::move(sub));
                    }
                }
                if (split) {
                    p = std::move(q);
                    changed = true;
                }
            }
        }
    }

    static std::vector<int> trace_of(const Partition& p) {
        std::vector<int> t;
        t.reserve(p.size());
        for (const auto& c : p) t.push_back(static_cast<int>(c.size()));
        return t;
    }

    // Lexicographic comparison of the trace prefix against the best leaf.
    int compare_to_best(const std::vector<std::vector<int>>& traces) const {
        for (std::size_t i = 0; i < traces.size() && i < best_traces_.size(); ++i) {
            if (traces[i] < best_traces_[i]) return -1;
            if (best_traces_[i] < traces[i]) return 1;
        }
        return 0;
    }

    std::vector<Edge> certificate(const std::vector<int>& lab) const {
        std::vector<Edge> cert;
        cert.reserve(static_cast<std::size_t>(g_.size()));
        for (const Edge& e : g_.edges()) cert.emplace_back(lab[e.u], lab[e.v]);
        std::sort(cert.begin(), cert.end());
        return cert;
    }

    void record_automorphism(const std::vector<int>& lab, const std::vector<int>& other_lab) {
        std::vector<int> inv(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) inv[other_lab[v]] = v;
        std::vector<int> perm(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            perm[v] = inv[lab[v]];
            identity = identity && perm[v] == v;
        }
        if (!identity) automorphisms_.push_back(std::move(perm));
    }

    void visit_leaf(const Partition& p, const std::vector<std::vector<int>>& traces) {
        std::vector<int> lab(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < p.size(); ++i) lab[p[i][0]] = static_cast<int>(i);
        std::vector<Edge> cert = certificate(lab);
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = cert;
            first_lab_ = lab;
        } else if (cert == first_cert_) {
            record_automorphism(lab, first_lab_);
        }
        if (!have_best_) {
            have_best_ = true;
        } else {
            int c = compare_to_best(traces);
            if (c == 0 && traces.size() == best_traces_.size()) {
                if (cert == best_cert_) {
                    if (best_lab_ != first_lab_) record_automorphism(lab, best_lab_);
                    return;
                }
                if (best_cert_ < cert) return;
            } else if (c > 0) {
                return;
            }
        }
        best_traces_ = traces;
        best_cert_ = std::move(cert);
        best_lab_ = std::move(lab);
    }

    bool same_orbit_as_explored(int w, const std::vector<int>& explored, const std::vector<int>& prefix) const {
        if (explored.empty()) return false;
        std::vector<int> uf(static_cast<std::size_t>(n_));
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool any = false;
        for (const auto& a : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return a[v] == v; });
            if (!fixes) continue;
            any = true;
            for (int v = 0; v < n_; ++v) uf[find(v)] = find(a[v]);
        }
        if (!any) return false;
        int rw = find(w);
        return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == rw; });
    }

    void search(Partition p, std::vector<int>& prefix, std::vector<std::vector<int>>& traces) {
        refine(p);
        traces.push_back(trace_of(p));
        if (have_best_ && compare_to_best(traces) > 0) {
            traces.pop_back();
            return;
        }
        std::size_t target = p.size();
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1 && (target == p.size() || p[i].size() < p[target].size())) target = i;
        if (target == p.size()) {
            visit_leaf(p, traces);
            traces.pop_back();
            return;
        }
        std::vector<int> explored;
        const std::vector<int> cell = p[target];
        for (int w : cell) {
            if (same_orbit_as_explored(w, explored, prefix)) continue;
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i != target) {
                    child.push_back(p[i]);
                    continue;
                }
                child.push_back({w});
                std::vector<int> rest;
                for (int v : cell)
                    if (v != w) rest.push_back(v);
                child.push_back(std::move(rest));
            }
            prefix.push_back(w);
            search(std::move(child), prefix, traces);
            prefix.pop_back();
            explored.push_back(w);
        }
        traces.pop_back();
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    bool have_best_ = false;
    std::vector<Edge> first_cert_, best_cert_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<std::vector<int>> best_traces_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace detail

// lab[v] = canonical position of v. Trees use AHU encoding (linear-ish);
// everything else uses individualization-refinement.
inline std::vector<int> canonical_labeling(const Graph& g) {
    if (is_tree(g)) return detail::tree_canonical_labeling(g);
    return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) {
    std::vector<int> lab = canonical_labeling(g);
    CanonicalForm f;
    f.order = g.order();
    for (const Edge& e : g.edges()) f.edges.emplace_back(lab[e.u], lab[e.v]);
    std::sort(f.edges.begin(), f.edges.end());
    return f;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

// Checks that `map` (vertex of a -> vertex of b) is a graph isomorphism.
inline bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& map) {
    if (a.order() != b.order() || a.size() != b.size() || static_cast<int>(map.size()) != a.order()) return false;
    std::vector<char> hit(static_cast<std::size_t>(b.order()), 0);
    for (int v : map) {
        if (!b.valid_vertex(v) || hit[v]) return false;
        hit[v] = 1;
    }
    for (const Edge& e : a.edges())
        if (!b.has_edge(map[e.u], map[e.v])) return false;
    return true;
}

} // namespace ggk
