#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "gamma_graph.hpp"
#include "graph.hpp"

namespace ggk {

enum class EdgeKind { bridge, in_four_cycle, both, neither };

inline std::string to_string(EdgeKind k) {
    switch (k) {
    case EdgeKind::bridge: return "bridge";
    case EdgeKind::in_four_cycle: return "in_four_cycle";
    case EdgeKind::both: return "both";
    case EdgeKind::neither: return "neither";
    }
    return "?";
}

struct EdgeClass {
    Edge edge;
    EdgeKind kind = EdgeKind::neither;
};

// A 4-cycle w-x-y-z-w listed once: w is its smallest vertex, y is opposite
// w, and x < z.
struct FourCycle {
    int w = 0, x = 0, y = 0, z = 0;

    std::array<int, 4> vertices() const { return {w, x, y, z}; }

    bool contains(int v) const { return v == w || v == x || v == y || v == z; }

    // The two cycle neighbours of a member v.
    std::pair<int, int> around(int v) const {
        if (v == w || v == y) return {x, z};
        return {w, y};
    }

    bool operator==(const FourCycle&) const = default;
};

inline std::vector<FourCycle> four_cycles(const Graph& g) {
    std::vector<FourCycle> out;
    std::vector<std::vector<int>> via(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < g.order(); ++w) {
        std::vector<int> touched;
        for (int x : g.neighbours(w)) {
            if (x < w) continue;
            for (int y : g.neighbours(x)) {
                if (y <= w) continue;
                if (via[y].empty()) touched.push_back(y);
                via[y].push_back(x);
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int y : touched) {
            auto& xs = via[y];
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j)
                    out.push_back({w, std::min(xs[i], xs[j]), y, std::max(xs[i], xs[j])});
            xs.clear();
        }
    }
    return out;
}

inline std::vector<EdgeClass> classify_edges(const Graph& g) {
    auto br = bridges(g);
    std::set<Edge> cyc;
    for (const FourCycle& c : four_cycles(g)) {
        cyc.emplace(c.w, c.x);
        cyc.emplace(c.x, c.y);
        cyc.emplace(c.y, c.z);
        cyc.emplace(c.z, c.w);
    }
    std::vector<EdgeClass> out;
    for (const Edge& e : g.edges()) {
        bool b = std::binary_search(br.begin(), br.end(), e);
        bool c = cyc.count(e) > 0;
        EdgeKind k = b && c ? EdgeKind::both : b ? EdgeKind::bridge : c ? EdgeKind::in_four_cycle : EdgeKind::neither;
        out.push_back({e, k});
    }
    return out;
}

inline std::vector<EdgeClass> classify_edges(const GammaGraph& gg) { return classify_edges(gg.graph()); }

inline Violations check_edge_classes(const Graph& g) {
    Violations v;
    for (const EdgeClass& c : classify_edges(g))
        if (c.kind == EdgeKind::neither)
            v.push_back({"lem:edge-class", "edge " + std::to_string(c.edge.u) + "-" + std::to_string(c.edge.v) +
                                               " is neither a bridge nor on a 4-cycle"});
    return v;
}

struct K23Check {
    bool free = true;
    std::array<int, 5> witness{};  // two hubs, then three common neighbours
};

inline K23Check check_k23_free(const Graph& g) {
    K23Check out;
    for (int u = 0; u < g.order(); ++u) {
        std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
        for (int x : g.neighbours(u))
            for (int v : g.neighbours(x))
                if (v > u && ++count[v] == 3) {
                    std::vector<int> common;
                    std::set_intersection(g.neighbours(u).begin(), g.neighbours(u).end(), g.neighbours(v).begin(),
                                          g.neighbours(v).end(), std::back_inserter(common));
                    out.free = false;
                    out.witness = {u, v, common[0], common[1], common[2]};
                    return out;
                }
    }
    return out;
}

inline K23Check check_k23_free(const GammaGraph& gg) { return check_k23_free(gg.graph()); }

// a, b in W and c, d outside it with a~c, b~d in the source tree,
// X = W-a+c, Z = W-b+d and Y = W-a-b+c+d.
struct FourCycleWitness {
    FourCycle cycle;
    int a = 0, b = 0, c = 0, d = 0;
};

inline std::vector<FourCycleWitness> four_cycle_witnesses(const GammaGraph& gg, Violations* violations = nullptr) {
    std::vector<FourCycleWitness> out;
    for (const FourCycle& cyc : four_cycles(gg.graph())) {
        const VertexSet& W = gg.sets[cyc.w];
        const VertexSet& X = gg.sets[cyc.x];
        const VertexSet& Y = gg.sets[cyc.y];
        const VertexSet& Z = gg.sets[cyc.z];
        FourCycleWitness fw{cyc, (W - X).front(), (W - Z).front(), (X - W).front(), (Z - W).front()};
        const Graph& t = gg.source;
        VertexSet expect = W;
        expect.erase(fw.a);
        expect.erase(fw.b);
        expect.insert(fw.c);
        expect.insert(fw.d);
        bool ok = fw.a != fw.b && fw.c != fw.d && t.has_edge(fw.a, fw.c) && t.has_edge(fw.b, fw.d) && Y == expect;
        if (ok) {
            out.push_back(fw);
        } else if (violations) {
            violations->push_back({"prop:four-cycle", "cycle " + W.to_string() + " " + X.to_string() + " " +
                                                          Y.to_string() + " " + Z.to_string() + " has no valid a,b,c,d"});
        }
    }
    return out;
}

namespace detail {

class CycleIndex {
public:
    explicit CycleIndex(const Graph& g) : g_(g), cycles_(four_cycles(g)), at_(static_cast<std::size_t>(g.order())) {
        for (std::size_t i = 0; i < cycles_.size(); ++i)
            for (int v : cycles_[i].vertices()) at_[v].push_back(static_cast<int>(i));
    }

    const std::vector<FourCycle>& cycles() const { return cycles_; }
    const std::vector<int>& at(int v) const { return at_[v]; }

    // u lies on some 4-cycle together with at least two vertices of c.
    bool shares_cycle_with_pair(int u, const FourCycle& c) const {
        for (int i : at_[u]) {
            int common = 0;
            for (int v : cycles_[i].vertices())
                if (c.contains(v)) ++common;
            if (common >= 2) return true;
        }
        return false;
    }

    // Neighbours of a cycle member v that are off the cycle and on no
    // 4-cycle with a pair of its vertices.
    std::vector<int> free_neighbours(const FourCycle& c, int v) const {
        std::vector<int> out;
        for (int u : g_.neighbours(v))
            if (!c.contains(u) && !shares_cycle_with_pair(u, c)) out.push_back(u);
        return out;
    }

private:
    const Graph& g_;
    std::vector<FourCycle> cycles_;
    std::vector<std::vector<int>> at_;
};

inline std::string cycle_text(const FourCycle& c) {
    return std::to_string(c.w) + "-" + std::to_string(c.x) + "-" + std::to_string(c.y) + "-" + std::to_string(c.z);
}

inline Violations cycle_incidence(const Graph& g, const std::vector<VertexSet>* sets) {
    Violations out;
    CycleIndex idx(g);
    const auto& cycles = idx.cycles();

    // Two 4-cycles meeting only in W are bridged by a 4-cycle W R Q P.
    for (int w = 0; w < g.order(); ++w) {
        const auto& here = idx.at(w);
        for (std::size_t i = 0; i < here.size(); ++i)
            for (std::size_t j = i + 1; j < here.size(); ++j) {
                const FourCycle& c1 = cycles[here[i]];
                const FourCycle& c2 = cycles[here[j]];
                int shared = 0;
                for (int v : c1.vertices())
                    if (c2.contains(v)) ++shared;
                if (shared != 1) continue;
                auto [r1, r2] = c1.around(w);
                auto [p1, p2] = c2.around(w);
                bool bridged = false;
                for (int r : {r1, r2})
                    for (int p : {p1, p2})
                        for (int q : g.neighbours(r))
                            if (q != w && g.has_edge(q, p)) bridged = true;
                if (!bridged)
                    out.push_back({"prop:incident-cycles", "cycles " + cycle_text(c1) + " and " + cycle_text(c2) +
                                                               " share only " + std::to_string(w) +
                                                               " and no 4-cycle joins them"});
            }
    }

    for (const FourCycle& c : cycles) {
        const auto vs = c.vertices();
        const bool induced = !g.has_edge(c.w, c.y) && !g.has_edge(c.x, c.z);
        std::array<bool, 4> has_free{};
        for (int i = 0; i < 4; ++i) {
            auto fr = idx.free_neighbours(c, vs[i]);
            has_free[i] = !fr.empty();
            // Free neighbours of one cycle vertex all swap out the same member.
            if (sets && fr.size() >= 2) {
                const VertexSet& W = (*sets)[vs[i]];
                int first = (W - (*sets)[fr[0]]).front();
                for (std::size_t k = 1; k < fr.size(); ++k)
                    if ((W - (*sets)[fr[k]]).front() != first)
                        out.push_back({"prop:free-neighbours", "cycle " + cycle_text(c) + " vertex " +
                                                                   std::to_string(vs[i]) + ": free neighbours " +
                                                                   std::to_string(fr[0]) + " and " +
                                                                   std::to_string(fr[k]) + " swap out different members"});
            }
        }
        if (!induced) continue;
        for (int i = 0; i < 4; ++i) {
            int j = (i + 1) % 4;
            if (has_free[i] && has_free[j])
                out.push_back({"prop:adjacent-free", "cycle " + cycle_text(c) + ": adjacent vertices " +
                                                         std::to_string(vs[i]) + " and " + std::to_string(vs[j]) +
                                                         " both have free neighbours"});
        }
    }
    return out;
}

} // namespace detail

inline Violations check_cycle_incidence(const Graph& g) { return detail::cycle_incidence(g, nullptr); }

inline Violations check_cycle_incidence(const GammaGraph& gg) { return detail::cycle_incidence(gg.graph(), &gg.sets); }

// G1 □ G2 with (i, j) numbered i * |G2| + j.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order(), n2 = g2.order();
    Graph g(n1 * n2);
    for (int i = 0; i < n1; ++i)
        for (const Edge& e : g2.edges()) g.add_edge(i * n2 + e.u, i * n2 + e.v);
    for (const Edge& e : g1.edges())
        for (int j = 0; j < n2; ++j) g.add_edge(e.u * n2 + j, e.v * n2 + j);
    return g;
}

struct CartesianFactorization {
    std::vector<Graph> factors;
    std::vector<std::vector<int>> coordinates;  // coordinates[v][i] is v's vertex in factors[i]

    bool is_product() const { return factors.size() >= 2; }
};

namespace detail {

inline int find_root(std::vector<int>& parent, int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
}

// Edge classes of the square-property relation, numbered by first edge.
inline std::vector<int> square_classes(const Graph& g, const std::vector<Edge>& edges, int& count) {
    std::unordered_map<std::int64_t, int> id;
    const std::int64_t n = g.order();
    for (std::size_t i = 0; i < edges.size(); ++i) id[edges[i].u * n + edges[i].v] = static_cast<int>(i);
    auto eid = [&](int a, int b) { return id.at(std::min(a, b) * n + std::max(a, b)); };

    std::vector<int> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };

    for (int u = 0; u < g.order(); ++u) {
        const auto& nb = g.neighbours(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int v = nb[i], w = nb[j];
                std::vector<int> xs;
                for (int x : g.neighbours(v))
                    if (x != u && g.has_edge(x, w)) xs.push_back(x);
                const bool vw = g.has_edge(v, w);
                for (int x : xs)
                    if (!vw && !g.has_edge(u, x)) {
                        unite(eid(u, v), eid(x, w));
                        unite(eid(u, w), eid(x, v));
                    }
                const bool unique_chordless = xs.size() == 1 && !vw && !g.has_edge(u, xs[0]);
                if (!unique_chordless) unite(eid(u, v), eid(u, w));
            }
    }

    std::vector<int> cls(edges.size(), -1), label(edges.size(), -1);
    count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int r = find_root(parent, static_cast<int>(i));
        if (label[r] < 0) label[r] = count++;
        cls[i] = label[r];
    }
    return cls;
}

struct Split {
    Graph first, second;
    std::vector<int> c1, c2;  // coordinates of every vertex of g
};

// Tries g = G1 □ G2 with G1 spanned by the edges flagged in `in_first`.
inline std::optional<Split> try_split(const Graph& g, const std::vector<Edge>& edges, const std::vector<char>& in_first) {
    const int n = g.order();
    Graph ga(n), gb(n);
    for (std::size_t i = 0; i < edges.size(); ++i) (in_first[i] ? ga : gb).add_edge(edges[i].u, edges[i].v);
    auto [comp_a, count_a] = connected_components(ga);
    auto [comp_b, count_b] = connected_components(gb);
    std::vector<int> layer_a, layer_b;  // layers through vertex 0
    for (int v = 0; v < n; ++v) {
        if (comp_a[v] == comp_a[0]) layer_a.push_back(v);
        if (comp_b[v] == comp_b[0]) layer_b.push_back(v);
    }
    const int n1 = static_cast<int>(layer_a.size()), n2 = static_cast<int>(layer_b.size());
    if (n1 < 2 || n2 < 2 || n1 * n2 != n || count_b != n1 || count_a != n2) return std::nullopt;

    std::vector<int> of_b(static_cast<std::size_t>(count_b), -1), of_a(static_cast<std::size_t>(count_a), -1);
    for (int i = 0; i < n1; ++i) {
        int& slot = of_b[comp_b[layer_a[i]]];
        if (slot >= 0) return std::nullopt;
        slot = i;
    }
    for (int j = 0; j < n2; ++j) {
        int& slot = of_a[comp_a[layer_b[j]]];
        if (slot >= 0) return std::nullopt;
        slot = j;
    }

    Split s;
    s.c1.resize(static_cast<std::size_t>(n));
    s.c2.resize(static_cast<std::size_t>(n));
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        s.c1[v] = of_b[comp_b[v]];
        s.c2[v] = of_a[comp_a[v]];
        map[v] = s.c1[v] * n2 + s.c2[v];
    }
    s.first = induced_subgraph(ga, layer_a);
    s.second = induced_subgraph(gb, layer_b);
    if (!is_isomorphism(g, cartesian_product(s.first, s.second), map)) return std::nullopt;
    return s;
}

inline constexpr int max_square_classes = 24;

inline CartesianFactorization factorize(const Graph& g) {
    const int n = g.order();
    CartesianFactorization prime{{g}, {}};
    for (int v = 0; v < n; ++v) prime.coordinates.push_back({v});
    if (n < 4) return prime;

    const std::vector<Edge> edges = g.edges();
    int count = 0;
    const std::vector<int> cls = square_classes(g, edges, count);
    if (count < 2) return prime;
    if (count > max_square_classes)
        throw precondition_error("factorize_cartesian: " + std::to_string(count) + " edge classes is above desk scale");

    // The last class always stays on the second side.
    for (std::uint32_t mask = 1; mask < (1u << (count - 1)); ++mask) {
        std::vector<char> in_first(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) in_first[i] = (mask >> cls[i]) & 1u;
        auto split = try_split(g, edges, in_first);
        if (!split) continue;
        CartesianFactorization f1 = factorize(split->first), f2 = factorize(split->second);
        CartesianFactorization out;
        out.factors = f1.factors;
        out.factors.insert(out.factors.end(), f2.factors.begin(), f2.factors.end());
        for (int v = 0; v < n; ++v) {
            std::vector<int> c = f1.coordinates[split->c1[v]];
            const auto& tail = f2.coordinates[split->c2[v]];
            c.insert(c.end(), tail.begin(), tail.end());
            out.coordinates.push_back(std::move(c));
        }
        return out;
    }
    return prime;
}

} // namespace detail

inline Graph product_of(const std::vector<Graph>& factors) {
    Graph acc(1);
    for (const Graph& f : factors) acc = cartesian_product(acc, f);
    return acc;
}

// Prime factors of a connected graph under the Cartesian product, with each
// vertex's coordinates. The result is checked by rebuilding the product
// along the coordinates; a failed check yields the graph itself as prime.
inline CartesianFactorization factorize_cartesian(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw precondition_error("factorize_cartesian: graph is not connected");
    CartesianFactorization f = detail::factorize(g);
    if (!f.is_product()) return f;
    std::vector<int> map;
    for (const auto& c : f.coordinates) {
        int idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i) idx = idx * f.factors[i].order() + c[i];
        map.push_back(idx);
    }
    if (!is_isomorphism(g, product_of(f.factors), map)) {
        CartesianFactorization prime{{g}, {}};
        for (int v = 0; v < g.order(); ++v) prime.coordinates.push_back({v});
        return prime;
    }
    return f;
}

// Largest set of edges at v with no two on a common 4-cycle.
inline int alpha_dagger(const Graph& g, int v) {
    if (!g.valid_vertex(v)) throw precondition_error("alpha_dagger: vertex out of range");
    const auto& nb = g.neighbours(v);
    const int d = static_cast<int>(nb.size());
    if (d > 64) throw precondition_error("alpha_dagger: degree above 64");
    std::vector<std::uint64_t> conflict(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            bool shared = false;
            for (int x : g.neighbours(nb[i]))
                if (x != v && g.has_edge(x, nb[j])) shared = true;
            if (shared) {
                conflict[i] |= std::uint64_t{1} << j;
                conflict[j] |= std::uint64_t{1} << i;
            }
        }
    auto best = [&](auto&& self, std::uint64_t open) -> int {
        if (!open) return 0;
        int i = std::countr_zero(open);
        std::uint64_t rest = open & ~(std::uint64_t{1} << i);
        int skip = self(self, rest);
        int take = 1 + self(self, rest & ~conflict[i]);
        return std::max(skip, take);
    };
    std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    return best(best, all);
}

struct StemReport {
    int stem = 0;
    std::vector<int> leaves;
    std::optional<int> x;  // member swapped out towards every leaf, when they agree
    int degree_in_g_prime = 0;
    std::vector<std::pair<int, bool>> external_pn;  // (member, has an external private neighbour)
    int alpha_dagger = 0;
    int prime_factor_count = 1;  // of G′
    std::optional<bool> pqrs_hypothesis;  // at G′ degree 2 only
    std::optional<bool> degree_two_converse;  // at G′ degree 2: product implies all external

    bool all_external() const {
        return std::all_of(external_pn.begin(), external_pn.end(), [](const auto& p) { return p.second; });
    }
    bool g_prime_is_product() const { return prime_factor_count >= 2; }
};

struct StemAnalysis {
    std::vector<StemReport> stems;
    Violations violations;
};

namespace detail {

// Degree 2 at s with neighbours p, r in a 4-cycle p q r s, where every
// neighbour of q lies on a 4-cycle through p or through r.
inline bool pqrs_condition(const Graph& g, int s) {
    if (g.degree(s) != 2) return false;
    const int p = g.neighbours(s)[0], r = g.neighbours(s)[1];
    CycleIndex idx(g);
    auto on_cycle_with = [&](int u, int a) {
        for (int i : idx.at(u))
            if (idx.cycles()[i].contains(a)) return true;
        return false;
    };
    for (int q : g.neighbours(p)) {
        if (q == s || !g.has_edge(q, r)) continue;
        bool all = true;
        for (int u : g.neighbours(q))
            if (!on_cycle_with(u, p) && !on_cycle_with(u, r)) all = false;
        if (all) return true;
    }
    return false;
}

} // namespace detail

// Per stem S of a tree's γ-graph (a vertex adjacent to a degree-1 vertex),
// with G′ the γ-graph minus the leaves of S.
inline StemAnalysis analyze_stems(const GammaGraph& gg) {
    StemAnalysis out;
    const Graph g = gg.graph();
    const Graph& t = gg.source;
    auto fail = [&](const std::string& tag, int s, const std::string& what) {
        out.violations.push_back({tag, "stem " + gg.sets[s].to_string() + ": " + what});
    };

    for (int s = 0; s < g.order(); ++s) {
        StemReport rep;
        rep.stem = s;
        for (int u : g.neighbours(s))
            if (g.degree(u) == 1) rep.leaves.push_back(u);
        if (rep.leaves.empty()) continue;
        const int k = static_cast<int>(rep.leaves.size());

        int common = gg.swapped_out(s, rep.leaves[0]);
        bool agree = true;
        for (int l : rep.leaves)
            if (gg.swapped_out(s, l) != common) agree = false;
        if (agree) rep.x = common;

        std::vector<int> keep;
        int s_local = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (std::binary_search(rep.leaves.begin(), rep.leaves.end(), v)) continue;
            if (v == s) s_local = static_cast<int>(keep.size());
            keep.push_back(v);
        }
        const Graph gp = induced_subgraph(g, keep);
        rep.degree_in_g_prime = gp.degree(s_local);
        for (int m : gg.sets[s]) rep.external_pn.emplace_back(m, !external_private_neighbours(t, gg.sets[s], m).empty());
        rep.alpha_dagger = alpha_dagger(gp, s_local);
        const CartesianFactorization fact = factorize_cartesian(gp);
        rep.prime_factor_count = static_cast<int>(fact.factors.size());

        const int deg = rep.degree_in_g_prime;
        const bool all_ext = rep.all_external(), product = rep.g_prime_is_product();
        if (g.degree(s) >= 3 && !rep.x) fail("lem:stem-fanout", s, "leaves swap out different members");
        if (g.degree(s) >= 3 && all_ext && k != 1)
            fail("lem:single-leaf", s, "all members have external pn but " + std::to_string(k) + " leaves");
        if (deg >= 3 && product != all_ext)
            fail("prop:stem-product", s,
                 std::string("G' degree ") + std::to_string(deg) + (product ? " product" : " prime") +
                     (all_ext ? " with" : " without") + " all members externally private");
        if (deg >= 2 && all_ext && !product) fail("prop:stem-product-half", s, "G' is prime");
        if (deg > 2 * rep.alpha_dagger && !product)
            fail("lem:alpha-dagger", s, "degree " + std::to_string(deg) + " > 2 * " + std::to_string(rep.alpha_dagger) +
                                            " but G' is prime");
        if (deg >= 3 && product)
            for (std::size_t i = 0; i < fact.factors.size(); ++i)
                if (fact.factors[i].degree(fact.coordinates[s_local][i]) != 1)
                    fail("cor:leaf-factors", s, "coordinate in factor " + std::to_string(i) + " is not a leaf");
        if (deg == 2) {
            rep.pqrs_hypothesis = detail::pqrs_condition(gp, s_local);
            if (*rep.pqrs_hypothesis && !product) fail("prop:pqrs", s, "hypothesis holds but G' is prime");
            rep.degree_two_converse = !product || all_ext;
        }
        out.stems.push_back(std::move(rep));
    }
    return out;
}

struct ProductTheoremReport {
    Graph tree;  // t1, then t2 shifted by |t1|, plus the stem-stem edge
    int stem1 = 0, stem2 = 0;  // in the ids of t1 and t2
    bool holds = false;
    bool via_bijection = false;  // (D1, D2) -> D1 ∪ D2 was an isomorphism
};

// Smallest-id vertex adjacent to a leaf, if any.
inline std::optional<int> find_stem(const Graph& t) {
    for (int v = 0; v < t.order(); ++v)
        for (int u : t.neighbours(v))
            if (t.degree(u) == 1) return v;
    return std::nullopt;
}

// Joins a stem of t1 to a stem of t2 and compares the γ-graph of the result
// with the product of the two γ-graphs.
inline ProductTheoremReport check_product_theorem(const Graph& t1, const Graph& t2,
                                                  std::optional<std::pair<int, int>> stems = std::nullopt) {
    if (!is_tree(t1) || !is_tree(t2)) throw precondition_error("check_product_theorem: inputs must be trees");
    ProductTheoremReport rep;
    if (stems) {
        rep.stem1 = stems->first;
        rep.stem2 = stems->second;
        auto is_stem = [](const Graph& t, int v) {
            if (!t.valid_vertex(v)) return false;
            for (int u : t.neighbours(v))
                if (t.degree(u) == 1) return true;
            return false;
        };
        if (!is_stem(t1, rep.stem1) || !is_stem(t2, rep.stem2))
            throw precondition_error("check_product_theorem: given vertex is not a stem");
    } else {
        auto s1 = find_stem(t1), s2 = find_stem(t2);
        if (!s1 || !s2) throw precondition_error("check_product_theorem: a tree has no stem");
        rep.stem1 = *s1;
        rep.stem2 = *s2;
    }
    rep.tree = disjoint_union(t1, t2);
    const int offset = t1.order();
    rep.tree.add_edge(rep.stem1, offset + rep.stem2);

    const GammaGraph g1 = gammatree(bfs_root(t1, 0));
    const GammaGraph g2 = gammatree(bfs_root(t2, 0));
    const GammaGraph gt = gammatree(bfs_root(rep.tree, 0));
    const Graph prod = cartesian_product(g1.graph(), g2.graph());

    if (gt.order() == prod.order()) {
        auto ids = gt.id_map();
        std::vector<int> map;
        for (const VertexSet& d1 : g1.sets)
            for (const VertexSet& d2 : g2.sets) {
                VertexSet u = d1;
                for (int v : d2) u.insert(v + offset);
                auto it = ids.find(u);
                if (it == ids.end()) break;
                map.push_back(it->second);
            }
        if (static_cast<int>(map.size()) == prod.order() && is_isomorphism(prod, gt.graph(), map)) {
            rep.holds = rep.via_bijection = true;
            return rep;
        }
    }
    rep.holds = are_isomorphic(prod, gt.graph());
    return rep;
}

} // namespace ggk
