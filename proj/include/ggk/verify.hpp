#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "characterization.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "gamma_graph.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "invariants.hpp"
#include "structure.hpp"
#include "tree_enum.hpp"

namespace ggk {

inline constexpr int verify_hard_cap = 14;

// GGK_MAX_N lifts the cap; runs above 14 are unsupported territory.
inline int verify_cap() {
    if (const char* env = std::getenv("GGK_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return verify_hard_cap;
}

struct VerifyConfig {
    int max_n = 8;
    std::vector<std::string> checks;  // empty means every registered check
    int parallelism = 1;
    std::string output;               // report path; empty means none
    bool inject_violation = false;    // harness self-test
};

// One enumerated tree with its γ-graph (gammatree rooted at 0) and, on
// demand, the oracle's.
class TreeCase {
public:
    explicit TreeCase(Graph t) : tree_(std::move(t)), hash_(edge_list_hash(tree_)), gg_(gammatree(bfs_root(tree_, 0))) {}

    const Graph& tree() const { return tree_; }
    const std::string& hash() const { return hash_; }
    const GammaGraph& gg() const { return gg_; }

    const GammaGraph& oracle() {
        if (!oracle_) oracle_ = gamma_graph_oracle(tree_);
        return *oracle_;
    }

    std::uint64_t seed() const { return std::stoull(hash_, nullptr, 16); }

private:
    Graph tree_;
    std::string hash_;
    GammaGraph gg_;
    std::optional<GammaGraph> oracle_;
};

struct CheckOutcome {
    long instances = 0;
    Violations violations;

    void add(Violations v) { violations.insert(violations.end(), v.begin(), v.end()); }
};

struct RegisteredCheck {
    std::string id;
    std::string description;
    std::function<void(TreeCase&, CheckOutcome&)> run;
};

namespace detail {

inline void check_oracle(TreeCase& c, CheckOutcome& out) {
    ++out.instances;
    std::string why;
    if (!same_set_family(c.gg(), c.oracle(), &why)) out.violations.push_back({"alg:oracle-mismatch", why});
}

inline void check_roots(TreeCase& c, CheckOutcome& out) {
    std::mt19937_64 rng(c.seed());
    std::uniform_int_distribution<int> pick(0, c.tree().order() - 1);
    for (int i = 0; i < 3; ++i) {
        int r = pick(rng);
        ++out.instances;
        std::string why;
        if (!same_set_family(gammatree(bfs_root(c.tree(), r)), c.gg(), &why))
            out.violations.push_back({"alg:root-dependence", "root " + std::to_string(r) + ": " + why});
    }
}

inline void check_highest(TreeCase& c, CheckOutcome& out) {
    const auto& sets = c.oracle().sets;
    for (int r = 0; r < c.tree().order(); ++r) {
        ++out.instances;
        RootedTree rt = bfs_root(c.tree(), r);
        int best = -1, count = 0;
        VertexSet lowest;
        for (const VertexSet& d : sets) {
            int h = set_height(rt, d);
            if (best < 0 || h < best) {
                best = h;
                count = 1;
                lowest = d;
            } else if (h == best) {
                ++count;
            }
        }
        const std::string where = "root " + std::to_string(r) + ": ";
        if (count != 1) out.violations.push_back({"thm:unique-highest", where + std::to_string(count) + " minimum sets"});
        VertexSet h = highest_gamma_set(rt);
        if (h != lowest)
            out.violations.push_back({"alg:highest", where + h.to_string() + " but brute force gives " + lowest.to_string()});
        if (!is_highest(rt, lowest))
            out.violations.push_back({"lem:highest-criterion", where + lowest.to_string() + " fails the child criterion"});
    }
}

inline void check_realizability(TreeCase& c, CheckOutcome& out) {
    if (is_realizable_tree(c.tree())) {
        ++out.instances;
        construct_inverse(c.tree());
    }
    Graph g = c.gg().graph();
    if (is_tree(g)) {
        ++out.instances;
        if (auto e = find_h_edge(g))
            out.violations.push_back({"thm:realization", "γ-graph is a tree containing H at " + std::to_string(e->u) +
                                                             "-" + std::to_string(e->v)});
    }
}

inline void check_forbidden(TreeCase& c, CheckOutcome& out) {
    VertexSet used;
    for (const VertexSet& d : c.gg().sets) used |= d;
    for (int x = 0; x < c.tree().order(); ++x) {
        if (used.contains(x)) continue;
        ++out.instances;
        std::string why;
        if (!same_set_family(gamma_via_forbidden_vertex(c.tree(), x), c.gg(), &why))
            out.violations.push_back({"thm:forbidden-vertex", "x=" + std::to_string(x) + ": " + why});
    }
}

inline void check_leaf_reduction(TreeCase& c, CheckOutcome& out) {
    for (int a = 0; a < c.gg().order(); ++a)
        if (c.gg().degree(a) == 1) {
            ++out.instances;
            reduce_leaf(c.tree(), a);
        }
}

// Peels γ-graph leaves (smallest id first) until none is left.
inline void check_leaf_peeling(TreeCase& c, CheckOutcome& out) {
    if (!is_tree(c.gg().graph())) return;
    ++out.instances;
    Graph t = c.tree();
    for (;;) {
        GammaGraph gg = gammatree(bfs_root(t, 0));
        int leaf = -1;
        for (int a = 0; a < gg.order() && leaf < 0; ++a)
            if (gg.degree(a) == 1) leaf = a;
        if (leaf < 0) break;
        t = reduce_leaf(t, leaf).tree;
    }
}

inline void check_cut_edges(TreeCase& c, CheckOutcome& out) {
    for (const Edge& e : bridges(c.gg().graph())) {
        ++out.instances;
        split_at_cut_edge(c.tree(), e);
    }
}

inline void check_stems(TreeCase& c, CheckOutcome& out) {
    StemAnalysis sa = analyze_stems(c.gg());
    out.instances += static_cast<long>(sa.stems.size());
    out.add(std::move(sa.violations));
}

inline void check_four_cycles(TreeCase& c, CheckOutcome& out) {
    Violations v;
    out.instances += static_cast<long>(four_cycle_witnesses(c.gg(), &v).size() + v.size());
    out.add(std::move(v));
}

template <Violations (*F)(const GammaGraph&)>
void per_graph(TreeCase& c, CheckOutcome& out) {
    ++out.instances;
    out.add(F(c.gg()));
}

inline Violations edge_classes(const GammaGraph& gg) { return check_edge_classes(gg.graph()); }

inline Violations k23(const GammaGraph& gg) {
    K23Check k = check_k23_free(gg);
    if (k.free) return {};
    std::string w;
    for (int v : k.witness) w += (w.empty() ? "" : " ") + gg.sets[v].to_string();
    return {{"thm:no-k23", w}};
}

inline Violations cycle_incidence_of(const GammaGraph& gg) { return check_cycle_incidence(gg); }

} // namespace detail

inline const std::vector<RegisteredCheck>& registered_checks() {
    static const std::vector<RegisteredCheck> checks{
        {"oracle", "gammatree and the brute-force oracle give the same sets and edges", detail::check_oracle},
        {"roots", "three random roots give the same set family", detail::check_roots},
        {"laws", "index and height laws hold during gammatree", detail::per_graph<check_gammatree_laws>},
        {"sets", "every vertex is a γ-set and every edge a slide", detail::per_graph<check_gamma_sets>},
        {"connectivity", "the γ-graph is connected", detail::per_graph<check_connected>},
        {"bipartite", "the γ-graph is bipartite", detail::per_graph<check_bipartite>},
        {"adjacent-pn", "adjacent sets share the private neighbours of the swapped pair",
         detail::per_graph<check_adjacent_private_neighbours>},
        {"unique-swap-in", "each outside vertex swaps in against at most one member",
         detail::per_graph<check_unique_swap_in>},
        {"pn-drift", "private neighbours of a common member change by at most one",
         detail::per_graph<check_private_neighbour_drift>},
        {"highest", "the minimum-height γ-set is unique and HIGHEST finds it, for every root", detail::check_highest},
        {"k23", "no K_{2,3} subgraph", detail::per_graph<detail::k23>},
        {"edge-classes", "every edge is a bridge or on a 4-cycle", detail::per_graph<detail::edge_classes>},
        {"four-cycles", "every 4-cycle has the two-swap form", detail::check_four_cycles},
        {"cycle-incidence", "incident 4-cycles and free neighbours behave", detail::per_graph<detail::cycle_incidence_of>},
        {"leaf-lemmas", "γ-graph leaves have one low member that lies in no other γ-set",
         detail::per_graph<check_leaf_lemmas>},
        {"stems", "stem analysis: fan-out, single leaf, product criteria", detail::check_stems},
        {"realizability", "H-free trees round-trip; tree γ-graphs are H-free", detail::check_realizability},
        {"forbidden-vertex", "the forbidden-vertex product formula matches", detail::check_forbidden},
        {"leaf-reduction", "every γ-graph leaf can be removed by a tree edit", detail::check_leaf_reduction},
        {"leaf-peeling", "tree γ-graphs peel down leaf by leaf", detail::check_leaf_peeling},
        {"cut-edge", "every bridge splits into two realizable sides", detail::check_cut_edges},
    };
    return checks;
}

struct VerifyReport {
    int max_n = 0;
    long trees = 0;
    std::vector<std::string> check_ids;
    std::vector<long> instances;   // per check, in check_ids order
    std::vector<long> violations;  // per check
    std::vector<std::string> violation_lines;
    long duplicate_discoveries = 0;

    bool ok() const { return violation_lines.empty(); }

    std::string text() const {
        std::ostringstream out;
        out << "verify max_n=" << max_n << " trees=" << trees << " checks=" << check_ids.size() << '\n';
        for (std::size_t i = 0; i < check_ids.size(); ++i)
            out << "check " << check_ids[i] << " instances=" << instances[i] << " violations=" << violations[i] << '\n';
        out << "duplicate-discoveries " << duplicate_discoveries << '\n';
        out << "violations " << violation_lines.size() << '\n';
        for (const auto& l : violation_lines) out << l << '\n';
        return out.str();
    }
};

namespace detail {

struct TreeResult {
    std::vector<long> instances;
    std::vector<long> violations;
    std::vector<std::string> lines;
    long duplicates = 0;
};

inline TreeResult run_tree(const Graph& t, const std::vector<const RegisteredCheck*>& checks, bool inject) {
    TreeResult r;
    r.instances.assign(checks.size(), 0);
    r.violations.assign(checks.size(), 0);
    auto line = [&](const std::string& hash, const Violation& v) {
        return "VIOLATION " + v.tag + " " + hash + " " + v.details;
    };
    std::optional<TreeCase> c;
    try {
        c.emplace(t);
    } catch (const error& e) {
        r.lines.push_back(line(edge_list_hash(t), {"harness:error", e.what()}));
        return r;
    }
    r.duplicates = c->gg().log.duplicate_discoveries;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CheckOutcome out;
        try {
            checks[i]->run(*c, out);
        } catch (const theorem_violation& e) {
            out.violations.push_back({e.tag(), e.what()});
        } catch (const error& e) {
            out.violations.push_back({"harness:error", e.what()});
        }
        r.instances[i] = out.instances;
        r.violations[i] = static_cast<long>(out.violations.size());
        for (const Violation& v : out.violations) r.lines.push_back(line(c->hash(), v));
    }
    if (inject) r.lines.push_back(line(c->hash(), {"harness:injected", "test hook"}));
    return r;
}

} // namespace detail

// Runs the selected checks over every tree with 1..max_n vertices. Workers
// pull trees from a shared counter; results are merged in enumeration order,
// so serial and parallel runs produce the same report.
inline VerifyReport run_verify(const VerifyConfig& cfg) {
    if (cfg.max_n < 1) throw precondition_error("verify: max_n must be >= 1");
    if (cfg.max_n > verify_cap())
        throw precondition_error("verify: max_n = " + std::to_string(cfg.max_n) + " exceeds the cap of " +
                                 std::to_string(verify_cap()) + " (set GGK_MAX_N to lift it)");
    if (cfg.parallelism < 1) throw precondition_error("verify: parallelism must be >= 1");

    std::vector<const RegisteredCheck*> checks;
    const auto& all = registered_checks();
    if (cfg.checks.empty()) {
        for (const auto& c : all) checks.push_back(&c);
    } else {
        for (const auto& id : cfg.checks) {
            auto it = std::find_if(all.begin(), all.end(), [&](const RegisteredCheck& c) { return c.id == id; });
            if (it == all.end()) throw precondition_error("verify: unknown check '" + id + "'");
            checks.push_back(&*it);
        }
    }

    std::vector<Graph> trees;
    for (int n = 1; n <= cfg.max_n; ++n) for_each_tree(n, [&](Graph g) { trees.push_back(std::move(g)); });

    std::vector<detail::TreeResult> results(trees.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < trees.size();)
            results[i] = detail::run_tree(trees[i], checks, cfg.inject_violation && i == 0);
    };
    const int workers = std::min<int>(cfg.parallelism, static_cast<int>(trees.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerifyReport rep;
    rep.max_n = cfg.max_n;
    rep.trees = static_cast<long>(trees.size());
    for (const auto* c : checks) rep.check_ids.push_back(c->id);
    rep.instances.assign(checks.size(), 0);
    rep.violations.assign(checks.size(), 0);
    for (const auto& r : results) {
        for (std::size_t i = 0; i < checks.size() && i < r.instances.size(); ++i) {
            rep.instances[i] += r.instances[i];
            rep.violations[i] += r.violations[i];
        }
        rep.violation_lines.insert(rep.violation_lines.end(), r.lines.begin(), r.lines.end());
        rep.duplicate_discoveries += r.duplicates;
    }
    return rep;
}

} // namespace ggk
