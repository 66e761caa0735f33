#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace ggk {

inline Graph make_path(int k) {
    if (k < 1) throw precondition_error("path needs k >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

// K_{1,k}: centre 0, leaves 1..k.
inline Graph make_star(int k) {
    if (k < 1) throw precondition_error("star needs k >= 1");
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw precondition_error("complete bipartite needs both parts >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph make_cycle(int k) {
    if (k < 3) throw precondition_error("cycle needs k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline Graph make_complete(int k) {
    if (k < 1) throw precondition_error("complete graph needs k >= 1");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

inline Graph make_hypercube(int d) {
    if (d < 0 || d > 8) throw precondition_error("hypercube dimension out of range");
    Graph g(1 << d);
    for (int v = 0; v < (1 << d); ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

// Stepgrid SG(k): cells (i,j), 1 <= i,j <= k, i+j <= k+2, numbered row-major,
// with the grid edges that stay inside that cell set.
inline Graph make_stepgrid(int k) {
    if (k < 1) throw precondition_error("stepgrid needs k >= 1");
    std::map<std::pair<int, int>, int> id;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i + j <= k + 2) id.emplace(std::pair{i, j}, static_cast<int>(id.size()));
    Graph g(static_cast<int>(id.size()));
    for (const auto& [cell, v] : id) {
        auto [i, j] = cell;
        if (auto it = id.find({i, j + 1}); it != id.end()) g.add_edge(v, it->second);
        if (auto it = id.find({i + 1, j}); it != id.end()) g.add_edge(v, it->second);
    }
    return g;
}

// Y_n: n copies of K_{1,3}, one leaf of each joined to a common centre.
// Centre is 0; copy j uses 4j+1 (attachment), 4j+2 (stem), 4j+3 and 4j+4 (leaves).
inline Graph make_y(int n) {
    if (n < 1) throw precondition_error("Y_n needs n >= 1");
    Graph g(4 * n + 1);
    for (int j = 0; j < n; ++j) {
        int a = 4 * j + 1, s = a + 1;
        g.add_edge(0, a);
        g.add_edge(a, s);
        g.add_edge(s, s + 1);
        g.add_edge(s, s + 2);
    }
    return g;
}

// Double star: 0 and 1 adjacent, 0 carries leaves 2 and 3, 1 carries 4 and 5.
inline Graph make_h() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

struct FixtureSpec {
    std::string kind;
    std::vector<int> params;
};

// kind in {path k, star k, complete_bipartite a b, stepgrid k, Y n, H,
// cycle k, complete k, hypercube d}.
inline Graph make_fixture(const FixtureSpec& spec) {
    auto need = [&](std::size_t count) {
        if (spec.params.size() != count)
            throw precondition_error("fixture '" + spec.kind + "' takes " + std::to_string(count) + " parameter(s)");
    };
    const std::string& k = spec.kind;
    if (k == "path") return need(1), make_path(spec.params[0]);
    if (k == "star") return need(1), make_star(spec.params[0]);
    if (k == "complete_bipartite") return need(2), make_complete_bipartite(spec.params[0], spec.params[1]);
    if (k == "stepgrid") return need(1), make_stepgrid(spec.params[0]);
    if (k == "Y" || k == "y") return need(1), make_y(spec.params[0]);
    if (k == "H" || k == "h") return need(0), make_h();
    if (k == "cycle") return need(1), make_cycle(spec.params[0]);
    if (k == "complete") return need(1), make_complete(spec.params[0]);
    if (k == "hypercube") return need(1), make_hypercube(spec.params[0]);
    throw precondition_error("unknown fixture kind '" + k + "'");
}

} // namespace ggk
