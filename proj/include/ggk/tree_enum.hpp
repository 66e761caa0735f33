#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace ggk {

inline constexpr int tree_enumeration_cap = 16;

namespace detail {

// Level-sequence machinery of the Wright-Richmond-Odlyzko-McKay free tree
// generator (Beyer-Hedetniemi successor for rooted trees).
using Layout = std::vector<int>;

inline std::optional<Layout> next_rooted_tree(const Layout& pred, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(pred.size()) - 1;
        while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout result = pred;
    for (std::size_t i = static_cast<std::size_t>(p); i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
}

// Left subtree of the root and the remainder, both as level sequences.
inline std::pair<Layout, Layout> split_tree(const Layout& layout) {
    bool one_found = false;
    std::size_t m = layout.size();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] != 1) continue;
        if (one_found) {
            m = i;
            break;
        }
        one_found = true;
    }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

inline std::optional<Layout> next_tree(const Layout& candidate) {
    auto [left, rest] = split_tree(candidate);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid) return candidate;
    int p = static_cast<int>(left.size());
    std::optional<Layout> next = next_rooted_tree(candidate, p);
    if (next && candidate[p] > 2) {
        auto [new_left, new_rest] = split_tree(*next);
        int h = *std::max_element(new_left.begin(), new_left.end());
        std::size_t len = static_cast<std::size_t>(h + 1);
        for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i + 1);
    }
    return next;
}

inline Graph layout_to_graph(const Layout& layout) {
    Graph g(static_cast<int>(layout.size()));
    std::vector<int> stack;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (!stack.empty()) {
            while (layout[stack.back()] >= layout[i]) stack.pop_back();
            g.add_edge(stack.back(), static_cast<int>(i));
        }
        stack.push_back(static_cast<int>(i));
    }
    return g;
}

inline int effective_cap() {
    if (const char* env = std::getenv("GGK_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return tree_enumeration_cap;
}

} // namespace detail

// Calls visit(tree) once per isomorphism class of trees on n vertices, in a
// fixed order. Constant amortized time per tree.
template <class Visitor>
void for_each_tree(int n, Visitor&& visit) {
    if (n < 1) throw precondition_error("enumerate_trees: n must be >= 1");
    if (n > detail::effective_cap())
        throw precondition_error("enumerate_trees: n = " + std::to_string(n) + " exceeds the cap of " +
                                 std::to_string(detail::effective_cap()));
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    // Start at the path rooted at its centre.
    detail::Layout layout;
    for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
    std::optional<detail::Layout> cur = layout;
    while (cur) {
        cur = detail::next_tree(*cur);
        if (!cur) break;
        visit(detail::layout_to_graph(*cur));
        cur = detail::next_rooted_tree(*cur);
    }
}

inline std::vector<Graph> enumerate_trees(int n) {
    std::vector<Graph> out;
    for_each_tree(n, [&](Graph g) { out.push_back(std::move(g)); });
    return out;
}

// All trees with 1..max_n vertices, smallest first.
inline std::vector<Graph> enumerate_trees_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for_each_tree(n, [&](Graph g) { out.push_back(std::move(g)); });
    return out;
}

} // namespace ggk
