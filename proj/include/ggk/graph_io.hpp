#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace ggk {

class parse_error : public error {
public:
    enum class kind { malformed, out_of_range, self_loop, duplicate_edge, edge_count };

    parse_error(kind k, int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), kind_(k), line_(line) {}

    kind code() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    kind kind_;
    int line_;
};

namespace detail {

inline std::string_view strip_comment(std::string_view s) {
    if (auto p = s.find('#'); p != std::string_view::npos) s = s.substr(0, p);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Exactly two non-negative integers separated by whitespace.
inline bool read_pair(std::string_view s, long long& a, long long& b) {
    auto skip_ws = [&](std::size_t i) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        return i;
    };
    std::size_t i = 0;
    auto r1 = std::from_chars(s.data() + i, s.data() + s.size(), a);
    if (r1.ec != std::errc{} || r1.ptr == s.data()) return false;
    i = static_cast<std::size_t>(r1.ptr - s.data());
    std::size_t j = skip_ws(i);
    if (j == i) return false;
    auto r2 = std::from_chars(s.data() + j, s.data() + s.size(), b);
    if (r2.ec != std::errc{} || r2.ptr == s.data() + j) return false;
    j = skip_ws(static_cast<std::size_t>(r2.ptr - s.data()));
    return j == s.size();
}

} // namespace detail

// Edge-list document: '#' comments, header "n m", then m lines "u v".
inline Graph parse_graph(std::string_view text) {
    using k = parse_error::kind;
    Graph g;
    long long n = -1, m = -1;
    long long seen_edges = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = detail::strip_comment(text.substr(pos, end - pos));
        ++line_no;
        pos = end + 1;
        if (line.empty()) continue;
        long long a = 0, b = 0;
        if (!detail::read_pair(line, a, b))
            throw parse_error(k::malformed, line_no, "expected two non-negative integers, got '" + std::string(line) + "'");
        if (a < 0 || b < 0) throw parse_error(k::malformed, line_no, "negative value");
        if (n < 0) {
            if (a > 1'000'000) throw parse_error(k::out_of_range, line_no, "vertex count too large");
            n = a;
            m = b;
            g = Graph(static_cast<int>(n));
            continue;
        }
        if (seen_edges == m) throw parse_error(k::edge_count, line_no, "more than the declared " + std::to_string(m) + " edges");
        if (a >= n || b >= n)
            throw parse_error(k::out_of_range, line_no, "vertex out of range in edge " + std::to_string(a) + " " + std::to_string(b));
        if (a == b) throw parse_error(k::self_loop, line_no, "self-loop at " + std::to_string(a));
        if (g.has_edge(static_cast<int>(a), static_cast<int>(b)))
            throw parse_error(k::duplicate_edge, line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
        ++seen_edges;
    }
    if (n < 0) throw parse_error(k::malformed, line_no, "missing header 'n m'");
    if (seen_edges != m)
        throw parse_error(k::edge_count, line_no,
                          "declared " + std::to_string(m) + " edges, found " + std::to_string(seen_edges));
    return g;
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

inline std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

inline std::string to_dot(const Graph& g, std::string_view name = "G",
                          const std::vector<std::string>& labels = {}) {
    std::string out = "graph " + std::string(name) + " {\n";
    for (int v = 0; v < g.order(); ++v) {
        std::string label = labels.empty() ? std::to_string(v) : labels[v];
        out += "  " + std::to_string(v) + " [label=\"" + label + "\"];\n";
    }
    for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

// FNV-1a over the serialized edge list, as 16 hex digits.
inline std::string edge_list_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : serialize_graph(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 0xF];
    return s;
}

} // namespace ggk
