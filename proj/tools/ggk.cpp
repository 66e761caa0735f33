#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ggk/ggk.hpp>

namespace {

// Exit codes: 0 ok, 1 verify found violations, 2 bad input or usage,
// 3 inverse refused (tree contains H).
constexpr int exit_violations = 1;
constexpr int exit_input = 2;
constexpr int exit_refused = 3;

ggk::Graph load(const std::string& path) {
    if (path == "-") {
        std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
        return ggk::parse_graph(text);
    }
    return ggk::read_graph_file(path);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ggk::error("cannot write " + path);
    out << text;
}

int cmd_gamma(const std::string& file, int root, const std::string& algorithm, const std::string& dot) {
    ggk::Graph g = load(file);
    ggk::GammaGraph gg;
    if (algorithm == "oracle") {
        gg = ggk::gamma_graph_oracle(g);
    } else if (algorithm == "gammatree") {
        gg = ggk::gammatree(ggk::bfs_root(g, root));
    } else if (algorithm.rfind("forbidden:", 0) == 0) {
        int x = 0;
        try {
            x = std::stoi(algorithm.substr(10));
        } catch (const std::exception&) {
            throw ggk::precondition_error("bad forbidden vertex in '" + algorithm + "'");
        }
        gg = ggk::gamma_via_forbidden_vertex(g, x);
    } else {
        throw ggk::precondition_error("unknown algorithm '" + algorithm + "'");
    }
    std::cout << ggk::serialize_gamma_graph(gg);
    if (!dot.empty()) {
        std::vector<std::string> labels;
        for (const auto& s : gg.sets) labels.push_back(s.to_string());
        write_file(dot, ggk::to_dot(gg.graph(), "gamma", labels));
    }
    return 0;
}

int cmd_highest(const std::string& file, int root) {
    ggk::Graph g = load(file);
    std::cout << ggk::highest_gamma_set(ggk::bfs_root(g, root)).to_string() << '\n';
    return 0;
}

int cmd_inverse(const std::string& file) {
    ggk::Graph g = load(file);
    ggk::RealizationWitness w;
    try {
        w = ggk::construct_inverse(g);
    } catch (const ggk::not_realizable_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        std::cout << "refused H " << e.edge().u << ' ' << e.edge().v << '\n';
        return exit_refused;
    }
    ggk::GammaGraph gg = ggk::gammatree(ggk::bfs_root(w.witness, 0));
    auto ids = gg.id_map();
    std::cout << "target\n" << ggk::serialize_graph(w.target);
    std::cout << "witness\n" << ggk::serialize_graph(w.witness);
    std::cout << "correspondence " << gg.order() << '\n';
    for (const auto& [set, v] : w.correspondence())
        std::cout << ids.at(set) << ' ' << set.to_string() << " -> " << v << '\n';
    return 0;
}

int cmd_verify(const ggk::VerifyConfig& cfg) {
    ggk::VerifyReport rep = ggk::run_verify(cfg);
    const std::string text = rep.text();
    std::cout << text;
    if (!cfg.output.empty()) write_file(cfg.output, text);
    return rep.ok() ? 0 : exit_violations;
}

int cmd_factorize(const std::string& file) {
    ggk::Graph g = load(file);
    ggk::CartesianFactorization f = ggk::factorize_cartesian(g);
    std::cout << "factors " << f.factors.size() << (f.is_product() ? "" : " prime") << '\n';
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        std::cout << "factor " << i << '\n' << ggk::serialize_graph(f.factors[i]);
    std::cout << "coordinates\n";
    for (int v = 0; v < g.order(); ++v) {
        std::cout << v << " ->";
        for (int c : f.coordinates[v]) std::cout << ' ' << c;
        std::cout << '\n';
    }
    return 0;
}

int cmd_fixture(const std::string& kind, const std::vector<int>& params) {
    std::cout << ggk::serialize_graph(ggk::make_fixture({kind, params}));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"γ-graphs of trees: compute, construct and verify"};
    app.require_subcommand(1);

    std::string file = "-";
    int root = 0;
    std::string algorithm = "gammatree", dot;
    auto* gamma = app.add_subcommand("gamma", "Print the γ-graph of a graph file");
    gamma->add_option("file", file, "Edge-list file ('-' for stdin)")->required();
    gamma->add_option("-r,--root", root, "Root for gammatree");
    gamma->add_option("-a,--algorithm", algorithm, "gammatree | oracle | forbidden:<x>");
    gamma->add_option("--dot", dot, "Also write the γ-graph as DOT to this path");

    auto* highest = app.add_subcommand("highest", "Print the highest γ-set of a rooted tree");
    highest->add_option("file", file, "Edge-list file ('-' for stdin)")->required();
    highest->add_option("-r,--root", root, "Root vertex");

    auto* inverse = app.add_subcommand("inverse", "Build a tree whose γ-graph is the given tree");
    inverse->add_option("file", file, "Edge-list file ('-' for stdin)")->required();

    ggk::VerifyConfig cfg;
    std::string checks;
    bool list_checks = false;
    auto* verify = app.add_subcommand("verify", "Check the structural theorems over all small trees");
    verify->add_option("-n,--max-n", cfg.max_n, "Largest tree order (cap 14, GGK_MAX_N lifts it)");
    verify->add_option("-c,--checks", checks, "Comma-separated check ids (default: all)");
    verify->add_option("-j,--jobs", cfg.parallelism, "Worker threads");
    verify->add_option("-o,--output", cfg.output, "Also write the report to this path");
    verify->add_flag("--list", list_checks, "List the registered checks and exit");
    verify->add_flag("--inject-violation", cfg.inject_violation, "Harness self-test")->group("");

    auto* factorize = app.add_subcommand("factorize", "Cartesian prime factorization of a connected graph");
    factorize->add_option("file", file, "Edge-list file ('-' for stdin)")->required();

    std::string kind;
    std::vector<int> params;
    auto* fixture = app.add_subcommand("fixture", "Print a named graph as an edge list");
    fixture->add_option("kind", kind, "path, star, complete_bipartite, stepgrid, Y, H, cycle, complete, hypercube")
        ->required();
    fixture->add_option("params", params, "Integer parameters");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gamma) return cmd_gamma(file, root, algorithm, dot);
        if (*highest) return cmd_highest(file, root);
        if (*inverse) return cmd_inverse(file);
        if (*verify) {
            if (list_checks) {
                for (const auto& c : ggk::registered_checks()) std::cout << c.id << "  " << c.description << '\n';
                return 0;
            }
            std::stringstream ss(checks);
            for (std::string id; std::getline(ss, id, ',');)
                if (!id.empty()) cfg.checks.push_back(id);
            return cmd_verify(cfg);
        }
        if (*factorize) return cmd_factorize(file);
        if (*fixture) return cmd_fixture(kind, params);
    } catch (const ggk::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return 0;
}
