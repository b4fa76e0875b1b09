#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "invgraph/cli.hpp"
#include "invgraph/fulvene.hpp"
#include "invgraph/io.hpp"

#include "helpers.hpp"

using namespace invgraph;
using namespace test_helpers;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<std::string> args) {
    std::vector<std::string> argv_store = {"invgraph"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code =
        cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("invgraph_test_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::filesystem::path path() const { return path_; }

private:
    std::filesystem::path path_;
};

std::string write_graph(const TempDir& dir, const std::string& name, const Graph& g) {
    const auto p = dir.path() / name;
    std::ofstream f(p);
    f << graph_to_json(g).dump();
    return p.string();
}

// structural re-parse of DOT output: collects the vertex set and edge
// multiset back into a graph
Graph parse_dot(const std::string& dot) {
    std::istringstream in(dot);
    std::string line;
    std::size_t n = 0;
    std::vector<std::array<long long, 2>> edges;
    while (std::getline(in, line)) {
        const auto dash = line.find("--");
        if (dash != std::string::npos) {
            long long u = std::stoll(line.substr(0, dash));
            long long v = std::stoll(line.substr(dash + 2));
            edges.push_back({u, v});
        } else {
            std::istringstream ls(line);
            long long v;
            if (ls >> v) n = std::max<std::size_t>(n, static_cast<std::size_t>(v));
        }
    }
    IntMatrix adj(n, n);
    for (auto [u, v] : edges) {
        if (u == v) {
            adj(u - 1, u - 1) += 1;
        } else {
            adj(u - 1, v - 1) += 1;
            adj(v - 1, u - 1) += 1;
        }
    }
    return Graph::from_adjacency(adj);
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("json and edge-list graph round trips") {
    const Graph f0 = fulvene_base();
    CHECK(graph_from_json(graph_to_json(f0)) == f0);

    std::istringstream edges(to_edge_list(f0));
    CHECK(parse_edge_list(edges) == f0);

    // multigraph with a loop (an inverse graph) survives json
    const auto inv = inverse_graph(f0).inverse;
    CHECK(graph_from_json(graph_to_json(inv)) == inv);

    std::istringstream bad("2\n1 3\n");
    CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
}

TEST_CASE("classify subcommand reports the fulvene class and signature") {
    TempDir dir;
    const auto path = write_graph(dir, "f0.json", fulvene_base());
    const CliResult res = run_cli({"classify", path});
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["schema"] == 1);
    CHECK(j["class"] == "negative");
    // deterministic normalization: first constraint vertex positive; the
    // published diag(-1,-1,1,1,1,-1) is the global negation of this
    CHECK(j["signature"] == nlohmann::json::array({1, 1, -1, -1, -1, 1}));
}

TEST_CASE("spectrum subcommand respects precision") {
    TempDir dir;
    const auto path = write_graph(dir, "f0.json", fulvene_base());
    const CliResult res = run_cli({"--precision", "3", "spectrum", path});
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["eigenvalues"].size() == 6);
    CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(-1.861));
}

TEST_CASE("bound subcommand reproduces the published figures") {
    TempDir dir;
    const auto left = write_graph(dir, "ga.json", example_ga());
    const auto right = write_graph(dir, "gb.json", example_gb());
    const CliResult res =
        run_cli({"bound", "--left", left, "--right", right, "--pairs", "3:1,4:2"});
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["lambda_lb"].get<double>() == doctest::Approx(0.1408));
    CHECK(j["lambda_min_pos"].get<double>() == doctest::Approx(0.2163));
}

TEST_CASE("bridge subcommand emits the report") {
    TempDir dir;
    const auto left = write_graph(dir, "ga.json", example_ga());
    const auto right = write_graph(dir, "gb.json", example_gb());
    const CliResult res =
        run_cli({"bridge", "--left", left, "--right", right, "--pairs", "3:1,4:2"});
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["report"]["condition"] == "pr-zero");
    CHECK(j["report"]["integrally_invertible"] == true);
    CHECK(j["report"]["sign_preserved"] == "positive");
    CHECK(j["bridged"]["n"] == 8);
}

TEST_CASE("census subcommand emits per-size records") {
    const CliResult res = run_cli({"census", "--m", "4"});
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["records"].size() == 2);
}

TEST_CASE("census tsv and output directory") {
    TempDir dir;
    const auto out_dir = (dir.path() / "census").string();
    const CliResult res =
        run_cli({"census", "--m", "4", "--format", "tsv", "--out", out_dir});
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("label\tclass\tspectrum") == 0);
    CHECK(res.out.find("Q_1") != std::string::npos);
    CHECK(std::filesystem::exists(std::filesystem::path(out_dir) / "table1.tsv"));
    CHECK(std::filesystem::exists(std::filesystem::path(out_dir) / "table2.json"));
    CHECK(std::filesystem::exists(std::filesystem::path(out_dir) / "Q_1.json"));
    CHECK(std::filesystem::exists(std::filesystem::path(out_dir) / "Q_2.json"));
}

TEST_CASE("fulvene subcommand with verification") {
    const CliResult res = run_cli({"fulvene", "--n", "1", "--verify"});
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["graph"]["n"] == 12);
    CHECK(j["report"]["all_ok"] == true);
}

TEST_CASE("fulvene --dot emits the family graph as DOT") {
    const CliResult res = run_cli({"fulvene", "--n", "1", "--dot"});
    REQUIRE(res.exit_code == 0);
    CHECK(parse_dot(res.out) == fulvene_family(1).graph);
}

TEST_CASE("export-dot round trips structurally") {
    TempDir dir;
    const Graph f0 = fulvene_base();
    const auto path = write_graph(dir, "f0.json", f0);
    const CliResult res = run_cli({"export-dot", path});
    REQUIRE(res.exit_code == 0);
    CHECK(parse_dot(res.out) == f0);

    // multiplicity units appear as repeated edge lines
    const Graph multi = Graph::from_edges(2, {{1, 2, 3}});
    const auto mpath = write_graph(dir, "multi.json", multi);
    const CliResult mres = run_cli({"export-dot", mpath});
    CHECK(parse_dot(mres.out) == multi);
}

TEST_CASE("exit codes distinguish usage and domain errors") {
    CHECK(run_cli({"no-such-command"}).exit_code == 2);
    CHECK(run_cli({"classify"}).exit_code == 2); // missing argument

    TempDir dir;
    // singular graph: classify is fine (reports singular), invert fails
    const Graph c4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    const auto path = write_graph(dir, "c4.json", c4);
    CHECK(run_cli({"classify", path}).exit_code == 0);
    const CliResult inv = run_cli({"invert", path});
    CHECK(inv.exit_code == 1);
    CHECK(inv.err.find("error") != std::string::npos);

    CHECK(run_cli({"classify", (dir.path() / "missing.json").string()}).exit_code == 1);
}

TEST_CASE("edge-list input files are accepted everywhere") {
    TempDir dir;
    const auto path = dir.path() / "f0.txt";
    {
        std::ofstream f(path);
        f << to_edge_list(fulvene_base());
    }
    const CliResult res = run_cli({"classify", path.string()});
    REQUIRE(res.exit_code == 0);
    CHECK(nlohmann::json::parse(res.out)["class"] == "negative");
}

TEST_CASE("a classified inverse graph round-trips through the cli") {
    TempDir dir;
    const auto inv = inverse_graph(fulvene_base()).inverse; // carries a loop
    const auto path = write_graph(dir, "inv.json", inv);
    const CliResult res = run_cli({"classify", path});
    REQUIRE(res.exit_code == 0);
    // the inverse of a negatively invertible graph is negatively invertible
    CHECK(nlohmann::json::parse(res.out)["class"] == "negative");
}

TEST_CASE("invert subcommand emits the inverse graph") {
    TempDir dir;
    const auto path = write_graph(dir, "f0.json", fulvene_base());
    const CliResult res = run_cli({"invert", path});
    REQUIRE(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["sign"] == "negative");
    const Graph inv = graph_from_json(j["inverse"]);
    CHECK(inv == inverse_graph(fulvene_base()).inverse);
}

TEST_SUITE_END();
