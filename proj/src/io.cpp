#include "invgraph/io.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

namespace invgraph {

namespace {

// Shared by the edge-list and JSON readers: builds the adjacency
// directly so loop entries (inverse graphs) survive a round trip.
Graph build_graph(std::size_t n, const std::vector<std::array<long long, 3>>& entries) {
    IntMatrix adj(n, n);
    for (const auto& [u, v, mult] : entries) {
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n ||
            static_cast<std::size_t>(v) > n)
            throw ParseError("graph input: endpoint outside 1..n");
        if (mult < 1) throw ParseError("graph input: multiplicity must be >= 1");
        if (u == v) {
            adj(u - 1, u - 1) += mult;
        } else {
            adj(u - 1, v - 1) += mult;
            adj(v - 1, u - 1) += mult;
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

long long to_edge_count(const Int& value, const char* what) {
    if (value < 0 || value > Int(std::numeric_limits<long long>::max()))
        throw ParseError(std::string(what) + ": multiplicity out of representable range");
    return value.convert_to<long long>();
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    long long n = -1;
    std::vector<std::array<long long, 3>> entries;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0) throw ParseError("edge list: bad vertex count line");
            continue;
        }
        long long u, v, mult = 1;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw ParseError("edge list: edge line needs two endpoints");
        ls >> mult;
        entries.push_back({u, v, mult});
    }
    if (n < 0) throw ParseError("edge list: empty input");
    return build_graph(static_cast<std::size_t>(n), entries);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) {
        os << e.u << " " << e.v;
        if (e.mult != 1) os << " " << e.mult;
        os << "\n";
    }
    return os.str();
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v, to_edge_count(e.mult, "graph_to_json")});
    return nlohmann::json{{"schema", 1}, {"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph json: object with integer \"n\" required");
    const long long n = j["n"].get<long long>();
    if (n < 0) throw ParseError("graph json: negative n");
    std::vector<std::array<long long, 3>> entries;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("graph json: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3)
                throw ParseError("graph json: edge entries are [u, v] or [u, v, mult]");
            const long long mult = e.size() == 3 ? e[2].get<long long>() : 1;
            entries.push_back({e[0].get<long long>(), e[1].get<long long>(), mult});
        }
    }
    return build_graph(static_cast<std::size_t>(n), entries);
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph {\n";
    for (std::size_t v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        const long long mult = to_edge_count(e.mult, "to_dot");
        for (long long rep = 0; rep < mult; ++rep)
            os << "  " << e.u << " -- " << e.v << ";\n";
    }
    os << "}\n";
    return os.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty graph file: " + path);
    if (text[first] == '{') {
        return graph_from_json(nlohmann::json::parse(text));
    }
    std::istringstream stream(text);
    return parse_edge_list(stream);
}

} // namespace invgraph
