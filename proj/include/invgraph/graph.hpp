#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invgraph/matrix.hpp"

namespace invgraph {

struct Edge {
    std::size_t u = 0; // 1-based endpoints
    std::size_t v = 0;
    Int mult = 1;
};

// Undirected multigraph stored as a symmetric nonnegative adjacency
// matrix. Vertices are addressed 1-based everywhere in the public API,
// matching the labels used in reports and file formats.
//
// from_edges builds ordinary loop-free multigraphs. Inverse graphs can
// carry diagonal entries (a nonzero (v,v) entry of the signed inverse
// becomes a loop of that multiplicity); those are only constructible
// through from_adjacency.
class Graph {
public:
    explicit Graph(std::size_t n) : adj_(n, n) {}

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);
    static Graph from_adjacency(IntMatrix a);

    std::size_t vertex_count() const { return adj_.rows(); }
    const IntMatrix& adjacency() const { return adj_; }

    // 1-based endpoints.
    const Int& multiplicity(std::size_t u, std::size_t v) const {
        return adj_.at(u - 1, v - 1);
    }

    // Edge multiplicities count toward the degree; a loop counts twice.
    Int degree(std::size_t u) const;

    bool has_loops() const;

    // Ordered (u <= v) edge list with multiplicities, 1-based.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    Graph() = default;
    IntMatrix adj_;
};

bool is_connected(const Graph& g);

// Two-coloring witness: colors[i] in {0,1} for vertex i+1. nullopt when
// an odd closed walk (including a loop) exists.
std::optional<std::vector<int>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Exact number of perfect matchings; parallel edges between u,v yield
// multiplicity-many matchings containing {u,v}. Loops never participate.
Int count_one_factors(const Graph& g);

// The perfect matchings themselves, as sorted 1-based vertex pairs.
// Parallel edges are not distinguished here (each vertex-disjoint pair
// set appears once); `count_one_factors` is the multiplicity-aware count.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
list_one_factors(const Graph& g);

// degree -> number of vertices of that degree.
std::map<Int, std::size_t> degree_histogram(const Graph& g);

// Lexicographically minimal row-major upper-triangle (diagonal included)
// encoding over all vertex relabelings. Equal keys <=> isomorphic.
// Exhaustive over n! permutations, so n <= 8.
using CanonicalKey = std::vector<Int>;

CanonicalKey canonical_key(const Graph& g);
std::string canonical_key_string(const CanonicalKey& key);

// All pairwise non-isomorphic connected simple graphs on n vertices
// satisfying `predicate`, ordered by canonical key. Scans all
// 2^(n(n-1)/2) labeled graphs; n <= 8.
std::vector<Graph> enumerate_connected_simple(
    std::size_t n, const std::function<bool(const Graph&)>& predicate,
    unsigned threads = 1);

// True when removing the edge {u,v} disconnects the component containing it.
bool is_cut_edge(const Graph& g, std::size_t u, std::size_t v);

} // namespace invgraph
