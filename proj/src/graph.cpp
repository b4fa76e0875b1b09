#include "invgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace invgraph {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw IndexOutOfRange("from_edges: endpoint outside 1..n");
        if (e.u == e.v)
            throw LoopRejected("from_edges: loops are not accepted");
        if (e.mult < 1)
            throw std::invalid_argument("from_edges: multiplicity must be >= 1");
        g.adj_(e.u - 1, e.v - 1) += e.mult;
        g.adj_(e.v - 1, e.u - 1) += e.mult;
    }
    return g;
}

Graph Graph::from_adjacency(IntMatrix a) {
    if (!a.is_square()) throw std::invalid_argument("from_adjacency: matrix not square");
    if (!a.is_symmetric()) throw NotSymmetric("from_adjacency: matrix not symmetric");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) < 0)
                throw std::invalid_argument("from_adjacency: negative entry");
    Graph g;
    g.adj_ = std::move(a);
    return g;
}

Int Graph::degree(std::size_t u) const {
    const std::size_t i = u - 1;
    if (i >= vertex_count()) throw IndexOutOfRange("degree");
    Int d = 0;
    for (std::size_t j = 0; j < vertex_count(); ++j) d += adj_(i, j);
    return d + adj_(i, i); // loop counts twice
}

bool Graph::has_loops() const {
    for (std::size_t i = 0; i < vertex_count(); ++i)
        if (adj_(i, i) != 0) return true;
    return false;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertex_count(); ++i)
        for (std::size_t j = i; j < vertex_count(); ++j)
            if (adj_(i, j) != 0) out.push_back({i + 1, j + 1, adj_(i, j)});
    return out;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    std::size_t visited = 1;
    const IntMatrix& a = g.adjacency();
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && a(u, v) != 0) {
                seen[v] = true;
                ++visited;
                stack.push_back(v);
            }
        }
    }
    return visited == n;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const IntMatrix& a = g.adjacency();
    for (std::size_t i = 0; i < n; ++i)
        if (a(i, i) != 0) return std::nullopt;

    std::vector<int> color(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<std::size_t> queue = {start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v = 0; v < n; ++v) {
                if (a(u, v) == 0) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

Int count_one_factors_rec(const IntMatrix& a, std::vector<bool>& used, std::size_t from) {
    const std::size_t n = a.rows();
    std::size_t u = from;
    while (u < n && used[u]) ++u;
    if (u == n) return 1;
    used[u] = true;
    Int total = 0;
    for (std::size_t v = u + 1; v < n; ++v) {
        if (used[v] || a(u, v) == 0) continue;
        used[v] = true;
        total += a(u, v) * count_one_factors_rec(a, used, u + 1);
        used[v] = false;
    }
    used[u] = false;
    return total;
}

void list_one_factors_rec(const IntMatrix& a, std::vector<bool>& used,
                          std::vector<std::pair<std::size_t, std::size_t>>& current,
                          std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
    const std::size_t n = a.rows();
    std::size_t u = 0;
    while (u < n && used[u]) ++u;
    if (u == n) {
        out.push_back(current);
        return;
    }
    used[u] = true;
    for (std::size_t v = u + 1; v < n; ++v) {
        if (used[v] || a(u, v) == 0) continue;
        used[v] = true;
        current.push_back({u + 1, v + 1});
        list_one_factors_rec(a, used, current, out);
        current.pop_back();
        used[v] = false;
    }
    used[u] = false;
}

} // namespace

Int count_one_factors(const Graph& g) {
    if (g.vertex_count() % 2 != 0) return 0;
    std::vector<bool> used(g.vertex_count(), false);
    return count_one_factors_rec(g.adjacency(), used, 0);
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
list_one_factors(const Graph& g) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
    if (g.vertex_count() % 2 != 0) return out;
    std::vector<bool> used(g.vertex_count(), false);
    std::vector<std::pair<std::size_t, std::size_t>> current;
    list_one_factors_rec(g.adjacency(), used, current, out);
    return out;
}

std::map<Int, std::size_t> degree_histogram(const Graph& g) {
    std::map<Int, std::size_t> hist;
    for (std::size_t u = 1; u <= g.vertex_count(); ++u) ++hist[g.degree(u)];
    return hist;
}

CanonicalKey canonical_key(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 8) throw TooLarge("canonical_key: exhaustive canonicalization needs n <= 8");
    const IntMatrix& a = g.adjacency();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CanonicalKey best;
    CanonicalKey cur;
    cur.reserve(n * (n + 1) / 2);
    do {
        cur.clear();
        bool worse = false;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n && !worse; ++i) {
            for (std::size_t j = i; j < n; ++j, ++pos) {
                const Int& v = a(perm[i], perm[j]);
                if (!best.empty()) {
                    if (v > best[pos]) { worse = true; break; }
                    if (v < best[pos]) {
                        // strictly better so far: complete the key
                        cur.push_back(v);
                        for (std::size_t jj = j + 1; jj < n; ++jj)
                            cur.push_back(a(perm[i], perm[jj]));
                        for (std::size_t ii = i + 1; ii < n; ++ii)
                            for (std::size_t jj = ii; jj < n; ++jj)
                                cur.push_back(a(perm[ii], perm[jj]));
                        best = cur;
                        worse = true; // leave the scanning loops
                        break;
                    }
                }
                cur.push_back(v);
            }
        }
        if (best.empty()) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string canonical_key_string(const CanonicalKey& key) {
    std::ostringstream os;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) os << '.';
        os << key[i];
    }
    return os.str();
}

namespace {

Graph graph_from_mask(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                      std::uint64_t mask) {
    IntMatrix a(n, n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask >> b & 1) {
            a(pairs[b].first, pairs[b].second) = 1;
            a(pairs[b].second, pairs[b].first) = 1;
        }
    }
    return Graph::from_adjacency(std::move(a));
}

} // namespace

std::vector<Graph> enumerate_connected_simple(
    std::size_t n, const std::function<bool(const Graph&)>& predicate,
    unsigned threads) {
    if (n > 8) throw TooLarge("enumerate_connected_simple: n <= 8");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    const std::uint64_t total = std::uint64_t(1) << pairs.size();

    auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::map<CanonicalKey, Graph>& found) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = graph_from_mask(n, pairs, mask);
            if (!is_connected(g)) continue;
            if (!predicate(g)) continue;
            CanonicalKey key = canonical_key(g);
            found.emplace(std::move(key), std::move(g));
        }
    };

    std::map<CanonicalKey, Graph> merged;
    if (threads <= 1 || total < 1024) {
        scan(0, total, merged);
    } else {
        const unsigned t = std::min<std::uint64_t>(threads, total);
        std::vector<std::map<CanonicalKey, Graph>> parts(t);
        std::vector<std::thread> workers;
        for (unsigned i = 0; i < t; ++i) {
            const std::uint64_t lo = total / t * i;
            const std::uint64_t hi = (i + 1 == t) ? total : total / t * (i + 1);
            workers.emplace_back([&, lo, hi, i] { scan(lo, hi, parts[i]); });
        }
        for (auto& w : workers) w.join();
        for (auto& part : parts)
            for (auto& [key, g] : part) merged.emplace(std::move(key), std::move(g));
    }

    std::vector<Graph> out;
    out.reserve(merged.size());
    for (auto& [key, g] : merged) out.push_back(std::move(g));
    return out;
}

bool is_cut_edge(const Graph& g, std::size_t u, std::size_t v) {
    const std::size_t n = g.vertex_count();
    if (u < 1 || u > n || v < 1 || v > n || u == v)
        throw std::invalid_argument("is_cut_edge: bad endpoints");
    if (g.multiplicity(u, v) == 0)
        throw std::invalid_argument("is_cut_edge: no such edge");
    if (g.multiplicity(u, v) > 1) return false;

    // BFS from u with the edge removed; cut iff v becomes unreachable.
    const IntMatrix& a = g.adjacency();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack = {u - 1};
    seen[u - 1] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < n; ++y) {
            if (seen[y] || a(x, y) == 0) continue;
            if ((x == u - 1 && y == v - 1) || (x == v - 1 && y == u - 1)) continue;
            seen[y] = true;
            stack.push_back(y);
        }
    }
    return !seen[v - 1];
}

} // namespace invgraph
