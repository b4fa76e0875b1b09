#include "invgraph/fulvene.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace invgraph {

Int fibonacci_f(std::size_t n) {
    if (n == 0) return 0;
    Int a = 2, b = 2; // f_1, f_2
    if (n <= 2) return 2;
    for (std::size_t k = 3; k <= n; ++k) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return b;
}

Graph fulvene_base() {
    return Graph::from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {4, 6}});
}

namespace {

constexpr std::size_t kMaxGeneration = 6;

std::vector<std::size_t> bfs_distances(const IntMatrix& a, std::size_t src) {
    const std::size_t n = a.rows();
    constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(n, kUnreached);
    dist[src] = 0;
    std::vector<std::size_t> queue = {src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        for (std::size_t v = 0; v < n; ++v) {
            if (a(u, v) != 0 && dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

struct Builder {
    IntMatrix adj{0, 0};
    // 0-based offset of each F_0 copy and the step it is counted in.
    std::vector<std::pair<std::size_t, std::size_t>> copies;

    // Appends a fresh F_0 block and returns its 0-based offset.
    std::size_t add_copy() {
        const std::size_t n = adj.rows();
        IntMatrix grown(n + 6, n + 6);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) grown(i, j) = adj(i, j);
        const Graph f0 = fulvene_base();
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                grown(n + i, n + j) = f0.adjacency()(i, j);
        adj = std::move(grown);
        return n;
    }

    void link(std::size_t u, std::size_t v) {
        adj(u, v) = 1;
        adj(v, u) = 1;
    }

    std::vector<Int> degrees() const {
        std::vector<Int> deg(adj.rows(), 0);
        for (std::size_t i = 0; i < adj.rows(); ++i)
            for (std::size_t j = 0; j < adj.rows(); ++j) deg[i] += adj(i, j);
        return deg;
    }

    // Nearest vertex of `pool` by (BFS distance from src, vertex index);
    // removes and returns it.
    std::size_t take_nearest(std::vector<std::size_t>& pool, std::size_t src) const {
        const auto dist = bfs_distances(adj, src);
        std::size_t best = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (best == pool.size() || dist[pool[i]] < dist[pool[best]] ||
                (dist[pool[i]] == dist[pool[best]] && pool[i] < pool[best]))
                best = i;
        }
        const std::size_t v = pool[best];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        return v;
    }
};

} // namespace

FulveneGen fulvene_family(std::size_t n) {
    if (n > kMaxGeneration)
        throw GenerationTooLarge("fulvene_family: generation ceiling is 6");

    FulveneGen out;
    out.n = n;
    out.f.resize(std::max<std::size_t>(n, 2) + 1);
    for (std::size_t k = 0; k < out.f.size(); ++k) out.f[k] = fibonacci_f(k);

    Builder b;
    b.add_copy();
    b.copies.push_back({0, 1}); // base copy, counted in step 1
    if (n >= 1) {
        // F_1: one further copy, bridged {1,2} <-> {1,2}.
        const std::size_t off = b.add_copy();
        b.copies.push_back({off, 1});
        b.link(0, off);
        b.link(1, off + 1);
    }

    for (std::size_t step = 2; step <= n; ++step) {
        auto deg = b.degrees();
        // Degree-1 vertices to saturate: vertex 6 of the copies counted
        // two steps earlier.
        std::vector<std::size_t> grow_tips;
        for (const auto& [off, gen] : b.copies)
            if (gen == step - 2 && deg[off + 5] == 1) grow_tips.push_back(off + 5);
        std::sort(grow_tips.begin(), grow_tips.end());

        std::vector<std::size_t> deg2_pool;
        for (std::size_t v = 0; v < deg.size(); ++v)
            if (deg[v] == 2) deg2_pool.push_back(v);

        std::size_t added = 0;
        for (std::size_t tip : grow_tips) {
            for (int copy = 0; copy < 2; ++copy) {
                const std::size_t other = b.take_nearest(deg2_pool, tip);
                const std::size_t off = b.add_copy();
                b.copies.push_back({off, step});
                b.link(tip, off);       // copy vertex 1
                b.link(other, off + 1); // copy vertex 2
                ++added;
            }
        }
        while (!deg2_pool.empty()) {
            const std::size_t u = deg2_pool.front();
            deg2_pool.erase(deg2_pool.begin());
            const std::size_t w = b.take_nearest(deg2_pool, u);
            const std::size_t off = b.add_copy();
            b.copies.push_back({off, step});
            b.link(u, off);
            b.link(w, off + 1);
            ++added;
        }
        if (Int(added) != out.f[step])
            throw std::logic_error("fulvene_family: copy count diverged from f_n at step " +
                                   std::to_string(step));
    }

    out.graph = Graph::from_adjacency(b.adj);

    auto hist = degree_histogram(out.graph);
    out.deg1_count = hist.count(1) ? hist[1] : 0;
    out.deg2_count = hist.count(2) ? hist[2] : 0;
    out.deg3_count = hist.count(3) ? hist[3] : 0;

    // Construction contract: the degree-count identities must hold.
    if (n >= 1) {
        const Int v_total = 6 * std::accumulate(out.f.begin() + 1, out.f.begin() + n + 1, Int(0));
        const bool ok = Int(out.graph.vertex_count()) == v_total &&
                        Int(out.deg1_count) == out.f[n] + out.f[n - 1] &&
                        Int(out.deg2_count) == 2 * out.f[n] &&
                        out.deg1_count + out.deg2_count + out.deg3_count ==
                            out.graph.vertex_count();
        if (!ok)
            throw std::logic_error(
                "fulvene_family: degree-count identities violated at generation " +
                std::to_string(n));
    }
    return out;
}

FamilyCheckReport verify_family(std::size_t n) {
    if (n > 5) throw std::invalid_argument("verify_family: n <= 5");
    FamilyCheckReport report;
    report.ratio_nondecreasing = true;
    report.y_chain_ok = true;

    constexpr double kSlack = 1e-9;
    double prev_ratio = 0.0;
    double prev_y = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        const FulveneGen gen = fulvene_family(k);
        FamilyCheckRow row;
        row.n = k;
        row.vertices = gen.graph.vertex_count();
        row.determinant = det(gen.graph.adjacency());
        row.integrally_invertible = row.determinant == 1 || row.determinant == -1;
        row.deg1 = gen.deg1_count;
        row.deg2 = gen.deg2_count;
        row.deg3 = gen.deg3_count;
        if (k >= 1) {
            row.counts_ok = Int(row.deg1) == gen.f[k] + gen.f[k - 1] &&
                            Int(row.deg2) == 2 * gen.f[k] &&
                            row.deg1 + row.deg2 + row.deg3 == row.vertices;
        } else {
            row.counts_ok = row.deg1 == 1 && row.deg2 == 4 && row.deg3 == 1;
        }
        row.max_degree = 0;
        for (const auto& [deg, cnt] : degree_histogram(gen.graph))
            row.max_degree = std::max(row.max_degree, deg);
        row.lambda_min_pos = lambda_min_pos(gen.graph);
        row.lower_bound =
            (1.0 / kGoldenRatio) * 5.0 / (std::pow(6.0, static_cast<double>(k) + 1.0) - 1.0);
        row.bound_holds = row.lambda_min_pos >= row.lower_bound - kSlack;
        row.deg3_ratio =
            static_cast<double>(row.deg3) / static_cast<double>(row.vertices);

        if (k >= 2 && row.deg3_ratio + kSlack < prev_ratio)
            report.ratio_nondecreasing = false;
        const double y = 1.0 / row.lambda_min_pos;
        if (k >= 1 && y > 6.0 * prev_y + kGoldenRatio + kSlack)
            report.y_chain_ok = false;
        prev_ratio = row.deg3_ratio;
        prev_y = y;
        report.rows.push_back(row);
    }

    report.all_ok = report.ratio_nondecreasing && report.y_chain_ok;
    for (const auto& row : report.rows)
        report.all_ok = report.all_ok && row.integrally_invertible && row.counts_ok &&
                        row.max_degree <= 3 && row.bound_holds;
    return report;
}

} // namespace invgraph
