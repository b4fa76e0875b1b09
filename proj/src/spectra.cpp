#include "invgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace invgraph {

RealMatrix to_real(const IntMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).convert_to<double>();
    return out;
}

RealMatrix to_real(const RatMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).convert_to<double>();
    return out;
}

RealMatrix adjacency_real(const Graph& g) { return to_real(g.adjacency()); }

namespace {

double off_diagonal_norm(const RealMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

void require_symmetric(const RealMatrix& m, double tol) {
    if (!m.is_square())
        throw NotSymmetric("eigenvalues_symmetric: matrix not square");
    double scale = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            scale = std::max(scale, std::fabs(m(i, j)));
    const double bound = std::max(tol, 1e-12) * std::max(1.0, scale);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (std::fabs(m(i, j) - m(j, i)) > bound)
                throw NotSymmetric("eigenvalues_symmetric: matrix not symmetric");
}

constexpr int kMaxSweeps = 100;

} // namespace

EigenDecomposition eigen_symmetric(const RealMatrix& m, double tol) {
    require_symmetric(m, tol);
    const std::size_t n = m.rows();
    RealMatrix a = m;
    RealMatrix v = RealMatrix::identity(n);

    int sweep = 0;
    while (off_diagonal_norm(a) > tol) {
        if (++sweep > kMaxSweeps)
            throw NoConvergence("eigen_symmetric: no convergence after max sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t idx : order) {
        out.values.push_back(a(idx, idx));
        std::vector<double> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = v(r, idx);
        out.vectors.push_back(std::move(col));
    }
    return out;
}

Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol) {
    EigenDecomposition d = eigen_symmetric(m, tol);
    return Spectrum{std::move(d.values), tol};
}

Spectrum spectrum_of(const Graph& g, double tol) {
    return eigenvalues_symmetric(adjacency_real(g), tol);
}

double lambda_min_pos(const Graph& g) {
    constexpr double kPositivityThreshold = 1e-9;
    const Spectrum s = spectrum_of(g);
    for (double ev : s.eigenvalues)
        if (ev > kPositivityThreshold) return ev;
    throw NoPositiveEigenvalue("lambda_min_pos: no eigenvalue above threshold");
}

double lemma_lambda_star_from_mu(double mu_star, double alpha, double beta) {
    if (alpha <= 0.0 || beta <= 0.0)
        throw NonPositiveCoefficients("lemma_lambda_star: alpha, beta must be positive");
    if (mu_star < 0.0) mu_star = 0.0; // Gram matrices are PSD; guard float noise
    const double s = alpha * mu_star + alpha + beta;
    return (s + std::sqrt(s * s - 4.0 * alpha * beta)) / 2.0;
}

double lemma_lambda_star(const RealMatrix& d, double alpha, double beta) {
    if (alpha <= 0.0 || beta <= 0.0)
        throw NonPositiveCoefficients("lemma_lambda_star: alpha, beta must be positive");
    const RealMatrix gram = d.transpose() * d;
    const Spectrum s = eigenvalues_symmetric(gram);
    const double mu = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.back();
    return lemma_lambda_star_from_mu(mu, alpha, beta);
}

double lower_bound_bridged(const Graph& ga, const Graph& gb, const BridgeSpec& spec) {
    const std::size_t n = ga.vertex_count();
    const std::size_t m = gb.vertex_count();
    const IntMatrix h = coupling_matrix(n, m, spec);

    if (det(ga.adjacency()) == 0)
        throw std::invalid_argument("lower_bound_bridged: G_A adjacency singular");
    auto b_inv = inverse_exact(to_rational(gb.adjacency()));
    if (!b_inv) throw std::invalid_argument("lower_bound_bridged: G_B adjacency singular");
    for (const auto& [a, b] : spec.pairs)
        for (const auto& [a2, b2] : spec.pairs)
            if ((*b_inv)(b - 1, b2 - 1) != 0)
                throw NotArbitrarilyBridgeable(
                    "lower_bound_bridged: R != 0 on the bridged G_B vertices");

    const double alpha = 1.0 / lambda_min_pos(ga);
    const double beta = 1.0 / lambda_min_pos(gb);
    const RealMatrix d = to_real(h) * to_real(*b_inv);
    return 1.0 / lemma_lambda_star(d, alpha, beta);
}

} // namespace invgraph
