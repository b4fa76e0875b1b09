#pragma once

#include "invgraph/bridge.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

using RealMatrix = Matrix<double>;

struct Spectrum {
    std::vector<double> eigenvalues; // sorted ascending
    double tol = 0.0;                // solver tolerance used
};

struct EigenDecomposition {
    std::vector<double> values;               // sorted ascending
    std::vector<std::vector<double>> vectors; // vectors[i] pairs with values[i]
};

RealMatrix to_real(const IntMatrix& m);
RealMatrix to_real(const RatMatrix& m);
RealMatrix adjacency_real(const Graph& g);

// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius
// norm drops below tol (at most 100 sweeps, else NoConvergence).
Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol = 1e-12);
EigenDecomposition eigen_symmetric(const RealMatrix& m, double tol = 1e-12);

Spectrum spectrum_of(const Graph& g, double tol = 1e-12);

// Least eigenvalue above the positivity threshold 1e-9 (the adjacency
// matrices handled here are exactly invertible, so true eigenvalues are
// bounded away from zero; the threshold only guards float noise).
double lambda_min_pos(const Graph& g);

// Closed form for the constrained maximum of
//   alpha |x - D y|^2 + beta |y|^2   over  |x|^2 + |y|^2 = 1:
//   (alpha mu* + alpha + beta + sqrt((alpha mu* + alpha + beta)^2
//    - 4 alpha beta)) / 2,  mu* = max sigma(D^T D).
double lemma_lambda_star(const RealMatrix& d, double alpha, double beta);
double lemma_lambda_star_from_mu(double mu_star, double alpha, double beta);

// Lower bound for the least positive eigenvalue of the bridged graph:
// the reciprocal of lemma_lambda_star(H B^{-1}, alpha, beta) with
// alpha = 1/lambda_1^+(G_A), beta = 1/lambda_1^+(G_B). Requires the
// bridged G_B vertices to form an arbitrarily bridgeable subset (R = 0);
// adjacencies must be invertible but not necessarily integrally so.
double lower_bound_bridged(const Graph& ga, const Graph& gb, const BridgeSpec& spec);

} // namespace invgraph
