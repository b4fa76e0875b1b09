#pragma once

#include <random>

#include "invgraph/exact.hpp"
#include "invgraph/graph.hpp"

namespace test_helpers {

using namespace invgraph;

// --- fixture graphs -------------------------------------------------------

// Worked-example pair: two labelings of the path on 4 vertices whose
// printed integer inverses anchor the bridging fixtures.
inline Graph example_ga() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {1, 4}}); }
inline Graph example_gb() { return Graph::from_edges(4, {{1, 3}, {1, 4}, {2, 3}}); }

inline IntMatrix example_a_inv() {
    return IntMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, -1}, {1, 0, -1, 0}};
}

inline IntMatrix example_b_inv() {
    return IntMatrix{{0, 0, 0, 1}, {0, 0, 1, -1}, {0, 1, 0, 0}, {1, -1, 0, 0}};
}

inline IntMatrix example_c_inv() {
    return IntMatrix{{0, 0, 0, 1, 0, 0, -1, 1},
                     {0, 0, 1, 0, 0, 0, 0, -1},
                     {0, 1, 0, -1, 0, 0, 1, -1},
                     {1, 0, -1, 0, 0, 0, 0, 1},
                     {0, 0, 0, 0, 0, 0, 0, 1},
                     {0, 0, 0, 0, 0, 0, 1, -1},
                     {-1, 0, 1, 0, 0, 1, 0, -1},
                     {1, -1, -1, 1, 1, -1, -1, 2}};
}

inline IntMatrix fulvene_b_inv() {
    return IntMatrix{{0, 0, 0, 0, 1, -1},  {0, 0, 1, 0, 0, -1}, {0, 1, 0, 0, -1, 1},
                     {0, 0, 0, 0, 0, 1},   {1, 0, -1, 0, 0, 1}, {-1, -1, 1, 1, 1, -2}};
}

// --- independent oracles ---------------------------------------------------

// Cofactor-expansion determinant; deliberately naive and separate from
// the Bareiss path it checks.
inline Int det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const Int term = m(0, j) * det_cofactor(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// --- random generators ------------------------------------------------------

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

// Symmetric integer matrix with determinant +-1: a random signed
// identity transformed by random elementary congruences E M E^T.
inline IntMatrix random_unimodular_symmetric(std::mt19937_64& rng, std::size_t n,
                                             int ops = 12) {
    std::uniform_int_distribution<int> sign(0, 1);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = sign(rng) ? 1 : -1;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < ops; ++t) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j) continue;
        const Int c = coeff(rng);
        for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k); // row op
        for (std::size_t k = 0; k < n; ++k) m(k, i) += c * m(k, j); // matching col op
    }
    return m;
}

// Unimodular (det +-1), not necessarily symmetric.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12) {
    std::uniform_int_distribution<int> sign(0, 1);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = sign(rng) ? 1 : -1;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int t = 0; t < ops; ++t) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i == j) continue;
        const Int c = coeff(rng);
        for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
    }
    return m;
}

// Symmetric +-1-determinant matrix whose LAST `zero_block` vertices carry
// an all-zero principal block of the inverse: B = [[0, K], [K^T, L]] has
// B^{-1} = [[-K^{-T} L K^{-1}, K^{-T}], [K^{-1}, 0]].
inline IntMatrix random_symmetric_with_zero_inverse_block(std::mt19937_64& rng,
                                                          std::size_t half) {
    const IntMatrix k = random_unimodular(rng, half);
    IntMatrix l = random_int_matrix(rng, half, -2, 2);
    for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = i + 1; j < half; ++j) l(j, i) = l(i, j);
    IntMatrix b(2 * half, 2 * half);
    for (std::size_t i = 0; i < half; ++i)
        for (std::size_t j = 0; j < half; ++j) {
            b(i, half + j) = k(i, j);
            b(half + j, i) = k(i, j);
            b(i, j) = 0;
            b(half + i, half + j) = l(i, j);
        }
    return b;
}

} // namespace test_helpers
