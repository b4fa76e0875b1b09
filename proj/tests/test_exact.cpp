#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace invgraph;
using namespace test_helpers;

TEST_SUITE_BEGIN("exact");

TEST_CASE("determinant of small fixtures") {
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1); // K_2
    CHECK(det(IntMatrix(3, 3)) == 0);            // all zeros
    CHECK(det(IntMatrix{{5}}) == 5);
    CHECK(det(IntMatrix(0, 0)) == 1);

    const Graph f0 = Graph::from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {4, 6}});
    const Int d = det(f0.adjacency());
    CHECK((d == 1 || d == -1));
}

TEST_CASE("bareiss equals cofactor expansion on random matrices") {
    std::mt19937_64 rng(20240301);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = random_int_matrix(rng, n, -3, 3);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("inverse of identity is identity") {
    auto inv = inverse_exact(IntMatrix::identity(4));
    REQUIRE(inv.has_value());
    CHECK(inv->is_integral);
    CHECK(to_integral(inv->inverse) == IntMatrix::identity(4));
}

TEST_CASE("inverse of the worked-example path graph matches the printed matrix") {
    auto inv = inverse_exact(example_ga().adjacency());
    REQUIRE(inv.has_value());
    CHECK(inv->is_integral);
    CHECK(to_integral(inv->inverse) == example_a_inv());

    auto inv_b = inverse_exact(example_gb().adjacency());
    REQUIRE(inv_b.has_value());
    CHECK(to_integral(inv_b->inverse) == example_b_inv());
}

TEST_CASE("inverse of the fulvene base graph matches the printed matrix") {
    const Graph f0 = Graph::from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {4, 6}});
    auto inv = inverse_exact(f0.adjacency());
    REQUIRE(inv.has_value());
    CHECK(inv->is_integral);
    CHECK(to_integral(inv->inverse) == fulvene_b_inv());
    // last row as printed
    for (std::size_t j = 0; j < 6; ++j)
        CHECK(to_integral(inv->inverse)(5, j) ==
              std::vector<Int>{-1, -1, 1, 1, 1, -2}[j]);
}

TEST_CASE("singular matrices report no inverse") {
    CHECK_FALSE(inverse_exact(IntMatrix(3, 3)).has_value());
    CHECK_FALSE(inverse_exact(IntMatrix{{1, 1}, {1, 1}}).has_value());
}

TEST_CASE("product with the exact inverse is the identity") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 30) {
        const std::size_t n = 2 + checked % 4;
        const IntMatrix m = random_int_matrix(rng, n, -3, 3);
        auto inv = inverse_exact(m);
        if (!inv) continue;
        ++checked;
        CHECK(to_rational(m) * inv->inverse == RatMatrix::identity(n));
    }
}

TEST_CASE("integral inverse iff determinant is +-1") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const IntMatrix m = trial % 2 ? random_unimodular_symmetric(rng, n)
                                      : random_int_matrix(rng, n, -3, 3);
        const Int d = det(m);
        auto inv = inverse_exact(m);
        if (d == 0) {
            CHECK_FALSE(inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK(inv->is_integral == (d == 1 || d == -1));
        }
    }
}

TEST_CASE("submatrix extracts the principal blocks of the worked example") {
    const std::vector<std::size_t> first2 = {0, 1};
    CHECK(example_b_inv().submatrix(first2, first2) == IntMatrix(2, 2));

    // P and R blocks of the double-bridging example
    const IntMatrix p{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    const IntMatrix r{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    CHECK((p * r).is_zero());
    CHECK_FALSE(p.is_zero());
    CHECK_FALSE(r.is_zero());
}

TEST_CASE("submatrix preserves the order of the index lists") {
    const IntMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    const std::vector<std::size_t> rows = {2, 0};
    const std::vector<std::size_t> cols = {1, 2};
    CHECK(m.submatrix(rows, cols) == IntMatrix{{8, 9}, {2, 3}});
}

TEST_CASE("identity times a matrix is the matrix") {
    std::mt19937_64 rng(5);
    const IntMatrix m = random_int_matrix(rng, 4, -3, 3);
    CHECK(IntMatrix::identity(4) * m == m);
    CHECK(m * IntMatrix::identity(4) == m);
}

TEST_CASE("schur assembly with no bridges is block diagonal") {
    const IntMatrix a_inv = example_a_inv();
    const IntMatrix b_inv = example_b_inv();
    auto c_inv = schur_block_inverse(a_inv, b_inv, IntMatrix(4, 4));
    REQUIRE(c_inv.has_value());
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const Rat expected = i < 4 && j < 4   ? Rat(a_inv(i, j))
                                 : i >= 4 && j >= 4 ? Rat(b_inv(i - 4, j - 4))
                                                    : Rat(0);
            CHECK((*c_inv)(i, j) == expected);
        }
}

TEST_CASE("schur assembly reproduces the printed 8x8 inverse") {
    IntMatrix h(4, 4);
    h(2, 0) = 1; // 3 <-> 1'
    h(3, 1) = 1; // 4 <-> 2'
    auto c_inv = schur_block_inverse(example_a_inv(), example_b_inv(), h);
    REQUIRE(c_inv.has_value());
    CHECK(is_integral(*c_inv));
    CHECK(to_integral(*c_inv) == example_c_inv());
}

TEST_CASE("schur assembly equals direct inversion on random R=0 bridgings") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t na = 2 + trial % 3;          // left block size
        const std::size_t half = 1 + trial % 3;        // right block is 2*half
        const IntMatrix a = random_unimodular_symmetric(rng, na);
        const IntMatrix b = random_symmetric_with_zero_inverse_block(rng, half);
        const std::size_t nb = 2 * half;

        const std::size_t k = 1 + trial % std::min(na, half);
        std::vector<std::size_t> a_verts(na), b_verts(half);
        for (std::size_t i = 0; i < na; ++i) a_verts[i] = i;
        for (std::size_t i = 0; i < half; ++i) b_verts[i] = half + i; // zero block
        std::shuffle(a_verts.begin(), a_verts.end(), rng);
        std::shuffle(b_verts.begin(), b_verts.end(), rng);

        IntMatrix h(na, nb);
        for (std::size_t i = 0; i < k; ++i) h(a_verts[i], b_verts[i]) = 1;

        const IntMatrix a_inv = to_integral(inverse_exact(a)->inverse);
        const IntMatrix b_inv = to_integral(inverse_exact(b)->inverse);
        // R = 0 by construction
        const auto bsel = std::vector<std::size_t>(b_verts.begin(), b_verts.begin() + k);
        REQUIRE(b_inv.submatrix(bsel, bsel).is_zero());

        IntMatrix c(na + nb, na + nb);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j) c(na + i, na + j) = b(i, j);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j) {
                c(i, na + j) = h(i, j);
                c(na + j, i) = h(i, j);
            }

        auto via_schur = schur_block_inverse(a_inv, b_inv, h);
        REQUIRE(via_schur.has_value());
        auto direct = inverse_exact(c);
        REQUIRE(direct.has_value());
        CHECK(*via_schur == direct->inverse);
    }
}

TEST_CASE("schur assembly with P R = 2I uses (I - PR)^{-1} = -I") {
    // No loop-free graph on <= 6 vertices realizes P R = 2I (inverse
    // diagonals are even, so k = 1 products are multiples of 4), but the
    // block formula is matrix-level; here A^{-1} carries P = [[0,1],[1,0]]
    // and B^{-1} carries R = [[0,2],[2,0]].
    const IntMatrix a_inv{{0, 1}, {1, 0}}; // self-inverse
    const IntMatrix b_inv{
        {0, 2, -2, -1}, {2, 0, -1, -1}, {-2, -1, -2, -2}, {-1, -1, -2, -2}};
    REQUIRE(det(b_inv) == 1);

    IntMatrix h(2, 4);
    h(0, 0) = 1;
    h(1, 1) = 1;
    const IntMatrix p = a_inv.submatrix(std::vector<std::size_t>{0, 1},
                                        std::vector<std::size_t>{0, 1});
    const IntMatrix r = b_inv.submatrix(std::vector<std::size_t>{0, 1},
                                        std::vector<std::size_t>{0, 1});
    IntMatrix two_i(2, 2);
    two_i(0, 0) = two_i(1, 1) = 2;
    REQUIRE(p * r == two_i);

    const IntMatrix a = to_integral(inverse_exact(a_inv)->inverse);
    const IntMatrix b = to_integral(inverse_exact(b_inv)->inverse);
    IntMatrix c(6, 6);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) c(2 + i, 2 + j) = b(i, j);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            c(i, 2 + j) = h(i, j);
            c(2 + j, i) = h(i, j);
        }
    auto via_schur = schur_block_inverse(a_inv, b_inv, h);
    REQUIRE(via_schur.has_value());
    CHECK(is_integral(*via_schur));
    auto direct = inverse_exact(c);
    REQUIRE(direct.has_value());
    CHECK(*via_schur == direct->inverse);
}

TEST_CASE("schur rejects malformed coupling matrices") {
    const IntMatrix a_inv = example_a_inv();
    const IntMatrix b_inv = example_b_inv();
    IntMatrix two(4, 4);
    two(0, 0) = 2;
    CHECK_THROWS_AS(schur_block_inverse(a_inv, b_inv, two), std::invalid_argument);
    IntMatrix dup(4, 4);
    dup(0, 0) = 1;
    dup(0, 1) = 1;
    CHECK_THROWS_AS(schur_block_inverse(a_inv, b_inv, dup), std::invalid_argument);
    CHECK_THROWS_AS(schur_block_inverse(a_inv, b_inv, IntMatrix(3, 4)),
                    DimensionMismatch);
}

TEST_CASE("schur reports non-applicability when I - PR is singular") {
    // A^{-1} = B^{-1} = [[1,0],[0,1]] and a full bridge: P = R = I,
    // I - PR = 0.
    const IntMatrix eye = IntMatrix::identity(2);
    IntMatrix h(2, 2);
    h(0, 0) = 1;
    h(1, 1) = 1;
    CHECK_FALSE(schur_block_inverse(eye, eye, h).has_value());
}

TEST_SUITE_END();
