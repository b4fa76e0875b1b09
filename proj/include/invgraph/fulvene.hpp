#pragma once

#include "invgraph/spectra.hpp"

namespace invgraph {

// q = (1 + sqrt(5)) / 2
inline constexpr double kGoldenRatio = 1.618033988749894848;

// f_1 = f_2 = 2, f_k = f_{k-1} + f_{k-2}; f_0 = 0 so the boundary
// formulas at n = 1 degenerate gracefully.
Int fibonacci_f(std::size_t n);

// The 6-vertex fulvene graph F_0: a 5-cycle 1-2-3-4-5 with the pendant
// vertex 6 attached to 4.
Graph fulvene_base();

struct FulveneGen {
    std::size_t n = 0;
    Graph graph{0};
    std::vector<Int> f;      // f[k] = f_k for k = 0..max(n, 2)
    std::size_t deg1_count = 0;
    std::size_t deg2_count = 0;
    std::size_t deg3_count = 0;
};

// Generation F_n: F_{n-1} plus f_n fresh copies of F_0, each bridged
// over its arbitrarily bridgeable pair {1,2}. Per step, the vertex-6 of
// every copy added two steps earlier receives two new copies (their
// second bridge endpoints go to the nearest unconsumed degree-2
// vertices); the remaining copies pair up the leftover degree-2
// vertices by shortest distance. Ties break toward the lower vertex
// index and new copies are appended in creation order, so the result is
// deterministic. The degree-count identities are asserted after every
// step and generation aborts if they fail.
//
// Practical ceiling n <= 6 (vertex count grows 6 * sum f_k).
FulveneGen fulvene_family(std::size_t n);

struct FamilyCheckRow {
    std::size_t n = 0;
    std::size_t vertices = 0;
    Int determinant;
    bool integrally_invertible = false;
    bool counts_ok = false;
    std::size_t deg1 = 0, deg2 = 0, deg3 = 0;
    Int max_degree;
    double lambda_min_pos = 0.0;
    double lower_bound = 0.0;
    bool bound_holds = false;
    double deg3_ratio = 0.0;
};

struct FamilyCheckReport {
    std::vector<FamilyCheckRow> rows; // generations 0..n
    bool ratio_nondecreasing = false; // |V^(3)|/|V| over n >= 1
    bool y_chain_ok = false;          // y_k <= 6 y_{k-1} + q
    bool all_ok = false;
};

// Checks the count identities, integral invertibility, maximum degree,
// and the least-positive-eigenvalue bound for generations 0..n (n <= 5).
FamilyCheckReport verify_family(std::size_t n);

} // namespace invgraph
