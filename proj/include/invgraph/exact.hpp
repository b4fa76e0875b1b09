#pragma once

#include <optional>

#include "invgraph/matrix.hpp"

namespace invgraph {

// Exact determinant by Bareiss fraction-free elimination with row
// pivoting on nonzero pivots. Total on square matrices.
Int det(const IntMatrix& m);

struct ExactInverse {
    RatMatrix inverse;
    bool is_integral = false; // true iff every denominator is 1
};

// Exact rational inverse, or nullopt when the matrix is singular.
// The product m * inverse == I is re-verified by exact multiplication
// before returning.
std::optional<ExactInverse> inverse_exact(const IntMatrix& m);

// Rational Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMatrix> inverse_exact(const RatMatrix& m);

// Inverse of the 2x2 block matrix C = [[A, H], [H^T, B]] assembled from
// the inverses of its diagonal blocks via the Schur complement
//   S = A - H B^{-1} H^T,
//   S^{-1} = A^{-1} + A^{-1} F R (I - P R)^{-1} F^T A^{-1},
// where H = F E^T selects the bridged rows/columns, P = F^T A^{-1} F and
// R = E^T B^{-1} E. Returns nullopt when I - P R is singular.
//
// h must be an n x m 0/1 matrix with at most one 1 per row and per
// column (one 1 per bridged pair). h == 0 yields the block-diagonal
// inverse.
std::optional<RatMatrix> schur_block_inverse(const IntMatrix& a_inv,
                                             const IntMatrix& b_inv,
                                             const IntMatrix& h);

} // namespace invgraph
