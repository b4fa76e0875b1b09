#include "invgraph/exact.hpp"

#include <utility>

namespace invgraph {

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact division: the quotient is a minor of the input.
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<RatMatrix> inverse_exact(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse_exact: matrix not square");
    const std::size_t n = m.rows();

    // Gauss-Jordan on [m | I]: solves the n unit-vector systems column-wise.
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const Rat p = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::optional<ExactInverse> inverse_exact(const IntMatrix& m) {
    auto inv = inverse_exact(to_rational(m));
    if (!inv) return std::nullopt;
    if (to_rational(m) * *inv != RatMatrix::identity(m.rows()))
        throw std::logic_error("inverse_exact: verification product is not the identity");
    return ExactInverse{*inv, is_integral(*inv)};
}

namespace {

// Recovers the bridged index lists from the 0/1 coupling matrix, one
// pair per nonzero column.
struct Coupling {
    std::vector<std::size_t> a_idx; // rows of h carrying a 1
    std::vector<std::size_t> b_idx; // matching columns
};

Coupling decode_coupling(const IntMatrix& h) {
    Coupling c;
    std::vector<bool> row_used(h.rows(), false);
    for (std::size_t j = 0; j < h.cols(); ++j) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            if (h(i, j) == 0) continue;
            if (h(i, j) != 1)
                throw std::invalid_argument("schur_block_inverse: h entries must be 0 or 1");
            if (row_used[i])
                throw std::invalid_argument("schur_block_inverse: repeated row in h");
            row_used[i] = true;
            c.a_idx.push_back(i);
            c.b_idx.push_back(j);
            ++hits;
        }
        if (hits > 1)
            throw std::invalid_argument("schur_block_inverse: repeated column in h");
    }
    return c;
}

} // namespace

std::optional<RatMatrix> schur_block_inverse(const IntMatrix& a_inv,
                                             const IntMatrix& b_inv,
                                             const IntMatrix& h) {
    if (!a_inv.is_square() || !b_inv.is_square())
        throw std::invalid_argument("schur_block_inverse: block inverses must be square");
    const std::size_t n = a_inv.rows();
    const std::size_t m = b_inv.rows();
    if (h.rows() != n || h.cols() != m)
        throw DimensionMismatch("schur_block_inverse: h must be n x m");

    const Coupling c = decode_coupling(h);
    const std::size_t k = c.a_idx.size();

    const RatMatrix ra = to_rational(a_inv);
    const RatMatrix rb = to_rational(b_inv);
    const RatMatrix rh = to_rational(h);

    RatMatrix s_inv = ra;
    if (k > 0) {
        const IntMatrix p = a_inv.submatrix(c.a_idx, c.a_idx);
        const IntMatrix r = b_inv.submatrix(c.b_idx, c.b_idx);
        const IntMatrix i_minus_pr = IntMatrix::identity(k) - p * r;
        auto ipr_inv = inverse_exact(to_rational(i_minus_pr));
        if (!ipr_inv) return std::nullopt;

        // A^{-1} F is the a-columns of A^{-1}; F^T A^{-1} the a-rows.
        std::vector<std::size_t> all_n(n);
        for (std::size_t i = 0; i < n; ++i) all_n[i] = i;
        const RatMatrix ainv_f = ra.submatrix(all_n, c.a_idx);
        const RatMatrix ft_ainv = ra.submatrix(c.a_idx, all_n);
        s_inv = ra + ainv_f * to_rational(r) * *ipr_inv * ft_ainv;
    }

    const RatMatrix tr = -(s_inv * rh * rb);
    const RatMatrix bl = -(rb * rh.transpose() * s_inv);
    const RatMatrix br = rb + rb * rh.transpose() * s_inv * rh * rb;

    RatMatrix out(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = s_inv(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, n + j) = tr(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out(n + i, j) = bl(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = br(i, j);
    return out;
}

} // namespace invgraph
