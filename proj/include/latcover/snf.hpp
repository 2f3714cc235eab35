#pragma once

#include <stdexcept>

#include "latcover/matrix.hpp"

namespace latcover {

// Smith normal form u * a * v = d with u, v unimodular, d diagonal with
// nonnegative entries and d1 | d2 | ... ; u_inv is carried along so callers
// can map normal-form coordinates back to the original basis without a
// separate inversion.
struct SnfDecomposition {
    IntMatrix u;      // rows x rows
    IntMatrix d;      // rows x cols
    IntMatrix v;      // cols x cols
    IntMatrix u_inv;  // inverse of u, maintained alongside

    // diagonal entries d1, d2, ..., d_min(rows,cols)
    IntVec diagonal() const {
        std::size_t k = std::min(d.rows, d.cols);
        IntVec out(k);
        for (std::size_t i = 0; i < k; ++i) out[i] = d.at(i, i);
        return out;
    }
};

namespace detail {

struct SnfWork {
    IntMatrix a, u, uinv, v;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (std::size_t r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row t
    void row_sub(std::size_t i, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(t, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(t, c);
        // inverse picks up the opposite column operation
        for (std::size_t r = 0; r < uinv.rows; ++r) uinv.at(r, t) += q * uinv.at(r, i);
    }
    // col j -= q * col t
    void col_sub(std::size_t j, std::size_t t, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows; ++r) a.at(r, j) -= q * a.at(r, t);
        for (std::size_t r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, t);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        for (std::size_t r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
};

}  // namespace detail

inline SnfDecomposition smith_normal_form(const IntMatrix& input) {
    detail::SnfWork w{input, IntMatrix::identity(input.rows), IntMatrix::identity(input.rows),
                      IntMatrix::identity(input.cols)};
    std::size_t n = input.rows, k = input.cols;
    std::size_t limit = std::min(n, k);

    for (std::size_t t = 0; t < limit; ++t) {
        for (;;) {
            // smallest |entry| pivot in the remaining block, first hit in
            // row-major order on ties, for reproducible output
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < k; ++j) {
                    const Int& x = w.a.at(i, j);
                    if (x == 0) continue;
                    if (best == 0 || int_abs(x) < best) {
                        best = int_abs(x);
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) goto done;  // block is zero, diagonal entries stay 0
            w.row_swap(t, pi);
            w.col_swap(t, pj);

            bool reduced = true;
            for (std::size_t i = t + 1; i < n; ++i)
                if (w.a.at(i, t) != 0) {
                    w.row_sub(i, t, nearest_quotient(w.a.at(i, t), w.a.at(t, t)));
                    if (w.a.at(i, t) != 0) reduced = false;
                }
            for (std::size_t j = t + 1; j < k; ++j)
                if (w.a.at(t, j) != 0) {
                    w.col_sub(j, t, nearest_quotient(w.a.at(t, j), w.a.at(t, t)));
                    if (w.a.at(t, j) != 0) reduced = false;
                }
            if (!reduced) continue;  // leftover remainders become the next pivot

            // divisibility: fold any entry the pivot misses into row t
            const Int& p = w.a.at(t, t);
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < k; ++j)
                    if (w.a.at(i, j) % p != 0) {
                        w.row_sub(t, i, Int(-1));  // row t += row i
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (w.a.at(t, t) < 0) w.row_negate(t);
    }
done:
    for (std::size_t t = 0; t < limit; ++t)
        if (w.a.at(t, t) < 0) w.row_negate(t);
    return SnfDecomposition{std::move(w.u), std::move(w.a), std::move(w.v), std::move(w.uinv)};
}

}  // namespace latcover
