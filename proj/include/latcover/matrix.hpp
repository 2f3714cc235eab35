#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "latcover/bigint.hpp"

namespace latcover {

// dense integer matrix, row major, arbitrary precision entries
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;  // rows * cols, row major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> data) {
        rows = data.size();
        cols = rows ? data.begin()->size() : 0;
        entries.reserve(rows * cols);
        for (const auto& row : data) {
            if (row.size() != cols)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (const auto& x : row) entries.push_back(x);
        }
    }

    Int& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

    // matrix whose columns are the given vectors
    static IntMatrix from_columns(std::size_t dim, const std::vector<IntVec>& cs) {
        IntMatrix m(dim, cs.size());
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (cs[j].size() != dim)
                throw std::invalid_argument("IntMatrix: column length mismatch");
            for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cs[j][i];
        }
        return m;
    }

    IntVec column(std::size_t j) const {
        IntVec v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    IntVec row(std::size_t i) const {
        IntVec v(cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
        return v;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // rows [r0, r1) as a separate matrix
    IntMatrix row_slice(std::size_t r0, std::size_t r1) const {
        IntMatrix s(r1 - r0, cols);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = 0; j < cols; ++j) s.at(i - r0, j) = at(i, j);
        return s;
    }
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("IntMatrix: size mismatch in product");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

inline IntVec operator*(const IntMatrix& a, const IntVec& v) {
    if (a.cols != v.size()) throw std::invalid_argument("IntMatrix: size mismatch in apply");
    IntVec w(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0) w[i] += a.at(i, j) * v[j];
    return w;
}

// [a | b], matrices side by side
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("IntMatrix: row mismatch in hconcat");
    IntMatrix m(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
    }
    return m;
}

// block diagonal [a 0; 0 b]
inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) m.at(a.rows + i, a.cols + j) = b.at(i, j);
    return m;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline IntVec vec_neg(const IntVec& a) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

inline IntVec vec_concat(const IntVec& a, const IntVec& b) {
    IntVec c(a);
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

inline IntVec vec_slice(const IntVec& v, std::size_t i0, std::size_t i1) {
    return IntVec(v.begin() + i0, v.begin() + i1);
}

inline IntVec vec_scale(const Int& c, const IntVec& v) {
    IntVec out = v;
    for (auto& x : out) x *= c;
    return out;
}

inline bool is_zero_vec(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// exact determinant by fraction-free (Bareiss) elimination
inline Int determinant(const IntMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant needs a square matrix");
    std::size_t n = a.rows;
    if (n == 0) return 1;
    IntMatrix w = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

}  // namespace latcover
