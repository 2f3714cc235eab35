#pragma once

#include <optional>

#include "latcover/snf.hpp"

namespace latcover {

// integer solutions of a x = b: one particular solution plus a lattice basis
// of the kernel (as matrix columns; empty matrix when the kernel is trivial)
struct LinearSolution {
    IntVec particular;
    IntMatrix kernel;
};

// Solve over Z via the normal form: with u a v = d, substitute x = v y, so
// d y = u b.  Each diagonal entry must divide its target coordinate; rows
// beyond the diagonal must hit zero, otherwise there is no solution.  Free
// y-coordinates (zero or absent diagonal) are set to 0 in the particular
// solution and contribute the corresponding columns of v to the kernel.
inline std::optional<LinearSolution> solve_linear(const IntMatrix& a, const IntVec& b) {
    if (b.size() != a.rows) throw std::invalid_argument("solve_linear: length mismatch");
    SnfDecomposition s = smith_normal_form(a);
    IntVec c = s.u * b;
    std::size_t n = a.rows, k = a.cols, m = std::min(n, k);

    IntVec y(k);
    std::vector<std::size_t> free_cols;
    for (std::size_t i = 0; i < k; ++i) {
        Int di = i < m ? s.d.at(i, i) : Int(0);
        if (di == 0) {
            free_cols.push_back(i);
        } else {
            if (i < n) {
                if (c[i] % di != 0) return std::nullopt;
                y[i] = c[i] / di;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Int di = i < m ? s.d.at(i, i) : Int(0);
        if (di == 0 && c[i] != 0) return std::nullopt;
    }

    LinearSolution out;
    out.particular = s.v * y;
    out.kernel = IntMatrix(k, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) out.kernel.at(i, j) = s.v.at(i, free_cols[j]);
    return out;
}

// does v lie in the column span of gens over Z
inline bool in_span(const IntMatrix& gens, const IntVec& v) {
    return solve_linear(gens, v).has_value();
}

// every column of sub in the column span of gens
inline bool span_contains(const IntMatrix& gens, const IntMatrix& sub) {
    for (std::size_t j = 0; j < sub.cols; ++j)
        if (!in_span(gens, sub.column(j))) return false;
    return true;
}

// integer kernel of a, as matrix columns
inline IntMatrix kernel_basis(const IntMatrix& a) {
    SnfDecomposition s = smith_normal_form(a);
    std::size_t k = a.cols, m = std::min(a.rows, k);
    std::vector<std::size_t> free_cols;
    for (std::size_t i = 0; i < k; ++i)
        if (i >= m || s.d.at(i, i) == 0) free_cols.push_back(i);
    IntMatrix out(k, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) out.at(i, j) = s.v.at(i, free_cols[j]);
    return out;
}

}  // namespace latcover
