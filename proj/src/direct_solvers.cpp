// SPDX-License-Identifier: Apache-2.0

#include "mamg/direct_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace mamg {

DenseCholesky::DenseCholesky(const SparseMatrix& A) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("DenseCholesky: matrix not square");
    n_ = A.n_rows;
    const std::size_t n = static_cast<std::size_t>(n_);
    lower_.assign(n * n, 0.0);
    for (index_t i = 0; i < n_; ++i)
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
            const index_t j = A.col_indices[static_cast<std::size_t>(p)];
            if (j <= i) lower_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
                A.values[static_cast<std::size_t>(p)];
        }

    for (std::size_t j = 0; j < n; ++j) {
        double d = lower_[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= lower_[j * n + k] * lower_[j * n + k];
        if (d <= 0.0) throw SetupError("DenseCholesky: non-SPD pivot at row " + std::to_string(j));
        const double ljj = std::sqrt(d);
        lower_[j * n + j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = lower_[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= lower_[i * n + k] * lower_[j * n + k];
            lower_[i * n + j] = s / ljj;
        }
    }
}

void DenseCholesky::solve(const DenseVector& b, DenseVector& x) const {
    if (static_cast<index_t>(b.size()) != n_) throw std::invalid_argument("DenseCholesky::solve: dimension mismatch");
    const std::size_t n = static_cast<std::size_t>(n_);
    x = b;
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k) s -= lower_[i * n + k] * x[k];
        x[i] = s / lower_[i * n + i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= lower_[k * n + ii] * x[k];
        x[ii] = s / lower_[ii * n + ii];
    }
}

DenseVector DenseCholesky::solve(const DenseVector& b) const {
    DenseVector x;
    solve(b, x);
    return x;
}

EnvelopeCholesky::EnvelopeCholesky(const SparseMatrix& A) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("EnvelopeCholesky: matrix not square");
    n_ = A.n_rows;
    const std::size_t n = static_cast<std::size_t>(n_);
    first_col_.resize(n);
    row_start_.resize(n + 1);
    row_start_[0] = 0;
    std::size_t total = 0;
    for (index_t i = 0; i < n_; ++i) {
        index_t lo = i;
        if (A.row_offsets[i] < A.row_offsets[i + 1])
            lo = std::min(lo, A.col_indices[static_cast<std::size_t>(A.row_offsets[i])]);
        first_col_[static_cast<std::size_t>(i)] = lo;
        total += static_cast<std::size_t>(i - lo + 1);
        row_start_[static_cast<std::size_t>(i) + 1] = total;
    }
    constexpr std::size_t kMaxProfile = std::size_t(3) * 100'000'000;
    if (total > kMaxProfile)
        throw SetupError("EnvelopeCholesky: profile too large (" + std::to_string(total) + " entries)");
    vals_.assign(total, 0.0);

    auto entry = [&](index_t i, index_t j) -> double& {
        return vals_[row_start_[static_cast<std::size_t>(i)] +
                     static_cast<std::size_t>(j - first_col_[static_cast<std::size_t>(i)])];
    };
    for (index_t i = 0; i < n_; ++i)
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
            const index_t j = A.col_indices[static_cast<std::size_t>(p)];
            if (j <= i) entry(i, j) = A.values[static_cast<std::size_t>(p)];
        }

    // Row-oriented envelope factorization: L(i,j) uses rows j and i over the
    // overlap of their envelopes.
    for (index_t i = 0; i < n_; ++i) {
        const index_t lo_i = first_col_[static_cast<std::size_t>(i)];
        for (index_t j = lo_i; j < i; ++j) {
            const index_t lo_j = first_col_[static_cast<std::size_t>(j)];
            const index_t k0 = std::max(lo_i, lo_j);
            double s = entry(i, j);
            const double* ri = &vals_[row_start_[static_cast<std::size_t>(i)]];
            const double* rj = &vals_[row_start_[static_cast<std::size_t>(j)]];
            const std::size_t oi = static_cast<std::size_t>(k0 - lo_i);
            const std::size_t oj = static_cast<std::size_t>(k0 - lo_j);
            const std::size_t len = static_cast<std::size_t>(j - k0);
            for (std::size_t t = 0; t < len; ++t) s -= ri[oi + t] * rj[oj + t];
            entry(i, j) = s / entry(j, j);
        }
        double d = entry(i, i);
        const double* ri = &vals_[row_start_[static_cast<std::size_t>(i)]];
        for (index_t j = lo_i; j < i; ++j) {
            const double lij = ri[static_cast<std::size_t>(j - lo_i)];
            d -= lij * lij;
        }
        if (d <= 0.0) throw SetupError("EnvelopeCholesky: non-SPD pivot at row " + std::to_string(i));
        entry(i, i) = std::sqrt(d);
    }
}

void EnvelopeCholesky::solve(const DenseVector& b, DenseVector& x) const {
    if (static_cast<index_t>(b.size()) != n_) throw std::invalid_argument("EnvelopeCholesky::solve: dimension mismatch");
    const std::size_t n = static_cast<std::size_t>(n_);
    x = b;
    for (std::size_t i = 0; i < n; ++i) {
        const index_t lo = first_col_[i];
        const double* ri = &vals_[row_start_[i]];
        double s = x[i];
        for (index_t j = lo; j < static_cast<index_t>(i); ++j)
            s -= ri[static_cast<std::size_t>(j - lo)] * x[static_cast<std::size_t>(j)];
        x[i] = s / ri[static_cast<std::size_t>(static_cast<index_t>(i) - lo)];
    }
    // Backward pass with Lᵀ: scatter column i of L (= row entries) as we go.
    for (std::size_t ii = n; ii-- > 0;) {
        const index_t lo = first_col_[ii];
        const double* ri = &vals_[row_start_[ii]];
        const double xi = x[ii] / ri[static_cast<std::size_t>(static_cast<index_t>(ii) - lo)];
        x[ii] = xi;
        for (index_t j = lo; j < static_cast<index_t>(ii); ++j)
            x[static_cast<std::size_t>(j)] -= ri[static_cast<std::size_t>(j - lo)] * xi;
    }
}

DenseVector EnvelopeCholesky::solve(const DenseVector& b) const {
    DenseVector x;
    solve(b, x);
    return x;
}

DenseVector coarsest_solve(const SparseMatrix& A, const DenseVector& b) {
    constexpr index_t kCoarsestCap = 200;
    if (A.n_rows > kCoarsestCap)
        throw std::invalid_argument("coarsest_solve: dimension exceeds coarsest-size cap");
    DenseCholesky chol(A);
    return chol.solve(b);
}

} // namespace mamg
