// SPDX-License-Identifier: Apache-2.0

#include "mamg/sparse_matrix.hpp"

#include <algorithm>
#include <cstddef>

namespace mamg {

SparseMatrix SparseMatrix::from_triplets(index_t n_rows, index_t n_cols,
                                         std::vector<std::tuple<index_t, index_t, double>> triplets,
                                         bool symmetric) {
    if (n_rows < 0 || n_cols < 0) throw std::invalid_argument("from_triplets: negative dimension");
    for (const auto& [i, j, v] : triplets) {
        (void)v;
        if (i < 0 || i >= n_rows || j < 0 || j >= n_cols)
            throw std::invalid_argument("from_triplets: index out of range");
    }
    std::sort(triplets.begin(), triplets.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
              });

    SparseMatrix A;
    A.n_rows = n_rows;
    A.n_cols = n_cols;
    A.symmetric = symmetric;
    A.row_offsets.assign(static_cast<std::size_t>(n_rows) + 1, 0);

    std::size_t k = 0;
    while (k < triplets.size()) {
        const index_t i = std::get<0>(triplets[k]);
        const index_t j = std::get<1>(triplets[k]);
        double sum = 0.0;
        while (k < triplets.size() && std::get<0>(triplets[k]) == i && std::get<1>(triplets[k]) == j) {
            sum += std::get<2>(triplets[k]);
            ++k;
        }
        if (sum != 0.0) {
            A.col_indices.push_back(j);
            A.values.push_back(sum);
            ++A.row_offsets[static_cast<std::size_t>(i) + 1];
        }
    }
    for (index_t r = 0; r < n_rows; ++r)
        A.row_offsets[static_cast<std::size_t>(r) + 1] += A.row_offsets[static_cast<std::size_t>(r)];
    return A;
}

SparseMatrix SparseMatrix::identity(index_t n) {
    SparseMatrix A;
    A.n_rows = A.n_cols = n;
    A.symmetric = true;
    A.row_offsets.resize(static_cast<std::size_t>(n) + 1);
    A.col_indices.resize(static_cast<std::size_t>(n));
    A.values.assign(static_cast<std::size_t>(n), 1.0);
    for (index_t i = 0; i <= n; ++i) A.row_offsets[static_cast<std::size_t>(i)] = i;
    for (index_t i = 0; i < n; ++i) A.col_indices[static_cast<std::size_t>(i)] = i;
    return A;
}

double SparseMatrix::at(index_t i, index_t j) const {
    if (i < 0 || i >= n_rows || j < 0 || j >= n_cols)
        throw std::invalid_argument("SparseMatrix::at: index out of range");
    const index_t lo = row_offsets[static_cast<std::size_t>(i)];
    const index_t hi = row_offsets[static_cast<std::size_t>(i) + 1];
    auto first = col_indices.begin() + lo;
    auto last = col_indices.begin() + hi;
    auto it = std::lower_bound(first, last, j);
    if (it != last && *it == j) return values[static_cast<std::size_t>(it - col_indices.begin())];
    return 0.0;
}

bool SparseMatrix::check_symmetric() const {
    if (n_rows != n_cols) return false;
    for (index_t i = 0; i < n_rows; ++i) {
        for (index_t p = row_offsets[i]; p < row_offsets[i + 1]; ++p) {
            const index_t j = col_indices[static_cast<std::size_t>(p)];
            if (at(j, i) != values[static_cast<std::size_t>(p)]) return false;
        }
    }
    return true;
}

void spmv(const SparseMatrix& A, const DenseVector& x, DenseVector& y) {
    if (static_cast<index_t>(x.size()) != A.n_cols)
        throw std::invalid_argument("spmv: dimension mismatch");
    y.resize(static_cast<std::size_t>(A.n_rows));
    for (index_t i = 0; i < A.n_rows; ++i) {
        double s = 0.0;
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p)
            s += A.values[static_cast<std::size_t>(p)] * x[static_cast<std::size_t>(A.col_indices[static_cast<std::size_t>(p)])];
        y[static_cast<std::size_t>(i)] = s;
    }
}

DenseVector spmv(const SparseMatrix& A, const DenseVector& x) {
    DenseVector y;
    spmv(A, x, y);
    return y;
}

void residual(const SparseMatrix& A, const DenseVector& b, const DenseVector& x, DenseVector& y) {
    if (static_cast<index_t>(b.size()) != A.n_rows)
        throw std::invalid_argument("residual: dimension mismatch");
    spmv(A, x, y);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = b[i] - y[i];
}

SparseMatrix transpose(const SparseMatrix& A) {
    SparseMatrix T;
    T.n_rows = A.n_cols;
    T.n_cols = A.n_rows;
    T.symmetric = A.symmetric;
    T.row_offsets.assign(static_cast<std::size_t>(A.n_cols) + 1, 0);
    T.col_indices.resize(A.values.size());
    T.values.resize(A.values.size());
    for (index_t p = 0; p < A.nnz(); ++p)
        ++T.row_offsets[static_cast<std::size_t>(A.col_indices[static_cast<std::size_t>(p)]) + 1];
    for (index_t j = 0; j < A.n_cols; ++j)
        T.row_offsets[static_cast<std::size_t>(j) + 1] += T.row_offsets[static_cast<std::size_t>(j)];
    std::vector<index_t> next(T.row_offsets.begin(), T.row_offsets.end() - 1);
    for (index_t i = 0; i < A.n_rows; ++i) {
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
            const index_t j = A.col_indices[static_cast<std::size_t>(p)];
            const index_t q = next[static_cast<std::size_t>(j)]++;
            T.col_indices[static_cast<std::size_t>(q)] = i;
            T.values[static_cast<std::size_t>(q)] = A.values[static_cast<std::size_t>(p)];
        }
    }
    // Rows come out sorted because source rows are scanned in order.
    return T;
}

SparseMatrix spgemm(const SparseMatrix& A, const SparseMatrix& B) {
    if (A.n_cols != B.n_rows) throw std::invalid_argument("spgemm: dimension mismatch");
    SparseMatrix C;
    C.n_rows = A.n_rows;
    C.n_cols = B.n_cols;
    C.row_offsets.assign(static_cast<std::size_t>(A.n_rows) + 1, 0);

    // Sparse accumulator over B's column space, reused across rows.
    std::vector<double> acc(static_cast<std::size_t>(B.n_cols), 0.0);
    std::vector<index_t> marker(static_cast<std::size_t>(B.n_cols), -1);
    std::vector<index_t> touched;
    touched.reserve(64);

    for (index_t i = 0; i < A.n_rows; ++i) {
        touched.clear();
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
            const index_t k = A.col_indices[static_cast<std::size_t>(p)];
            const double av = A.values[static_cast<std::size_t>(p)];
            for (index_t q = B.row_offsets[k]; q < B.row_offsets[k + 1]; ++q) {
                const index_t j = B.col_indices[static_cast<std::size_t>(q)];
                if (marker[static_cast<std::size_t>(j)] != i) {
                    marker[static_cast<std::size_t>(j)] = i;
                    acc[static_cast<std::size_t>(j)] = 0.0;
                    touched.push_back(j);
                }
                acc[static_cast<std::size_t>(j)] += av * B.values[static_cast<std::size_t>(q)];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (index_t j : touched) {
            C.col_indices.push_back(j);
            C.values.push_back(acc[static_cast<std::size_t>(j)]);
        }
        C.row_offsets[static_cast<std::size_t>(i) + 1] = static_cast<index_t>(C.values.size());
    }
    return C;
}

SparseMatrix triple_product(const SparseMatrix& P, const SparseMatrix& A) {
    if (!A.symmetric) throw std::invalid_argument("triple_product: A must be flagged symmetric");
    if (A.n_cols != P.n_rows) throw std::invalid_argument("triple_product: dimension mismatch");

    const SparseMatrix AP = spgemm(A, P);
    const SparseMatrix Pt = transpose(P);
    const SparseMatrix C = spgemm(Pt, AP);

    // Mirror the upper triangle so the result is bitwise symmetric; the exact
    // sums agree, only rounding order differs between (i,j) and (j,i).
    std::vector<std::tuple<index_t, index_t, double>> trip;
    trip.reserve(static_cast<std::size_t>(C.nnz()));
    for (index_t i = 0; i < C.n_rows; ++i) {
        for (index_t p = C.row_offsets[i]; p < C.row_offsets[i + 1]; ++p) {
            const index_t j = C.col_indices[static_cast<std::size_t>(p)];
            if (j < i) continue;
            const double v = C.values[static_cast<std::size_t>(p)];
            trip.emplace_back(i, j, v);
            if (j != i) trip.emplace_back(j, i, v);
        }
    }
    return SparseMatrix::from_triplets(C.n_rows, C.n_cols, std::move(trip), true);
}

DenseVector diagonal(const SparseMatrix& A) {
    DenseVector d(static_cast<std::size_t>(A.n_rows), 0.0);
    for (index_t i = 0; i < A.n_rows && i < A.n_cols; ++i) d[static_cast<std::size_t>(i)] = A.at(i, i);
    return d;
}

} // namespace mamg
