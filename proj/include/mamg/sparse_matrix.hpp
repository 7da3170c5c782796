// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_SPARSE_MATRIX_HPP
#define MAMG_SPARSE_MATRIX_HPP

#include "mamg/types.hpp"

#include <tuple>
#include <vector>

namespace mamg {

/// Sparse matrix in canonical CSR form: row offsets non-decreasing, column
/// indices strictly increasing within each row, duplicates summed and exact
/// zeros dropped at construction. Immutable after construction by convention;
/// safe to share across concurrent solves.
///
/// When `symmetric` is set, every stored (i,j,v) has (j,i,v) stored with the
/// identical value (assembly and Galerkin coarsening produce bitwise-symmetric
/// matrices).
struct SparseMatrix {
    index_t n_rows = 0;
    index_t n_cols = 0;
    std::vector<index_t> row_offsets;  // length n_rows + 1
    std::vector<index_t> col_indices;
    std::vector<double> values;
    bool symmetric = false;

    index_t nnz() const { return static_cast<index_t>(values.size()); }

    /// Builds canonical CSR from (i, j, v) triplets: sorts, sums duplicates,
    /// drops exact zeros.
    static SparseMatrix from_triplets(index_t n_rows, index_t n_cols,
                                      std::vector<std::tuple<index_t, index_t, double>> triplets,
                                      bool symmetric = false);

    static SparseMatrix identity(index_t n);

    /// Value at (i, j); zero if not stored. Binary search within the row.
    double at(index_t i, index_t j) const;

    /// Checks structural and value symmetry exactly (bitwise).
    bool check_symmetric() const;
};

/// y = A x
void spmv(const SparseMatrix& A, const DenseVector& x, DenseVector& y);
DenseVector spmv(const SparseMatrix& A, const DenseVector& x);

/// y = b - A x
void residual(const SparseMatrix& A, const DenseVector& b, const DenseVector& x, DenseVector& y);

SparseMatrix transpose(const SparseMatrix& A);

/// C = A B, canonical CSR.
SparseMatrix spgemm(const SparseMatrix& A, const SparseMatrix& B);

/// Galerkin triple product Pᵀ A P. Requires A symmetric; the result is made
/// bitwise symmetric by mirroring the computed upper triangle (the exact sum
/// is symmetric, only the floating-point summation order differs).
SparseMatrix triple_product(const SparseMatrix& P, const SparseMatrix& A);

/// Diagonal entries of A (zero where absent).
DenseVector diagonal(const SparseMatrix& A);

} // namespace mamg

#endif // MAMG_SPARSE_MATRIX_HPP
