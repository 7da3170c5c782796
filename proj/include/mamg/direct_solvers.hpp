// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_DIRECT_SOLVERS_HPP
#define MAMG_DIRECT_SOLVERS_HPP

#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

namespace mamg {

/// Dense Cholesky of a densified sparse SPD matrix. Intended for coarsest
/// levels (a few hundred unknowns at most).
class DenseCholesky {
public:
    explicit DenseCholesky(const SparseMatrix& A);

    void solve(const DenseVector& b, DenseVector& x) const;
    DenseVector solve(const DenseVector& b) const;

    index_t size() const { return n_; }

private:
    index_t n_ = 0;
    std::vector<double> lower_;  // row-major lower triangle, full n*n
};

/// Envelope (skyline) Cholesky for larger sparse SPD matrices, used for the
/// two-grid method's exact second-level solve. No reordering; the profile is
/// taken from the matrix as given.
class EnvelopeCholesky {
public:
    explicit EnvelopeCholesky(const SparseMatrix& A);

    void solve(const DenseVector& b, DenseVector& x) const;
    DenseVector solve(const DenseVector& b) const;

    index_t size() const { return n_; }
    std::size_t profile_entries() const { return vals_.size(); }

private:
    index_t n_ = 0;
    std::vector<index_t> first_col_;       // leftmost column of each row's envelope
    std::vector<std::size_t> row_start_;   // offsets into vals_
    std::vector<double> vals_;             // L entries, cols first_col_[i]..i
};

/// Exact solve of an SPD system by dense Cholesky; relative residual <= 1e-13.
/// Precondition: dimension within the coarsest-size cap (<= 200).
DenseVector coarsest_solve(const SparseMatrix& A, const DenseVector& b);

} // namespace mamg

#endif // MAMG_DIRECT_SOLVERS_HPP
