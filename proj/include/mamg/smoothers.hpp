// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_SMOOTHERS_HPP
#define MAMG_SMOOTHERS_HPP

#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

namespace mamg {

/// Precomputed diagonal positions for the Gauss-Seidel sweeps on one level.
/// The CSR row order is the sweep order. Sweeps are strictly sequential over
/// rows; each sweep owns its iterate exclusively.
struct SmootherData {
    const SparseMatrix* A = nullptr;
    std::vector<index_t> diag_pos;

    SmootherData() = default;
    explicit SmootherData(const SparseMatrix& mat);
};

/// One forward Gauss-Seidel sweep (ascending rows), in place. With x = 0 on
/// entry this realizes x = M b, M = (D+L)^{-1} of the lower-triangular
/// splitting.
void gs_forward(const SparseMatrix& A, const DenseVector& b, DenseVector& x);

/// One backward sweep (descending rows); realizes x <- x + Mᵀ(b - A x).
void gs_backward(const SparseMatrix& A, const DenseVector& b, DenseVector& x);

void gs_forward(const SmootherData& S, const DenseVector& b, DenseVector& x);
void gs_backward(const SmootherData& S, const DenseVector& b, DenseVector& x);

} // namespace mamg

#endif // MAMG_SMOOTHERS_HPP
