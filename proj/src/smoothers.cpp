// SPDX-License-Identifier: Apache-2.0

#include "mamg/smoothers.hpp"

namespace mamg {

SmootherData::SmootherData(const SparseMatrix& mat) : A(&mat) {
    if (mat.n_rows != mat.n_cols) throw std::invalid_argument("SmootherData: matrix not square");
    diag_pos.assign(static_cast<std::size_t>(mat.n_rows), -1);
    for (index_t i = 0; i < mat.n_rows; ++i) {
        for (index_t p = mat.row_offsets[i]; p < mat.row_offsets[i + 1]; ++p) {
            if (mat.col_indices[static_cast<std::size_t>(p)] == i) {
                if (mat.values[static_cast<std::size_t>(p)] <= 0.0)
                    throw SetupError("SmootherData: non-positive diagonal at row " + std::to_string(i));
                diag_pos[static_cast<std::size_t>(i)] = p;
                break;
            }
        }
        if (diag_pos[static_cast<std::size_t>(i)] < 0)
            throw SetupError("SmootherData: zero diagonal at row " + std::to_string(i));
    }
}

namespace {

inline void sweep_row(const SparseMatrix& A, index_t i, index_t dpos, const DenseVector& b, DenseVector& x) {
    double s = b[static_cast<std::size_t>(i)];
    for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
        if (p == dpos) continue;
        s -= A.values[static_cast<std::size_t>(p)] *
             x[static_cast<std::size_t>(A.col_indices[static_cast<std::size_t>(p)])];
    }
    x[static_cast<std::size_t>(i)] = s / A.values[static_cast<std::size_t>(dpos)];
}

} // namespace

void gs_forward(const SmootherData& S, const DenseVector& b, DenseVector& x) {
    const SparseMatrix& A = *S.A;
    if (b.size() != x.size() || static_cast<index_t>(x.size()) != A.n_rows)
        throw std::invalid_argument("gs_forward: dimension mismatch");
    for (index_t i = 0; i < A.n_rows; ++i) sweep_row(A, i, S.diag_pos[static_cast<std::size_t>(i)], b, x);
}

void gs_backward(const SmootherData& S, const DenseVector& b, DenseVector& x) {
    const SparseMatrix& A = *S.A;
    if (b.size() != x.size() || static_cast<index_t>(x.size()) != A.n_rows)
        throw std::invalid_argument("gs_backward: dimension mismatch");
    for (index_t i = A.n_rows; i-- > 0;) sweep_row(A, i, S.diag_pos[static_cast<std::size_t>(i)], b, x);
}

void gs_forward(const SparseMatrix& A, const DenseVector& b, DenseVector& x) {
    SmootherData S(A);
    gs_forward(S, b, x);
}

void gs_backward(const SparseMatrix& A, const DenseVector& b, DenseVector& x) {
    SmootherData S(A);
    gs_backward(S, b, x);
}

} // namespace mamg
