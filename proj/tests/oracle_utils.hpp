// SPDX-License-Identifier: Apache-2.0
//
// Dense oracles for the test suites: Eigen-backed eigensolvers, dense
// factorizations, random SPD instances, and operator densification. These stay
// independent of the library's own solve paths.

#ifndef MAMG_TESTS_ORACLE_UTILS_HPP
#define MAMG_TESTS_ORACLE_UTILS_HPP

#include "mamg/accelerators.hpp"
#include "mamg/sparse_matrix.hpp"

#include <Eigen/Dense>

#include <random>

namespace mamg::test {

inline Eigen::MatrixXd to_dense(const SparseMatrix& A) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(A.n_rows, A.n_cols);
    for (index_t i = 0; i < A.n_rows; ++i)
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p)
            M(i, A.col_indices[static_cast<std::size_t>(p)]) = A.values[static_cast<std::size_t>(p)];
    return M;
}

inline SparseMatrix from_dense(const Eigen::MatrixXd& M, bool symmetric) {
    std::vector<std::tuple<index_t, index_t, double>> trip;
    for (index_t i = 0; i < static_cast<index_t>(M.rows()); ++i)
        for (index_t j = 0; j < static_cast<index_t>(M.cols()); ++j)
            if (M(i, j) != 0.0) trip.emplace_back(i, j, M(i, j));
    return SparseMatrix::from_triplets(static_cast<index_t>(M.rows()), static_cast<index_t>(M.cols()),
                                       std::move(trip), symmetric);
}

inline Eigen::VectorXd to_eigen(const DenseVector& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline DenseVector from_eigen(const Eigen::VectorXd& v) {
    return DenseVector(v.data(), v.data() + v.size());
}

/// Random SPD matrix with log-uniform spectrum in [lo, hi].
inline Eigen::MatrixXd random_spd(int n, std::mt19937_64& rng, double lo = 1e-2, double hi = 1.0) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = gauss(rng);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    Eigen::MatrixXd Q = qr.householderQ();
    std::uniform_real_distribution<double> uni(std::log(lo), std::log(hi));
    Eigen::VectorXd lambda(n);
    for (int i = 0; i < n; ++i) lambda(i) = std::exp(uni(rng));
    lambda(0) = lo;  // pin the extremes so kappa is exact
    lambda(n - 1) = hi;
    return Q * lambda.asDiagonal() * Q.transpose();
}

inline DenseVector random_vector(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    DenseVector v(static_cast<std::size_t>(n));
    for (double& x : v) x = uni(rng);
    return v;
}

/// Eigenvalues of B A for SPD A, B (via the generalized problem A v = λ B^{-1} v).
struct PreconditionedEigen {
    Eigen::VectorXd lambda;   // ascending
    Eigen::MatrixXd V;        // BA V = V Λ, with Vᵀ B^{-1} V = I
    Eigen::MatrixXd V_inv;
};

inline PreconditionedEigen preconditioned_eigen(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    const Eigen::MatrixXd Binv = B.inverse();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(A, (Binv + Binv.transpose()) / 2.0);
    PreconditionedEigen out;
    out.lambda = ges.eigenvalues();
    out.V = ges.eigenvectors();
    out.V_inv = out.V.transpose() * (Binv + Binv.transpose()) / 2.0;
    return out;
}

/// Columns of a (possibly nonlinear) operator applied to unit vectors.
template <typename Fn>
Eigen::MatrixXd densify(Fn&& op, int n) {
    Eigen::MatrixXd M(n, n);
    for (int j = 0; j < n; ++j) {
        DenseVector e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        const DenseVector col = op(e);
        for (int i = 0; i < n; ++i) M(i, j) = col[static_cast<std::size_t>(i)];
    }
    return M;
}

/// Standard preconditioned conjugate gradients (fixed SPD B), dense oracle.
inline Eigen::VectorXd dense_pcg(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                 const Eigen::VectorXd& b, int iters) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(b.size());
    Eigen::VectorXd r = b;
    Eigen::VectorXd z = B * r;
    Eigen::VectorXd d = z;
    double rz = r.dot(z);
    for (int j = 0; j < iters; ++j) {
        if (r.norm() == 0.0) break;
        const Eigen::VectorXd Ad = A * d;
        const double alpha = rz / d.dot(Ad);
        x += alpha * d;
        r -= alpha * Ad;
        z = B * r;
        const double rz_next = r.dot(z);
        d = z + (rz_next / rz) * d;
        rz = rz_next;
    }
    return x;
}

} // namespace mamg::test

#endif // MAMG_TESTS_ORACLE_UTILS_HPP
