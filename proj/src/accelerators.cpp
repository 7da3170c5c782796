// SPDX-License-Identifier: Apache-2.0

#include "mamg/accelerators.hpp"

#include "mamg/vector_ops.hpp"

#include <cmath>

namespace mamg {

// Exact line search along the preconditioned residual direction z = Bb:
// alpha = (b, z)/(A z, z). This is the energy minimizer over the line, so
// alpha stays inside [1/lambda_max(BA), 1/lambda_min(BA)] and the step
// reproduces x = A^{-1} b exactly for B = A^{-1}.
DenseVector steepest_descent_init(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b) {
    DenseVector z = B(b);
    const double num = dot(b, z);
    if (norm2(b) == 0.0 || num == 0.0) return zeros(b.size());
    const double den = dot(spmv(A, z), z);
    if (den <= 0.0 || num < 0.0)
        throw DivergenceError("steepest_descent_init: non-positive curvature (A or B not SPD)");
    scale(num / den, z);
    return z;
}

DenseVector chebyshev_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                            int k, const SpectralBounds& bounds) {
    if (k < 1) throw std::invalid_argument("chebyshev_apply: k must be >= 1");
    bounds.validate();
    const double rho = 1.0 - bounds.lambda_min / bounds.lambda_max;

    if (rho == 0.0) {
        // kappa = 1: the coefficient formula degenerates; Richardson with the
        // exact step 1/lambda_max has the same limit behavior.
        DenseVector x = zeros(b.size());
        DenseVector r(b.size());
        for (int i = 0; i < k; ++i) {
            residual(A, b, x, r);
            axpy(1.0 / bounds.lambda_max, B(r), x);
        }
        return x;
    }

    DenseVector x_prev = zeros(b.size());
    DenseVector x = B(b);  // x¹
    const double t = 1.0 / rho;
    double ratio = t;  // C_{j+1}(t)/C_j(t), via C_{j+1} = 2t C_j - C_{j-1}
    DenseVector r(b.size()), tmp(b.size());
    for (int j = 1; j < k; ++j) {
        ratio = 2.0 * t - 1.0 / ratio;             // C_{j+1}/C_j
        const double omega = 2.0 / (rho * ratio);  // 2 C_j / (rho C_{j+1})
        residual(A, b, x, r);
        tmp = B(r);
        DenseVector x_next(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            x_next[i] = omega * (x[i] + tmp[i] - x_prev[i]) + x_prev[i];
        x_prev = std::move(x);
        x = std::move(x_next);
    }
    return x;
}

namespace {

DenseVector momentum_first_step(const SparseMatrix& A, const DenseVector& b, DenseVector&& Bb,
                                InitMode init, double q0_step) {
    if (init == InitMode::SteepestDescent) {
        const double num = dot(b, Bb);
        if (num == 0.0) return zeros(b.size());
        const double den = dot(spmv(A, Bb), Bb);
        if (den <= 0.0 || num < 0.0)
            throw DivergenceError("momentum init: non-positive curvature (A or B not SPD)");
        scale(num / den, Bb);
        return std::move(Bb);
    }
    scale(q0_step, Bb);
    return std::move(Bb);
}

} // namespace

DenseVector heavy_ball_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                             int k, const SpectralBounds& bounds, InitMode init) {
    if (k < 1) throw std::invalid_argument("heavy_ball_apply: k must be >= 1");
    bounds.validate();
    const double sl = std::sqrt(bounds.lambda_max);
    const double sm = std::sqrt(bounds.lambda_min);
    const double alpha = 4.0 / ((sl + sm) * (sl + sm));
    const double beta = ((sl - sm) / (sl + sm)) * ((sl - sm) / (sl + sm));

    if (init == InitMode::Polynomial && bounds.lambda_min == 0.0)
        throw std::invalid_argument("heavy_ball_apply: polynomial init undefined for lambda_min = 0");
    const double q0 = (bounds.lambda_min > 0.0)
                          ? 0.5 / bounds.lambda_max + 0.5 / bounds.lambda_min
                          : 0.0;

    DenseVector x_prev = zeros(b.size());
    DenseVector x = momentum_first_step(A, b, B(b), init, q0);
    DenseVector r(b.size());
    for (int i = 2; i <= k; ++i) {
        residual(A, b, x, r);
        DenseVector z = B(r);
        DenseVector x_next(b.size());
        for (std::size_t j = 0; j < b.size(); ++j)
            x_next[j] = x[j] + alpha * z[j] + beta * (x[j] - x_prev[j]);
        x_prev = std::move(x);
        x = std::move(x_next);
    }
    return x;
}

DenseVector nesterov_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                           int k, const SpectralBounds& bounds, InitMode init, bool printed_form) {
    if (k < 1) throw std::invalid_argument("nesterov_apply: k must be >= 1");
    bounds.validate();
    const double L = bounds.lambda_max;
    const double sl = std::sqrt(L);
    const double sm = std::sqrt(bounds.lambda_min);
    const double beta = (sl - sm) / (sl + sm);

    DenseVector Bb = B(b);
    DenseVector y_prev = Bb;  // y¹ = (1/L) B b
    scale(1.0 / L, y_prev);
    DenseVector x_prev = zeros(b.size());
    DenseVector x = momentum_first_step(A, b, std::move(Bb), init, 1.0 / L);

    DenseVector r(b.size());
    for (int i = 2; i <= k; ++i) {
        residual(A, b, x, r);
        DenseVector y = B(r);
        for (std::size_t j = 0; j < b.size(); ++j) y[j] = x[j] + y[j] / L;

        DenseVector x_next(b.size());
        if (!printed_form) {
            // x^i = (1+beta) y^i - beta y^{i-1}; y^{i-1} is the cached update
            // of the previous step, so each step costs one application of B.
            for (std::size_t j = 0; j < b.size(); ++j)
                x_next[j] = (1.0 + beta) * y[j] - beta * y_prev[j];
        } else {
            // Minus sign inside the trailing bracket; needs a second B
            // application per step. Comparison switch only.
            residual(A, b, x_prev, r);
            DenseVector w = B(r);
            for (std::size_t j = 0; j < b.size(); ++j)
                x_next[j] = (1.0 + beta) * y[j] - beta * (x_prev[j] - w[j] / L);
        }
        y_prev = std::move(y);
        x_prev = std::move(x);
        x = std::move(x_next);
    }
    return x;
}

DenseVector npcg_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b, int k) {
    if (k < 1) throw std::invalid_argument("npcg_apply: k must be >= 1");
    DenseVector x = zeros(b.size());
    DenseVector r = b;
    std::vector<DenseVector> dirs, Adirs;
    std::vector<double> dAd;
    for (int j = 0; j < k; ++j) {
        if (norm2(r) == 0.0) break;
        DenseVector d = B(r);
        // Full A-orthogonalization against all previous directions.
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            const double c = dot(Adirs[i], d) / dAd[i];
            axpy(-c, dirs[i], d);
        }
        DenseVector Ad = spmv(A, d);
        const double c = dot(d, Ad);
        if (c <= 0.0) throw DivergenceError("npcg_apply: non-positive direction curvature");
        const double gamma = dot(r, d) / c;
        axpy(gamma, d, x);
        axpy(-gamma, Ad, r);
        dirs.push_back(std::move(d));
        Adirs.push_back(std::move(Ad));
        dAd.push_back(c);
    }
    return x;
}

} // namespace mamg
