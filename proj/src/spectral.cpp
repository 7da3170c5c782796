// SPDX-License-Identifier: Apache-2.0

#include "mamg/spectral.hpp"

#include "mamg/vector_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mamg {

namespace {

/// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<double> M, int n) {
    auto at = [&](int i, int j) -> double& { return M[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace

RitzEstimate estimate_bounds(const SparseMatrix& A, const PrecondFn& B, int m_steps,
                             std::uint64_t seed) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("estimate_bounds: matrix not square");
    if (m_steps < 1) throw std::invalid_argument("estimate_bounds: m_steps must be >= 1");
    const index_t n = A.n_rows;
    m_steps = std::min(m_steps, static_cast<int>(n));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    DenseVector b(static_cast<std::size_t>(n));
    for (double& v : b) v = uni(rng);

    DenseVector x = zeros(b.size());
    DenseVector r = b;
    DenseVector z = B(r);
    DenseVector d = z;
    double rz = dot(r, z);
    const double rz0 = std::abs(rz);

    std::vector<double> alphas, betas;
    for (int j = 0; j < m_steps; ++j) {
        if (rz <= 0.0) break;
        DenseVector Ad = spmv(A, d);
        const double dAd = dot(d, Ad);
        if (dAd <= 0.0) break;
        const double alpha = rz / dAd;
        alphas.push_back(alpha);
        axpy(alpha, d, x);
        axpy(-alpha, Ad, r);
        z = B(r);
        const double rz_next = dot(r, z);
        if (j + 1 == m_steps || rz_next <= 0.0 || rz_next < 1e-28 * rz0) break;
        const double beta = rz_next / rz;
        betas.push_back(beta);
        rz = rz_next;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = z[i] + beta * d[i];
    }

    RitzEstimate est;
    est.steps_used = static_cast<int>(alphas.size());
    if (alphas.empty()) {
        est.ritz_min = est.ritz_max = 1.0;
        est.lambda_min_est = 0.95;
        est.lambda_max_est = 1.0;
        return est;
    }

    // Lanczos tridiagonal from the CG coefficients.
    const int s = static_cast<int>(alphas.size());
    std::vector<double> T(static_cast<std::size_t>(s) * s, 0.0);
    for (int j = 0; j < s; ++j) {
        double dg = 1.0 / alphas[static_cast<std::size_t>(j)];
        if (j > 0) dg += betas[static_cast<std::size_t>(j - 1)] / alphas[static_cast<std::size_t>(j - 1)];
        T[static_cast<std::size_t>(j) * s + j] = dg;
        if (j + 1 < s) {
            const double od = std::sqrt(betas[static_cast<std::size_t>(j)]) / alphas[static_cast<std::size_t>(j)];
            T[static_cast<std::size_t>(j) * s + (j + 1)] = od;
            T[static_cast<std::size_t>(j + 1) * s + j] = od;
        }
    }
    const std::vector<double> ritz = jacobi_eigenvalues(std::move(T), s);
    est.ritz_min = ritz.front();
    est.ritz_max = ritz.back();
    est.lambda_min_est = 0.95 * est.ritz_min;
    est.lambda_max_est = std::max(est.ritz_max, 1.0);
    return est;
}

} // namespace mamg
