// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_ACCELERATORS_HPP
#define MAMG_ACCELERATORS_HPP

#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

#include <functional>

namespace mamg {

/// Bounds on the spectrum of the preconditioned operator B A; all momentum and
/// Chebyshev parameters derive from these. lambda_max = 1 is the standard SPD
/// choice.
struct SpectralBounds {
    double lambda_min = 0.0;
    double lambda_max = 1.0;

    void validate() const {
        if (lambda_max <= 0.0) throw std::invalid_argument("SpectralBounds: lambda_max must be > 0");
        if (lambda_min < 0.0 || lambda_min > lambda_max)
            throw std::invalid_argument("SpectralBounds: need 0 <= lambda_min <= lambda_max");
    }
};

/// Application contract of a preconditioner: r -> B r. Linear for the
/// Chebyshev/heavy-ball/Nesterov inner solvers; may be nonlinear for the
/// K-cycle's flexible CG.
using PrecondFn = std::function<DenseVector(const DenseVector&)>;

/// First iterate of the momentum methods.
///  - SteepestDescent: x¹ = ((Bb,Bb)/(A Bb,Bb)) Bb, the benchmark default.
///  - Polynomial: the family-specific linear first step (Chebyshev Bb,
///    heavy ball q₀·Bb, Nesterov (1/λmax)·Bb), which makes the iterate error
///    after k steps exactly p_k(BA) e⁰ of the matching polynomial family.
enum class InitMode { SteepestDescent, Polynomial };

/// x¹ = alpha_sd · Bb with alpha_sd = (Bb,Bb)/(A Bb, Bb). Returns zero when
/// b = 0; throws DivergenceError on non-positive curvature (non-SPD B or A).
DenseVector steepest_descent_init(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b);

/// Chebyshev semi-iteration on the preconditioned system, k inner iterations
/// from x⁰ = 0, x¹ = Bb. rho = 1 - lambda_min/lambda_max; the degenerate
/// rho = 0 (kappa = 1) short-circuits to Richardson with step 1/lambda_max.
DenseVector chebyshev_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                            int k, const SpectralBounds& bounds);

/// Heavy ball iteration: x⁰ = 0, x¹ from `init`, then k-1 steps of
/// x^i = x^{i-1} + alpha B(b - A x^{i-1}) + beta (x^{i-1} - x^{i-2}) with
/// alpha = 4/(sqrt(lmax)+sqrt(lmin))², beta = ((sqrt(lmax)-sqrt(lmin))/(sqrt(lmax)+sqrt(lmin)))².
/// lambda_min = 0 is admitted (alpha = 4/lmax, beta = 1); the method may then
/// diverge for larger k.
DenseVector heavy_ball_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                             int k, const SpectralBounds& bounds,
                             InitMode init = InitMode::SteepestDescent);

/// Nesterov iteration: x⁰ = 0, x¹ from `init`, then k-1 steps of
/// x^i = (1+beta) y^i - beta y^{i-1}, y^i = x^{i-1} + (1/L) B(b - A x^{i-1}),
/// beta = (sqrt(L)-sqrt(lmin))/(sqrt(L)+sqrt(lmin)), L = lambda_max.
/// `printed_form` flips the sign of the (1/L)-term in the trailing bracket
/// (the update x^i = (1+beta)[x^{i-1} + (1/L)B r^{i-1}] - beta[x^{i-2} -
/// (1/L)B r^{i-2}]); kept for comparison only.
DenseVector nesterov_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                           int k, const SpectralBounds& bounds,
                           InitMode init = InitMode::SteepestDescent, bool printed_form = false);

/// k steps of flexible (nonlinear) preconditioned CG from x⁰ = 0 with full
/// A-orthogonalization against all previous directions. Throws
/// DivergenceError on non-positive direction curvature.
DenseVector npcg_apply(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b, int k);

} // namespace mamg

#endif // MAMG_ACCELERATORS_HPP
