// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_CYCLES_HPP
#define MAMG_CYCLES_HPP

#include "mamg/accelerators.hpp"
#include "mamg/hierarchy.hpp"
#include "mamg/types.hpp"

#include <cstdint>
#include <string>

namespace mamg {

/// Multilevel cycle kinds: the two-grid method, the k-fold V-cycle, and the
/// cycles whose coarse-level solver is k steps of a semi-iteration
/// (Chebyshev = AMLI, heavy ball = H, Nesterov = N) or of flexible CG (K).
enum class CycleKind { TwoGrid, KV, AMLI, K, H, N };

enum class BoundsPolicy { Fixed, EstimatePerLevel };

struct CycleSpec {
    CycleKind kind = CycleKind::KV;
    int k = 2;  // inner steps; TwoGrid ignores it, KV repeats the correction k times
    BoundsPolicy bound_policy = BoundsPolicy::Fixed;
    SpectralBounds fixed;  // used by AMLI/H/N when bound_policy == Fixed
    InitMode init = InitMode::SteepestDescent;  // first momentum iterate (H/N)

    void validate() const;
};

std::string cycle_kind_name(CycleKind kind);

enum class SolveStatus { Converged, MaxIterations, Diverged };

struct SolveReport {
    int iterations = 0;
    std::vector<double> residual_history;  // relative residuals, entry 0 is 1
    double avg_factor = 0.0;               // geometric mean over the last five iterations
    SolveStatus status = SolveStatus::Converged;
};

/// The recursive multilevel preconditioner B for one (hierarchy, spec) pair.
/// Bounds are resolved at construction: fixed values everywhere, or estimated
/// per level bottom-up by the preconditioned Lanczos process and then frozen.
/// apply() is reentrant over the shared immutable hierarchy.
class MultigridPreconditioner {
public:
    MultigridPreconditioner(const Hierarchy& hierarchy, const CycleSpec& spec,
                            std::uint64_t seed = 1234);

    DenseVector apply(const DenseVector& b) const;

    /// Action of B_level at the given level (level 0 is the finest).
    DenseVector cycle_apply(int level, const DenseVector& b) const;

    const CycleSpec& spec() const { return spec_; }
    const Hierarchy& hierarchy() const { return *hierarchy_; }

    /// Bounds of B_l A_l used by the accelerator solving level-l systems.
    const SpectralBounds& level_bounds(int level) const {
        return bounds_[static_cast<std::size_t>(level)];
    }

private:
    DenseVector cycle_apply_impl(int level, const DenseVector& b, InitMode init) const;

    const Hierarchy* hierarchy_;
    CycleSpec spec_;
    std::vector<SpectralBounds> bounds_;
};

/// Two-grid method: presmooth, exact second-level solve, postsmooth.
DenseVector two_grid_apply(const Hierarchy& hierarchy, const DenseVector& b);

/// Stationary iteration x <- x + B(b - A x) from x = 0, recording relative
/// residuals. Stops at tol, at max_iters, or on divergence (relative residual
/// above 1e6, a non-finite value, or an accelerator breakdown signal).
SolveReport stationary_solve(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                             double tol = 1e-12, int max_iters = 999,
                             DenseVector* x_out = nullptr);

/// (r_m / r_{m-5})^{1/5}; with fewer than five recorded iterations, the
/// geometric mean over what exists.
double average_convergence_factor(const std::vector<double>& residual_history);

} // namespace mamg

#endif // MAMG_CYCLES_HPP
