// SPDX-License-Identifier: Apache-2.0

#include "mamg/cycles.hpp"

#include "mamg/spectral.hpp"
#include "mamg/vector_ops.hpp"

#include <cmath>

namespace mamg {

void CycleSpec::validate() const {
    if (k < 1) throw std::invalid_argument("CycleSpec: k must be >= 1");
    if (bound_policy == BoundsPolicy::Fixed) fixed.validate();
}

std::string cycle_kind_name(CycleKind kind) {
    switch (kind) {
        case CycleKind::TwoGrid: return "tg";
        case CycleKind::KV: return "kv";
        case CycleKind::AMLI: return "amli";
        case CycleKind::K: return "k";
        case CycleKind::H: return "h";
        case CycleKind::N: return "n";
    }
    return "?";
}

namespace {

/// y = Pᵀ x, deterministic scatter in row order.
DenseVector restrict_residual(const SparseMatrix& P, const DenseVector& x) {
    DenseVector y(static_cast<std::size_t>(P.n_cols), 0.0);
    for (index_t i = 0; i < P.n_rows; ++i)
        for (index_t p = P.row_offsets[i]; p < P.row_offsets[i + 1]; ++p)
            y[static_cast<std::size_t>(P.col_indices[static_cast<std::size_t>(p)])] +=
                P.values[static_cast<std::size_t>(p)] * x[static_cast<std::size_t>(i)];
    return y;
}

/// x += P e
void prolongate_add(const SparseMatrix& P, const DenseVector& e, DenseVector& x) {
    for (index_t i = 0; i < P.n_rows; ++i)
        for (index_t p = P.row_offsets[i]; p < P.row_offsets[i + 1]; ++p)
            x[static_cast<std::size_t>(i)] +=
                P.values[static_cast<std::size_t>(p)] * e[static_cast<std::size_t>(P.col_indices[static_cast<std::size_t>(p)])];
}

} // namespace

MultigridPreconditioner::MultigridPreconditioner(const Hierarchy& hierarchy, const CycleSpec& spec,
                                                 std::uint64_t seed)
    : hierarchy_(&hierarchy), spec_(spec) {
    spec_.validate();
    const int J = hierarchy.num_levels();
    if (spec_.kind == CycleKind::TwoGrid) {
        if (J < 2) throw std::invalid_argument("two-grid needs a hierarchy with >= 2 levels");
        hierarchy.prepare_second_level();
    }

    bounds_.assign(static_cast<std::size_t>(J), spec_.fixed);

    const bool needs_bounds =
        spec_.kind == CycleKind::AMLI || spec_.kind == CycleKind::H || spec_.kind == CycleKind::N;
    if (needs_bounds && spec_.bound_policy == BoundsPolicy::EstimatePerLevel) {
        // Bottom-up: the coarsest level first, each estimate uses the frozen
        // bounds of the levels below it. The probe runs the cycle in
        // polynomial-init mode, which keeps the probed operator linear.
        for (int l = J - 1; l >= 1; --l) {
            PrecondFn Bl = [this, l](const DenseVector& v) {
                return cycle_apply_impl(l, v, InitMode::Polynomial);
            };
            const RitzEstimate est = estimate_bounds(hierarchy.level(l).A, Bl, 20, seed);
            bounds_[static_cast<std::size_t>(l)] =
                SpectralBounds{est.lambda_min_est, est.lambda_max_est};
        }
    }
}

DenseVector MultigridPreconditioner::apply(const DenseVector& b) const {
    return cycle_apply(0, b);
}

DenseVector MultigridPreconditioner::cycle_apply(int level, const DenseVector& b) const {
    return cycle_apply_impl(level, b, spec_.init);
}

DenseVector MultigridPreconditioner::cycle_apply_impl(int level, const DenseVector& b,
                                                      InitMode init) const {
    const Hierarchy& H = *hierarchy_;
    const int J = H.num_levels();
    if (level < 0 || level >= J) throw std::invalid_argument("cycle_apply: level out of range");
    if (static_cast<index_t>(b.size()) != H.dim(level))
        throw std::invalid_argument("cycle_apply: dimension mismatch");

    if (level == J - 1) {
        DenseVector x;
        H.coarse_solve(b, x);
        return x;
    }

    const Level& lvl = H.level(level);

    if (spec_.kind == CycleKind::TwoGrid) {
        if (level != 0) throw std::invalid_argument("two-grid cycle is a two-level method");
        DenseVector x = zeros(b.size());
        gs_forward(lvl.smoother, b, x);
        DenseVector r(b.size());
        residual(lvl.A, b, x, r);
        DenseVector rc = restrict_residual(lvl.P, r);
        DenseVector e;
        H.second_level_solve(rc, e);
        prolongate_add(lvl.P, e, x);
        gs_backward(lvl.smoother, b, x);
        return x;
    }

    // Presmoothing x <- M b (one forward sweep from zero).
    DenseVector x = zeros(b.size());
    gs_forward(lvl.smoother, b, x);

    // Restrict the residual.
    DenseVector r(b.size());
    residual(lvl.A, b, x, r);
    DenseVector rc = restrict_residual(lvl.P, r);

    // Coarse-grid correction: k inner steps of the kind-specific solver, with
    // the next-coarser cycle as the preconditioner. This applies on every
    // non-coarsest level, including the one just above the exact solve.
    DenseVector e;
    {
        const SparseMatrix& Ac = H.level(level + 1).A;
        PrecondFn Bnext = [this, level, init](const DenseVector& v) {
            return cycle_apply_impl(level + 1, v, init);
        };
        const SpectralBounds& bnds = bounds_[static_cast<std::size_t>(level + 1)];
        switch (spec_.kind) {
            case CycleKind::KV: {
                e = zeros(rc.size());
                DenseVector t(rc.size());
                for (int i = 0; i < spec_.k; ++i) {
                    residual(Ac, rc, e, t);
                    axpy(1.0, Bnext(t), e);
                }
                break;
            }
            case CycleKind::AMLI:
                e = chebyshev_apply(Ac, Bnext, rc, spec_.k, bnds);
                break;
            case CycleKind::H:
                e = heavy_ball_apply(Ac, Bnext, rc, spec_.k, bnds, init);
                break;
            case CycleKind::N:
                e = nesterov_apply(Ac, Bnext, rc, spec_.k, bnds, init);
                break;
            case CycleKind::K:
                e = npcg_apply(Ac, Bnext, rc, spec_.k);
                break;
            case CycleKind::TwoGrid:
                break;  // handled above
        }
    }

    prolongate_add(lvl.P, e, x);

    // Postsmoothing x <- x + Mᵀ(b - A x) (one backward sweep).
    gs_backward(lvl.smoother, b, x);
    return x;
}

DenseVector two_grid_apply(const Hierarchy& hierarchy, const DenseVector& b) {
    CycleSpec spec;
    spec.kind = CycleKind::TwoGrid;
    MultigridPreconditioner tg(hierarchy, spec);
    return tg.apply(b);
}

double average_convergence_factor(const std::vector<double>& h) {
    const int m = static_cast<int>(h.size()) - 1;
    if (m < 1) return 0.0;
    if (m >= 5) return std::pow(h[static_cast<std::size_t>(m)] / h[static_cast<std::size_t>(m - 5)], 0.2);
    return std::pow(h[static_cast<std::size_t>(m)] / h[0], 1.0 / m);
}

SolveReport stationary_solve(const SparseMatrix& A, const PrecondFn& B, const DenseVector& b,
                             double tol, int max_iters, DenseVector* x_out) {
    const double bnorm = norm2(b);
    if (bnorm == 0.0) throw std::invalid_argument("stationary_solve: b must be nonzero");

    SolveReport rep;
    rep.residual_history.push_back(1.0);
    DenseVector x = zeros(b.size());
    DenseVector r = b;
    rep.status = SolveStatus::MaxIterations;

    for (int it = 1; it <= max_iters; ++it) {
        DenseVector dx;
        try {
            dx = B(r);
        } catch (const DivergenceError&) {
            rep.status = SolveStatus::Diverged;
            break;
        }
        axpy(1.0, dx, x);
        residual(A, b, x, r);
        const double rel = norm2(r) / bnorm;
        rep.residual_history.push_back(rel);
        rep.iterations = it;
        if (!std::isfinite(rel) || rel > 1e6) {
            rep.status = SolveStatus::Diverged;
            break;
        }
        if (rel <= tol) {
            rep.status = SolveStatus::Converged;
            break;
        }
    }
    rep.avg_factor = average_convergence_factor(rep.residual_history);
    if (x_out) *x_out = std::move(x);
    return rep;
}

} // namespace mamg
