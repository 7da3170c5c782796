// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_SPECTRAL_HPP
#define MAMG_SPECTRAL_HPP

#include "mamg/accelerators.hpp"
#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

#include <cstdint>

namespace mamg {

/// Extreme-eigenvalue estimates of a preconditioned operator B A.
struct RitzEstimate {
    double lambda_min_est = 0.0;  // 0.95 * smallest Ritz value
    double lambda_max_est = 1.0;  // largest Ritz value, clamped up to >= 1
    double ritz_min = 0.0;        // raw extremes
    double ritz_max = 1.0;
    int steps_used = 0;
};

/// Runs m_steps of preconditioned CG on A with preconditioner B from a seeded
/// random right-hand side and extracts the Lanczos tridiagonal from the CG
/// coefficients (B A is self-adjoint in the B^{-1} inner product). Returns the
/// extreme Ritz values with the safety adjustments above. On breakdown (zero
/// residual or an indefinite probe) the estimates from the completed steps are
/// returned. Deterministic for a fixed seed.
RitzEstimate estimate_bounds(const SparseMatrix& A, const PrecondFn& B, int m_steps = 20,
                             std::uint64_t seed = 1234);

} // namespace mamg

#endif // MAMG_SPECTRAL_HPP
