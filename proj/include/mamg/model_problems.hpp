// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_MODEL_PROBLEMS_HPP
#define MAMG_MODEL_PROBLEMS_HPP

#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

#include <string>

namespace mamg {

/// The three benchmark problems on the unit square, discretized by linear
/// finite elements on the uniform right-angled triangulation with homogeneous
/// Dirichlet boundary conditions (boundary unknowns eliminated).
enum class Example {
    Poisson,        // -Δu = f
    JumpDiffusion,  // -div(a ∇u), a = 1 in [.25,.5]² ∪ [.5,.75]² (closed), 1e-6 elsewhere
    Anisotropic,    // -u_xx - eps u_yy with eps = 1e-3
};

struct ProblemSpec {
    Example example = Example::Poisson;
    int m = 64;                    // mesh parameter, h = 1/m
    double jump_low = 1e-6;        // coefficient outside the unit regions (Example 2)
    double anisotropy_eps = 1e-3;  // y-direction coefficient (Example 3)

    /// Interior degree-of-freedom count (m-1)².
    index_t n_dofs() const { return static_cast<index_t>(m - 1) * static_cast<index_t>(m - 1); }
};

Example parse_example(const std::string& name);     // "poisson" | "jump" | "aniso"
std::string example_name(Example e);

/// Assembles the SPD stiffness matrix over interior nodes. The coefficient of
/// Example 2 is evaluated at element centroids (piecewise constant per
/// element, closed regions); Example 3 uses the constant tensor diag(1, eps).
SparseMatrix assemble(const ProblemSpec& spec);

/// x_true = [1, 2, ..., N]
DenseVector true_solution(index_t n);

/// b = A x_true
DenseVector rhs_for(const SparseMatrix& A, const DenseVector& x_true);

} // namespace mamg

#endif // MAMG_MODEL_PROBLEMS_HPP
