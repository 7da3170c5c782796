// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_HIERARCHY_HPP
#define MAMG_HIERARCHY_HPP

#include "mamg/aggregation.hpp"
#include "mamg/direct_solvers.hpp"
#include "mamg/smoothers.hpp"
#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

#include <memory>
#include <mutex>
#include <string>

namespace mamg {

struct HierarchyOptions {
    double theta = 0.08;          // aggregation strength threshold
    index_t coarsest_size = 100;  // stop coarsening at or below this (cap 200)
    int max_levels = 20;
    int pair_rounds = 2;  // greedy pairing sweeps composed per level (quads by default)
};

/// One level: its operator, the prolongation towards the next level (absent on
/// the coarsest), the aggregate map that produced it, and Gauss-Seidel data.
struct Level {
    SparseMatrix A;
    SparseMatrix P;  // n_rows == dim(A); empty on the coarsest level
    AggregateMap aggregates;
    SmootherData smoother;
};

/// Unsmoothed-aggregation multilevel hierarchy: A_0 is the input matrix,
/// A_{l+1} = P_lᵀ A_l P_l, dimensions strictly decreasing, coarsest level
/// factorized exactly. Immutable once built; shareable across concurrent
/// solves.
class Hierarchy {
public:
    int num_levels() const { return static_cast<int>(levels_.size()); }
    const Level& level(int l) const { return levels_[static_cast<std::size_t>(l)]; }
    index_t dim(int l) const { return level(l).A.n_rows; }

    /// Exact solve with the cached coarsest factorization.
    void coarse_solve(const DenseVector& b, DenseVector& x) const;

    /// Exact solve with the second-level operator (two-grid method); the
    /// factorization is built on first use and cached.
    void second_level_solve(const DenseVector& b, DenseVector& x) const;

    /// Builds the second-level factorization now (so setup failures surface at
    /// setup time rather than mid-solve).
    void prepare_second_level() const;

    /// Level dims, nnz and operator complexity, as CSV.
    std::string summary_csv() const;

    friend Hierarchy build_hierarchy(const SparseMatrix& A, const HierarchyOptions& opts);

private:
    std::vector<Level> levels_;
    std::unique_ptr<DenseCholesky> coarse_dense_;
    std::unique_ptr<EnvelopeCholesky> coarse_envelope_;  // only when max_levels truncates coarsening
    mutable std::unique_ptr<EnvelopeCholesky> second_level_;
    mutable std::unique_ptr<std::mutex> second_level_mutex_;
};

Hierarchy build_hierarchy(const SparseMatrix& A, const HierarchyOptions& opts = {});

} // namespace mamg

#endif // MAMG_HIERARCHY_HPP
