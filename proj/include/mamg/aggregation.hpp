// SPDX-License-Identifier: Apache-2.0

#ifndef MAMG_AGGREGATION_HPP
#define MAMG_AGGREGATION_HPP

#include "mamg/sparse_matrix.hpp"
#include "mamg/types.hpp"

namespace mamg {

/// Partition of the fine nodes into aggregates. Every node belongs to exactly
/// one aggregate and every aggregate is non-empty, so the piecewise-constant
/// prolongation has full column rank.
struct AggregateMap {
    std::vector<index_t> assignment;  // fine index -> aggregate id
    index_t n_aggregates = 0;
};

/// Greedy strength-based aggregation. j is a strong neighbor of i iff
/// |a_ij| >= theta * sqrt(a_ii * a_jj). Nodes are swept in index order; each
/// unaggregated node seeds an aggregate of itself plus its unaggregated strong
/// neighbors. A node left without unaggregated strong neighbors joins the
/// already-assigned neighbor of strongest normalized connection, or forms a
/// singleton if it has no assigned neighbors. Deterministic for fixed input.
AggregateMap aggregate(const SparseMatrix& A, double theta);

/// One greedy pairing sweep: each unaggregated node pairs with its strongest
/// unaggregated strong neighbor (ties toward the lower index); nodes without
/// one stay singletons for this round. Deterministic for fixed input.
AggregateMap aggregate_pairwise_round(const SparseMatrix& A, double theta);

/// map_coarse applied after map_fine.
AggregateMap compose(const AggregateMap& map_fine, const AggregateMap& map_coarse);

/// Piecewise-constant prolongation: P(i, c) = 1 iff node i is in aggregate c;
/// exactly one entry per row.
SparseMatrix build_prolongation(const AggregateMap& map);

} // namespace mamg

#endif // MAMG_AGGREGATION_HPP
