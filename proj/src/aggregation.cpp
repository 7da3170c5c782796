// SPDX-License-Identifier: Apache-2.0

#include "mamg/aggregation.hpp"

#include <cmath>

namespace mamg {

AggregateMap aggregate(const SparseMatrix& A, double theta) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("aggregate: matrix not square");
    if (theta < 0.0 || theta >= 1.0) throw std::invalid_argument("aggregate: theta must be in [0,1)");
    const index_t n = A.n_rows;

    DenseVector diag(static_cast<std::size_t>(n), 0.0);
    for (index_t i = 0; i < n; ++i) {
        const double d = A.at(i, i);
        if (d <= 0.0) throw SetupError("aggregate: non-positive diagonal at row " + std::to_string(i));
        diag[static_cast<std::size_t>(i)] = d;
    }

    auto strength = [&](index_t i, index_t p) {
        const index_t j = A.col_indices[static_cast<std::size_t>(p)];
        return std::abs(A.values[static_cast<std::size_t>(p)]) /
               std::sqrt(diag[static_cast<std::size_t>(i)] * diag[static_cast<std::size_t>(j)]);
    };

    AggregateMap map;
    map.assignment.assign(static_cast<std::size_t>(n), -1);
    index_t next_id = 0;

    for (index_t i = 0; i < n; ++i) {
        if (map.assignment[static_cast<std::size_t>(i)] >= 0) continue;

        std::vector<index_t> members;
        bool has_assigned_neighbor = false;
        index_t best_join = -1;
        double best_join_strength = -1.0;
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
            const index_t j = A.col_indices[static_cast<std::size_t>(p)];
            if (j == i) continue;
            const double s = strength(i, p);
            const index_t aj = map.assignment[static_cast<std::size_t>(j)];
            if (aj < 0) {
                if (s >= theta) members.push_back(j);
            } else if (s > best_join_strength) {
                has_assigned_neighbor = true;
                best_join_strength = s;
                best_join = aj;
            }
        }

        if (members.empty() && has_assigned_neighbor) {
            // Isolated within the sweep: join the strongest-connected aggregate.
            map.assignment[static_cast<std::size_t>(i)] = best_join;
        } else {
            const index_t id = next_id++;
            map.assignment[static_cast<std::size_t>(i)] = id;
            for (index_t j : members) map.assignment[static_cast<std::size_t>(j)] = id;
        }
    }
    map.n_aggregates = next_id;
    return map;
}

AggregateMap aggregate_pairwise_round(const SparseMatrix& A, double theta) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("aggregate_pairwise_round: matrix not square");
    if (theta < 0.0 || theta >= 1.0) throw std::invalid_argument("aggregate_pairwise_round: theta must be in [0,1)");
    const index_t n = A.n_rows;

    DenseVector diag(static_cast<std::size_t>(n), 0.0);
    for (index_t i = 0; i < n; ++i) {
        const double d = A.at(i, i);
        if (d <= 0.0)
            throw SetupError("aggregate_pairwise_round: non-positive diagonal at row " + std::to_string(i));
        diag[static_cast<std::size_t>(i)] = d;
    }

    AggregateMap map;
    map.assignment.assign(static_cast<std::size_t>(n), -1);
    index_t next_id = 0;
    for (index_t i = 0; i < n; ++i) {
        if (map.assignment[static_cast<std::size_t>(i)] >= 0) continue;
        index_t mate_strong = -1, mate_any = -1;
        double best_strong = -1.0, best_any = -1.0;
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
            const index_t j = A.col_indices[static_cast<std::size_t>(p)];
            if (j == i || map.assignment[static_cast<std::size_t>(j)] >= 0) continue;
            const double s = std::abs(A.values[static_cast<std::size_t>(p)]) /
                             std::sqrt(diag[static_cast<std::size_t>(i)] * diag[static_cast<std::size_t>(j)]);
            if (s >= theta && s > best_strong) {
                best_strong = s;
                mate_strong = j;
            }
            if (s > best_any) {
                best_any = s;
                mate_any = j;
            }
        }
        // Without a strong candidate, fall back to the strongest free
        // neighbor of any strength (a level whose strong directions are
        // exhausted, e.g. anisotropic strips, must still coarsen).
        const index_t mate = (mate_strong >= 0) ? mate_strong : mate_any;
        const index_t id = next_id++;
        map.assignment[static_cast<std::size_t>(i)] = id;
        if (mate >= 0) map.assignment[static_cast<std::size_t>(mate)] = id;
    }
    map.n_aggregates = next_id;
    return map;
}

AggregateMap compose(const AggregateMap& map_fine, const AggregateMap& map_coarse) {
    if (static_cast<index_t>(map_coarse.assignment.size()) != map_fine.n_aggregates)
        throw std::invalid_argument("compose: dimension mismatch");
    AggregateMap out;
    out.assignment.resize(map_fine.assignment.size());
    for (std::size_t i = 0; i < map_fine.assignment.size(); ++i)
        out.assignment[i] =
            map_coarse.assignment[static_cast<std::size_t>(map_fine.assignment[i])];
    out.n_aggregates = map_coarse.n_aggregates;
    return out;
}

SparseMatrix build_prolongation(const AggregateMap& map) {
    const index_t n = static_cast<index_t>(map.assignment.size());
    SparseMatrix P;
    P.n_rows = n;
    P.n_cols = map.n_aggregates;
    P.row_offsets.resize(static_cast<std::size_t>(n) + 1);
    P.col_indices.resize(static_cast<std::size_t>(n));
    P.values.assign(static_cast<std::size_t>(n), 1.0);
    for (index_t i = 0; i <= n; ++i) P.row_offsets[static_cast<std::size_t>(i)] = i;
    for (index_t i = 0; i < n; ++i) {
        const index_t c = map.assignment[static_cast<std::size_t>(i)];
        if (c < 0 || c >= map.n_aggregates) throw std::invalid_argument("build_prolongation: invalid map");
        P.col_indices[static_cast<std::size_t>(i)] = c;
    }
    return P;
}

} // namespace mamg
