// SPDX-License-Identifier: Apache-2.0

#include "mamg/hierarchy.hpp"

#include <sstream>

namespace mamg {

void Hierarchy::coarse_solve(const DenseVector& b, DenseVector& x) const {
    if (coarse_dense_) {
        coarse_dense_->solve(b, x);
    } else {
        coarse_envelope_->solve(b, x);
    }
}

void Hierarchy::second_level_solve(const DenseVector& b, DenseVector& x) const {
    prepare_second_level();
    second_level_->solve(b, x);
}

void Hierarchy::prepare_second_level() const {
    if (num_levels() < 2) throw std::invalid_argument("second_level_solve: hierarchy has fewer than 2 levels");
    std::lock_guard<std::mutex> lock(*second_level_mutex_);
    if (!second_level_) second_level_ = std::make_unique<EnvelopeCholesky>(levels_[1].A);
}

std::string Hierarchy::summary_csv() const {
    std::ostringstream os;
    os << "level,dim,nnz,operator_complexity\n";
    double nnz0 = static_cast<double>(levels_[0].A.nnz());
    double cum = 0.0;
    for (int l = 0; l < num_levels(); ++l) {
        cum += static_cast<double>(levels_[static_cast<std::size_t>(l)].A.nnz());
        os << l << "," << dim(l) << "," << levels_[static_cast<std::size_t>(l)].A.nnz() << ","
           << (cum / nnz0) << "\n";
    }
    return os.str();
}

Hierarchy build_hierarchy(const SparseMatrix& A, const HierarchyOptions& opts) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("build_hierarchy: matrix not square");
    if (!A.symmetric) throw std::invalid_argument("build_hierarchy: matrix must be flagged symmetric");
    if (opts.coarsest_size < 1 || opts.coarsest_size > 200)
        throw std::invalid_argument("build_hierarchy: coarsest_size must be in [1, 200]");
    if (opts.max_levels < 1) throw std::invalid_argument("build_hierarchy: max_levels must be >= 1");

    Hierarchy H;
    H.second_level_mutex_ = std::make_unique<std::mutex>();
    H.levels_.push_back(Level{A, SparseMatrix{}, AggregateMap{}, SmootherData{}});

    if (opts.pair_rounds < 1) throw std::invalid_argument("build_hierarchy: pair_rounds must be >= 1");

    while (H.levels_.back().A.n_rows > opts.coarsest_size &&
           static_cast<int>(H.levels_.size()) < opts.max_levels) {
        Level& fine = H.levels_.back();

        // Composite pairing: pair, then pair the pair graph again. Two rounds
        // give compact grid-aligned quads and a coarsening ratio near four.
        AggregateMap map = aggregate_pairwise_round(fine.A, opts.theta);
        for (int round = 1; round < opts.pair_rounds; ++round) {
            if (map.n_aggregates <= opts.coarsest_size) break;
            const SparseMatrix Around = triple_product(build_prolongation(map), fine.A);
            map = compose(map, aggregate_pairwise_round(Around, opts.theta));
        }

        if (map.n_aggregates == fine.A.n_rows)
            throw SetupError("build_hierarchy: aggregation stagnated (n_aggregates == n) at dimension " +
                             std::to_string(fine.A.n_rows));
        SparseMatrix P = build_prolongation(map);
        SparseMatrix Ac = triple_product(P, fine.A);
        fine.P = std::move(P);
        fine.aggregates = std::move(map);
        H.levels_.push_back(Level{std::move(Ac), SparseMatrix{}, AggregateMap{}, SmootherData{}});
    }

    // Addresses are final from here on; wire the smoother views.
    for (Level& lvl : H.levels_) lvl.smoother = SmootherData(lvl.A);

    const SparseMatrix& Ac = H.levels_.back().A;
    if (Ac.n_rows <= 256) {
        H.coarse_dense_ = std::make_unique<DenseCholesky>(Ac);
    } else {
        // Reachable only when max_levels truncates coarsening.
        H.coarse_envelope_ = std::make_unique<EnvelopeCholesky>(Ac);
    }
    return H;
}

} // namespace mamg
