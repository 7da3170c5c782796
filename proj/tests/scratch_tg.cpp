// Scratch: two-grid factors for hand-built aggregate geometries.
#include "mamg/aggregation.hpp"
#include "mamg/cycles.hpp"
#include "mamg/model_problems.hpp"
#include "mamg/vector_ops.hpp"

#include <cstdio>
#include <functional>

using namespace mamg;

static Hierarchy manual_two_level(const SparseMatrix& A, const AggregateMap& map) {
    // Emulate build_hierarchy with a prescribed first-level map by feeding a
    // coarsest_size bigger than the coarse dim.
    (void)map;
    throw std::runtime_error("unused");
}

int main() {
    ProblemSpec ps;
    ps.m = 64;
    const SparseMatrix A = assemble(ps);
    const int W = ps.m - 1;
    const index_t n = A.n_rows;
    const DenseVector b = rhs_for(A, true_solution(n));

    auto tg_factor = [&](const AggregateMap& map, const char* label) {
        SparseMatrix P = build_prolongation(map);
        SparseMatrix A2 = triple_product(P, A);
        SmootherData S(A);
        EnvelopeCholesky F(A2);
        PrecondFn fn = [&](const DenseVector& r) {
            DenseVector x = zeros(r.size());
            gs_forward(S, r, x);
            DenseVector res(r.size());
            residual(A, r, x, res);
            DenseVector rc(static_cast<std::size_t>(P.n_cols), 0.0);
            for (index_t i = 0; i < P.n_rows; ++i)
                rc[static_cast<std::size_t>(P.col_indices[static_cast<std::size_t>(i)])] +=
                    res[static_cast<std::size_t>(i)];
            DenseVector e = F.solve(rc);
            for (index_t i = 0; i < P.n_rows; ++i)
                x[static_cast<std::size_t>(i)] +=
                    e[static_cast<std::size_t>(P.col_indices[static_cast<std::size_t>(i)])];
            gs_backward(S, r, x);
            return x;
        };
        SolveReport rep = stationary_solve(A, fn, b);
        std::printf("%-18s n_agg=%5d  iters=%4d  factor=%.6f\n", label, map.n_aggregates,
                    rep.iterations, rep.avg_factor);
    };

    // 2x2 boxes
    {
        AggregateMap map;
        map.assignment.resize(static_cast<std::size_t>(n));
        const int cw = (W + 1) / 2;
        for (int r = 0; r < W; ++r)
            for (int c = 0; c < W; ++c)
                map.assignment[static_cast<std::size_t>(r) * W + c] =
                    static_cast<index_t>((r / 2) * cw + (c / 2));
        map.n_aggregates = cw * ((W + 1) / 2);
        tg_factor(map, "boxes 2x2");
    }
    // horizontal pairs
    {
        AggregateMap map;
        map.assignment.resize(static_cast<std::size_t>(n));
        const int cw = (W + 1) / 2;
        for (int r = 0; r < W; ++r)
            for (int c = 0; c < W; ++c)
                map.assignment[static_cast<std::size_t>(r) * W + c] =
                    static_cast<index_t>(r * cw + (c / 2));
        map.n_aggregates = W * cw;
        tg_factor(map, "horizontal pairs");
    }
    // 3x3 boxes
    {
        AggregateMap map;
        map.assignment.resize(static_cast<std::size_t>(n));
        const int cw = (W + 2) / 3;
        for (int r = 0; r < W; ++r)
            for (int c = 0; c < W; ++c)
                map.assignment[static_cast<std::size_t>(r) * W + c] =
                    static_cast<index_t>((r / 3) * cw + (c / 3));
        map.n_aggregates = cw * ((W + 2) / 3);
        tg_factor(map, "boxes 3x3");
    }
    // current greedy
    {
        AggregateMap map = aggregate(A, 0.08);
        tg_factor(map, "greedy (current)");
        std::vector<int> sizes(static_cast<std::size_t>(map.n_aggregates), 0);
        for (index_t a : map.assignment) ++sizes[static_cast<std::size_t>(a)];
        std::vector<int> hist(16, 0);
        for (int s : sizes) ++hist[static_cast<std::size_t>(std::min(s, 15))];
        std::printf("  sizes:");
        for (int s = 1; s < 16; ++s)
            if (hist[static_cast<std::size_t>(s)]) std::printf(" %d:%d", s, hist[static_cast<std::size_t>(s)]);
        std::printf("\n");
    }

    // vertical pairs, unstaggered
    {
        AggregateMap map;
        map.assignment.resize(static_cast<std::size_t>(n));
        const int ch = (W + 1) / 2;
        for (int r = 0; r < W; ++r)
            for (int c = 0; c < W; ++c)
                map.assignment[static_cast<std::size_t>(r) * W + c] =
                    static_cast<index_t>((r / 2) * W + c);
        map.n_aggregates = ch * W;
        tg_factor(map, "vertical pairs");
    }
    // horizontal pairs, staggered by row parity
    {
        AggregateMap map;
        map.assignment.resize(static_cast<std::size_t>(n));
        index_t id = 0;
        std::vector<index_t> ids(static_cast<std::size_t>(n), -1);
        for (int r = 0; r < W; ++r) {
            int c = 0;
            if (r % 2 == 1) {  // offset start
                ids[static_cast<std::size_t>(r) * W] = id++;
                c = 1;
            }
            for (; c < W; c += 2) {
                const index_t a = id++;
                ids[static_cast<std::size_t>(r) * W + c] = a;
                if (c + 1 < W) ids[static_cast<std::size_t>(r) * W + c + 1] = a;
            }
        }
        map.assignment = ids;
        map.n_aggregates = id;
        tg_factor(map, "h pairs staggered");
    }

    // single-pass greedy, singleton fallback
    {
        AggregateMap map;
        map.assignment.assign(static_cast<std::size_t>(n), -1);
        index_t next_id = 0;
        for (index_t i = 0; i < n; ++i) {
            if (map.assignment[static_cast<std::size_t>(i)] >= 0) continue;
            const index_t id = next_id++;
            map.assignment[static_cast<std::size_t>(i)] = id;
            for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p) {
                const index_t j = A.col_indices[static_cast<std::size_t>(p)];
                if (j != i && map.assignment[static_cast<std::size_t>(j)] < 0)
                    map.assignment[static_cast<std::size_t>(j)] = id;
            }
        }
        map.n_aggregates = next_id;
        tg_factor(map, "greedy v1 single");
        std::vector<int> sizes(static_cast<std::size_t>(map.n_aggregates), 0);
        for (index_t a : map.assignment) ++sizes[static_cast<std::size_t>(a)];
        std::vector<int> hist(16, 0);
        for (int s : sizes) ++hist[static_cast<std::size_t>(std::min(s, 15))];
        std::printf("  sizes:");
        for (int s = 1; s < 16; ++s)
            if (hist[static_cast<std::size_t>(s)]) std::printf(" %d:%d", s, hist[static_cast<std::size_t>(s)]);
        std::printf("\n");
    }
    return 0;
}
