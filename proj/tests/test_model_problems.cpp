// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mamg/model_problems.hpp"
#include "mamg/vector_ops.hpp"
#include "oracle_utils.hpp"

using namespace mamg;

namespace {

// Independent assembly: generic-triangle element matrices from vertex
// coordinates (gradients via the inverse Jacobian), accumulated densely.
Eigen::MatrixXd dense_assembly_oracle(Example example, int m) {
    const double h = 1.0 / m;
    const int W = m - 1;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(W * W, W * W);
    auto dof = [&](int ix, int iy) -> int {
        if (ix <= 0 || ix >= m || iy <= 0 || iy >= m) return -1;
        return (iy - 1) * W + (ix - 1);
    };
    auto add_triangle = [&](std::array<std::array<int, 2>, 3> v) {
        Eigen::Matrix2d J;
        J << (v[1][0] - v[0][0]) * h, (v[2][0] - v[0][0]) * h,
             (v[1][1] - v[0][1]) * h, (v[2][1] - v[0][1]) * h;
        const double detJ = J.determinant();
        const Eigen::Matrix2d Jinv = J.inverse();
        // reference gradients of the P1 basis
        Eigen::MatrixXd gref(2, 3);
        gref << -1, 1, 0,
                -1, 0, 1;
        const Eigen::MatrixXd g = Jinv.transpose() * gref;
        double kx = 1.0, ky = 1.0;
        if (example == Example::Anisotropic) ky = 1e-3;
        if (example == Example::JumpDiffusion) {
            const double cx = (v[0][0] + v[1][0] + v[2][0]) / 3.0 * h;
            const double cy = (v[0][1] + v[1][1] + v[2][1]) / 3.0 * h;
            const bool inside = (cx >= 0.25 && cx <= 0.5 && cy >= 0.25 && cy <= 0.5) ||
                                (cx >= 0.5 && cx <= 0.75 && cy >= 0.5 && cy <= 0.75);
            kx = ky = inside ? 1.0 : 1e-6;
        }
        const double area = std::abs(detJ) / 2.0;
        for (int a = 0; a < 3; ++a) {
            const int ia = dof(v[a][0], v[a][1]);
            if (ia < 0) continue;
            for (int bq = 0; bq < 3; ++bq) {
                const int ib = dof(v[bq][0], v[bq][1]);
                if (ib < 0) continue;
                A(ia, ib) += area * (kx * g(0, a) * g(0, bq) + ky * g(1, a) * g(1, bq));
            }
        }
    };
    for (int cy = 0; cy < m; ++cy)
        for (int cx = 0; cx < m; ++cx) {
            add_triangle({{{cx, cy}, {cx + 1, cy}, {cx, cy + 1}}});
            add_triangle({{{cx + 1, cy + 1}, {cx, cy + 1}, {cx + 1, cy}}});
        }
    return A;
}

Eigen::MatrixXd five_point(int m) {
    const int W = m - 1;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(W * W, W * W);
    for (int r = 0; r < W; ++r)
        for (int c = 0; c < W; ++c) {
            const int i = r * W + c;
            A(i, i) = 4.0;
            if (c > 0) A(i, i - 1) = -1.0;
            if (c + 1 < W) A(i, i + 1) = -1.0;
            if (r > 0) A(i, i - W) = -1.0;
            if (r + 1 < W) A(i, i + W) = -1.0;
        }
    return A;
}

} // namespace

TEST_CASE("poisson m=2 single interior node") {
    ProblemSpec spec;
    spec.m = 2;
    const SparseMatrix A = assemble(spec);
    CHECK(A.n_rows == 1);
    CHECK(A.at(0, 0) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("poisson m=4 equals the five-point stencil exactly") {
    ProblemSpec spec;
    spec.m = 4;
    const SparseMatrix A = assemble(spec);
    CHECK(test::to_dense(A) == five_point(4));
}

TEST_CASE("assembly matches the independent element oracle") {
    for (Example ex : {Example::Poisson, Example::JumpDiffusion, Example::Anisotropic}) {
        for (int m : {4, 8, 16}) {
            ProblemSpec spec;
            spec.example = ex;
            spec.m = m;
            const SparseMatrix A = assemble(spec);
            const Eigen::MatrixXd expect = dense_assembly_oracle(ex, m);
            CHECK((test::to_dense(A) - expect).norm() <= 1e-13 * expect.norm());
        }
    }
}

TEST_CASE("assembled matrices are SPD and bitwise symmetric") {
    for (Example ex : {Example::Poisson, Example::JumpDiffusion, Example::Anisotropic}) {
        for (int m : {4, 8, 16}) {
            ProblemSpec spec;
            spec.example = ex;
            spec.m = m;
            const SparseMatrix A = assemble(spec);
            CHECK(A.symmetric);
            CHECK(A.check_symmetric());
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(test::to_dense(A));
            CHECK(es.eigenvalues().minCoeff() > 0.0);
        }
    }
}

TEST_CASE("anisotropic row sums are nonnegative") {
    ProblemSpec spec;
    spec.example = Example::Anisotropic;
    spec.m = 8;
    const SparseMatrix A = assemble(spec);
    for (index_t i = 0; i < A.n_rows; ++i) {
        double s = 0.0;
        for (index_t p = A.row_offsets[i]; p < A.row_offsets[i + 1]; ++p)
            s += A.values[static_cast<std::size_t>(p)];
        CHECK(s >= -1e-14);
    }
}

TEST_CASE("jump coefficient scales stencil rows by 1e6") {
    ProblemSpec spec;
    spec.example = Example::JumpDiffusion;
    spec.m = 16;
    const SparseMatrix A = assemble(spec);
    const int W = 15;
    // node at (0.375, 0.375): interior of the first unit region
    const int inside = (6 - 1) * W + (6 - 1);
    // node at (0.875, 0.25): deep in the 1e-6 background
    const int outside = (4 - 1) * W + (14 - 1);
    const double ratio = A.at(inside, inside) / A.at(outside, outside);
    CHECK(ratio > 0.5e6);
    CHECK(ratio < 2.0e6);
}

TEST_CASE("true_solution and rhs_for") {
    CHECK(true_solution(3) == DenseVector{1.0, 2.0, 3.0});
    CHECK(true_solution(1) == DenseVector{1.0});
    CHECK(true_solution(5) == DenseVector{1.0, 2.0, 3.0, 4.0, 5.0});
    CHECK_THROWS_AS(true_solution(0), std::invalid_argument);

    CHECK(rhs_for(SparseMatrix::identity(2), {1.0, 2.0}) == DenseVector{1.0, 2.0});

    const SparseMatrix A = SparseMatrix::from_triplets(
        2, 2, {{0, 0, 2.0}, {0, 1, -1.0}, {1, 0, -1.0}, {1, 1, 2.0}}, true);
    CHECK(rhs_for(A, {1.0, 2.0}) == DenseVector{0.0, 3.0});

    // round trip through a direct solve
    ProblemSpec spec;
    spec.m = 8;
    const SparseMatrix P = assemble(spec);
    const DenseVector xt = true_solution(P.n_rows);
    const DenseVector b = rhs_for(P, xt);
    const Eigen::VectorXd solved = test::to_dense(P).llt().solve(test::to_eigen(b));
    CHECK((solved - test::to_eigen(xt)).norm() <= 1e-12 * test::to_eigen(xt).norm());
}

TEST_CASE("invalid mesh parameter") {
    ProblemSpec spec;
    spec.m = 1;
    CHECK_THROWS_AS(assemble(spec), std::invalid_argument);
}

TEST_CASE("example names") {
    CHECK(parse_example("poisson") == Example::Poisson);
    CHECK(parse_example("jump") == Example::JumpDiffusion);
    CHECK(parse_example("aniso") == Example::Anisotropic);
    CHECK_THROWS_AS(parse_example("helmholtz"), std::invalid_argument);
    CHECK(example_name(Example::JumpDiffusion) == "jump");
}
