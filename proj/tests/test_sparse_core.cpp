// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mamg/direct_solvers.hpp"
#include "mamg/matrix_market.hpp"
#include "mamg/sparse_matrix.hpp"
#include "mamg/vector_ops.hpp"
#include "oracle_utils.hpp"

#include <sstream>

using namespace mamg;

namespace {

SparseMatrix two_by_two() {
    return SparseMatrix::from_triplets(2, 2, {{0, 0, 2.0}, {0, 1, -1.0}, {1, 0, -1.0}, {1, 1, 2.0}},
                                       true);
}

} // namespace

TEST_CASE("spmv basics") {
    const SparseMatrix I2 = SparseMatrix::identity(2);
    CHECK(spmv(I2, {3.0, 4.0}) == DenseVector{3.0, 4.0});

    CHECK(spmv(two_by_two(), {1.0, 1.0}) == DenseVector{1.0, 1.0});

    const SparseMatrix Z = SparseMatrix::from_triplets(3, 3, {}, true);
    CHECK(spmv(Z, {1.0, -2.0, 5.0}) == DenseVector{0.0, 0.0, 0.0});

    CHECK_THROWS_AS(spmv(I2, DenseVector{1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("canonical CSR construction") {
    // duplicates summed, zeros dropped, columns sorted
    const SparseMatrix A = SparseMatrix::from_triplets(
        2, 2, {{0, 1, 2.0}, {0, 0, 1.0}, {0, 1, 3.0}, {1, 1, 4.0}, {1, 0, 5.0}, {1, 0, -5.0}});
    CHECK(A.nnz() == 3);
    CHECK(A.at(0, 1) == 5.0);
    CHECK(A.at(1, 0) == 0.0);
    for (index_t i = 0; i < A.n_rows; ++i)
        for (index_t p = A.row_offsets[i] + 1; p < A.row_offsets[i + 1]; ++p)
            CHECK(A.col_indices[static_cast<std::size_t>(p - 1)] < A.col_indices[static_cast<std::size_t>(p)]);

    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1.0}}), std::invalid_argument);
}

TEST_CASE("triple product examples") {
    const SparseMatrix A = two_by_two();

    SUBCASE("identity prolongation returns A") {
        const SparseMatrix C = triple_product(SparseMatrix::identity(2), A);
        CHECK(test::to_dense(C) == test::to_dense(A));
    }
    SUBCASE("single aggregate of the 2x2 identity") {
        const SparseMatrix P =
            SparseMatrix::from_triplets(2, 1, {{0, 0, 1.0}, {1, 0, 1.0}});
        const SparseMatrix C = triple_product(P, SparseMatrix::identity(2));
        CHECK(C.n_rows == 1);
        CHECK(C.at(0, 0) == 2.0);
    }
    SUBCASE("random SPD against the dense oracle") {
        std::mt19937_64 rng(7);
        const Eigen::MatrixXd Ad = test::random_spd(8, rng);
        const SparseMatrix As = test::from_dense(Ad, true);
        // full-rank aggregation 8 -> 3
        const SparseMatrix P = SparseMatrix::from_triplets(
            8, 3, {{0, 0, 1.0}, {1, 0, 1.0}, {2, 0, 1.0}, {3, 1, 1.0}, {4, 1, 1.0}, {5, 2, 1.0},
                   {6, 2, 1.0}, {7, 2, 1.0}});
        const SparseMatrix C = triple_product(P, As);
        const Eigen::MatrixXd expect = test::to_dense(P).transpose() * Ad * test::to_dense(P);
        CHECK((test::to_dense(C) - expect).norm() <= 1e-12 * expect.norm());
        CHECK(C.check_symmetric());
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(test::to_dense(C));
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
    SUBCASE("preconditions") {
        SparseMatrix Ag = A;
        Ag.symmetric = false;
        CHECK_THROWS_AS(triple_product(SparseMatrix::identity(2), Ag), std::invalid_argument);
        CHECK_THROWS_AS(triple_product(SparseMatrix::identity(3), A), std::invalid_argument);
    }
}

TEST_CASE("Galerkin product equals spmv composition") {
    std::mt19937_64 rng(11);
    for (int n : {20, 100, 200}) {
        const Eigen::MatrixXd Ad = test::random_spd(n, rng);
        const SparseMatrix As = test::from_dense(Ad, true);
        // aggregate every three nodes
        std::vector<std::tuple<index_t, index_t, double>> pt;
        for (index_t i = 0; i < n; ++i) pt.emplace_back(i, i / 3, 1.0);
        const SparseMatrix P = SparseMatrix::from_triplets(n, (n + 2) / 3, std::move(pt));
        const SparseMatrix C = triple_product(P, As);

        const DenseVector x = test::random_vector(P.n_cols, rng);
        const DenseVector via_product = spmv(C, x);
        // Pᵀ (A (P x))
        const DenseVector apx = spmv(As, spmv(P, x));
        DenseVector via_chain(static_cast<std::size_t>(P.n_cols), 0.0);
        for (index_t i = 0; i < P.n_rows; ++i)
            for (index_t p = P.row_offsets[i]; p < P.row_offsets[i + 1]; ++p)
                via_chain[static_cast<std::size_t>(P.col_indices[static_cast<std::size_t>(p)])] +=
                    P.values[static_cast<std::size_t>(p)] * apx[static_cast<std::size_t>(i)];
        for (std::size_t i = 0; i < via_chain.size(); ++i)
            CHECK(std::abs(via_product[i] - via_chain[i]) <= 1e-12 * (1.0 + std::abs(via_chain[i])));
    }
}

TEST_CASE("symmetric matrices are exactly self-adjoint") {
    std::mt19937_64 rng(13);
    const Eigen::MatrixXd Ad = test::random_spd(30, rng);
    const SparseMatrix As = test::from_dense(Ad, true);
    CHECK(As.check_symmetric());
    const DenseVector x = test::random_vector(30, rng);
    const DenseVector y = test::random_vector(30, rng);
    const double lhs = dot(spmv(As, x), y);
    const double rhs = dot(x, spmv(As, y));
    CHECK(std::abs(lhs - rhs) <= 1e-13 * (std::abs(lhs) + 1.0));
}

TEST_CASE("coarsest_solve") {
    SUBCASE("identity") {
        CHECK(coarsest_solve(SparseMatrix::identity(1), {5.0}) == DenseVector{5.0});
    }
    SUBCASE("hand solve") {
        const DenseVector x = coarsest_solve(two_by_two(), {1.0, 0.0});
        CHECK(x[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(x[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("zero rhs") {
        const DenseVector x = coarsest_solve(two_by_two(), {0.0, 0.0});
        CHECK(norm2(x) == 0.0);
    }
    SUBCASE("residual accuracy on random SPD") {
        std::mt19937_64 rng(17);
        const Eigen::MatrixXd Ad = test::random_spd(120, rng);
        const SparseMatrix As = test::from_dense(Ad, true);
        const DenseVector b = test::random_vector(120, rng);
        const DenseVector x = coarsest_solve(As, b);
        DenseVector r(b.size());
        residual(As, b, x, r);
        CHECK(norm2(r) <= 1e-13 * norm2(b));
    }
    SUBCASE("non-SPD reported as setup error") {
        const SparseMatrix Ind = SparseMatrix::from_triplets(
            2, 2, {{0, 0, 1.0}, {0, 1, 2.0}, {1, 0, 2.0}, {1, 1, 1.0}}, true);
        CHECK_THROWS_AS(coarsest_solve(Ind, {1.0, 1.0}), SetupError);
    }
    SUBCASE("dimension cap") {
        const SparseMatrix big = SparseMatrix::identity(201);
        CHECK_THROWS_AS(coarsest_solve(big, DenseVector(201, 1.0)), std::invalid_argument);
    }
}

TEST_CASE("envelope Cholesky matches dense solve") {
    std::mt19937_64 rng(19);
    const Eigen::MatrixXd Ad = test::random_spd(60, rng);
    const SparseMatrix As = test::from_dense(Ad, true);
    const DenseVector b = test::random_vector(60, rng);
    const EnvelopeCholesky F(As);
    const DenseVector x = F.solve(b);
    const Eigen::VectorXd expect = Ad.llt().solve(test::to_eigen(b));
    CHECK((test::to_eigen(x) - expect).norm() <= 1e-11 * expect.norm());
}

TEST_CASE("matrix market round trip") {
    std::mt19937_64 rng(23);
    const Eigen::MatrixXd Ad = test::random_spd(12, rng);
    const SparseMatrix As = test::from_dense(Ad, true);

    SUBCASE("symmetric storage") {
        std::ostringstream os;
        write_matrix_market(os, As, true);
        CHECK(os.str().find("symmetric") != std::string::npos);
        std::istringstream is(os.str());
        const SparseMatrix back = read_matrix_market(is);
        CHECK(test::to_dense(back) == test::to_dense(As));
        CHECK(back.symmetric);
    }
    SUBCASE("general storage") {
        std::ostringstream os;
        write_matrix_market(os, As, false);
        std::istringstream is(os.str());
        const SparseMatrix back = read_matrix_market(is);
        CHECK(test::to_dense(back) == test::to_dense(As));
    }
    SUBCASE("vector round trip") {
        const DenseVector v = test::random_vector(9, rng);
        std::ostringstream os;
        write_vector(os, v);
        std::istringstream is(os.str());
        CHECK(read_vector(is) == v);
    }
    SUBCASE("bad header rejected") {
        std::istringstream is("%%MatrixMarket matrix array real general\n1 1\n1.0\n");
        CHECK_THROWS_AS(read_matrix_market(is), std::invalid_argument);
    }
}
