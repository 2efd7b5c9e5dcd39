#include <doctest.h>

#include "etale/linalg.hpp"
#include "helpers.hpp"

using namespace etale;
using etale::testing::SplitMix64;

TEST_CASE("solve_affine trichotomy") {
    auto Q = Field::rationals();
    Matrix I = Matrix::identity(Q, 2);
    auto s1 = solve_affine(I, {Q->from_integer(1), Q->from_integer(2)});
    REQUIRE(s1.is_unique());
    CHECK(s1.particular[0] == Q->from_integer(1));
    CHECK(s1.particular[1] == Q->from_integer(2));

    Matrix Z(Q, 2, 2);
    auto s2 = solve_affine(Z, {Q->zero(), Q->zero()});
    CHECK(s2.kind == AffineSolution::Kind::solution_set);
    CHECK(s2.kernel_basis.rows() == 2);

    auto s3 = solve_affine(Z, {Q->one(), Q->zero()});
    CHECK(s3.is_none());
}

TEST_CASE("solve_affine solution sets really solve") {
    auto F5 = Field::prime(5);
    SplitMix64 rng(31);
    for (int t = 0; t < 50; ++t) {
        Matrix M = testing::random_matrix(F5, 3, 4, rng);
        std::vector<Scalar> b;
        for (int i = 0; i < 3; ++i) b.push_back(testing::random_scalar(F5, rng));
        auto sol = solve_affine(M, b);
        if (sol.is_none()) continue;
        CHECK(M.apply(sol.particular) == b);
        for (std::size_t r = 0; r < sol.kernel_basis.rows(); ++r) {
            auto k = M.apply(sol.kernel_basis.row(r));
            for (const auto& x : k) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("direct_sum_check") {
    auto Q = Field::rationals();
    Matrix e1 = Matrix::from_rows(Q, {{Q->one(), Q->zero()}}, 2);
    Matrix e2 = Matrix::from_rows(Q, {{Q->zero(), Q->one()}}, 2);
    Subspace s1 = Subspace::span(e1), s2 = Subspace::span(e2);
    CHECK(direct_sum_check({s1, s2}, 2));
    CHECK_FALSE(direct_sum_check({s1, s1}, 2));
    CHECK_FALSE(direct_sum_check({s1}, 2));
}

TEST_CASE("RREF is a projector and decides subspace equality") {
    SplitMix64 rng(37);
    for (std::uint64_t p : {2ull, 7ull}) {
        auto F = Field::prime(p);
        for (int t = 0; t < 40; ++t) {
            Matrix M = testing::random_matrix(F, 3, 5, rng);
            Matrix R = M.rref();
            CHECK(R.rref() == R);
            // Row-scrambled spans agree.
            Matrix M2(F, 3, 5);
            M2.set_row(0, M.row(2));
            M2.set_row(1, M.row(0));
            M2.set_row(2, M.row(1));
            CHECK(Subspace::span(M) == Subspace::span(M2));
        }
    }
}

TEST_CASE("subspace membership, sum, intersection") {
    auto F3 = Field::prime(3);
    Matrix rows = Matrix::from_rows(
        F3, {{F3->one(), F3->zero(), F3->one()}, {F3->zero(), F3->one(), F3->one()}}, 3);
    Subspace V = Subspace::span(rows);
    CHECK(V.dim() == 2);
    CHECK(V.contains({F3->one(), F3->one(), F3->from_integer(2)}));
    CHECK_FALSE(V.contains({F3->one(), F3->zero(), F3->zero()}));

    Matrix w = Matrix::from_rows(F3, {{F3->one(), F3->zero(), F3->zero()}}, 3);
    Subspace W = Subspace::span(w);
    CHECK(V.add(W).dim() == 3);
    CHECK(V.intersect(W).dim() == 0);
    CHECK(V.intersect(V) == V);

    auto coords = V.coordinates_of({F3->one(), F3->one(), F3->from_integer(2)});
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == F3->one());
    CHECK((*coords)[1] == F3->one());
}

TEST_CASE("matrix inverse and determinant") {
    auto Q = Field::rationals();
    SplitMix64 rng(41);
    for (int t = 0; t < 25; ++t) {
        Matrix M = testing::random_matrix(Q, 3, 3, rng);
        if (M.det().is_zero()) {
            CHECK_THROWS_AS(M.inverse(), invalid_input_error);
            continue;
        }
        CHECK(M * M.inverse() == Matrix::identity(Q, 3));
        // Multiplicativity of det on a second factor.
        Matrix N = testing::random_matrix(Q, 3, 3, rng);
        CHECK((M * N).det() == M.det() * N.det());
    }
}

TEST_CASE("kernel basis spans the kernel") {
    auto F2 = Field::prime(2);
    Matrix M = Matrix::from_rows(
        F2, {{F2->one(), F2->one(), F2->zero()}, {F2->zero(), F2->zero(), F2->zero()}}, 3);
    Matrix K = kernel_basis(M);
    CHECK(K.rows() == 2);
    for (std::size_t r = 0; r < K.rows(); ++r)
        for (const auto& x : M.apply(K.row(r))) CHECK(x.is_zero());
}
