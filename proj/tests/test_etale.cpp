#include <doctest.h>

#include "etale/moduli.hpp"
#include "helpers.hpp"

using namespace etale;

namespace {

Subspace span_of(const AlgebraPtr& A, const std::vector<AlgebraElement>& elems) {
    Matrix rows(A->field(), elems.size(), A->dim());
    for (std::size_t i = 0; i < elems.size(); ++i) rows.set_row(i, elems[i].coords());
    return Subspace::span(rows);
}

} // namespace

TEST_CASE("is_etale_subalgebra examples") {
    auto Q = Field::rationals();
    auto A = make_matrix_algebra(2, Q);
    auto diag = span_of(A, {A->basis_element(0), A->basis_element(3)});
    CHECK(is_etale_subalgebra(diag, A));
    auto nil = span_of(A, {A->one(), A->basis_element(1)});
    CHECK_FALSE(is_etale_subalgebra(nil, A)); // e12 nilpotent: trace form degenerate

    auto H = make_quaternion_algebra(Q->from_integer(-1), Q->from_integer(-1), Q);
    auto spanI = span_of(H, {H->one(), H->basis_element(1)});
    CHECK(is_etale_subalgebra(spanI, H));
    // Not closed under multiplication: span{1, i + j} contains (i+j)^2 = -2
    // which is fine, but span{i, j} misses 1.
    auto noone = span_of(H, {H->basis_element(1), H->basis_element(2)});
    CHECK_FALSE(is_etale_subalgebra(noone, H));
}

TEST_CASE("primitive elements") {
    auto Q = Field::rationals();
    auto A = make_matrix_algebra(2, Q);
    auto diag = EtaleSubalgebra(A, span_of(A, {A->basis_element(0), A->basis_element(3)}));
    auto a = diag.primitive_element();
    CHECK(min_poly(a).degree() == 2);

    auto center = EtaleSubalgebra(A, span_of(A, {A->one()}));
    CHECK(center.primitive_element() == A->one());

    auto H = make_quaternion_algebra(Q->from_integer(-1), Q->from_integer(-1), Q);
    auto spanI = EtaleSubalgebra(H, span_of(H, {H->one(), H->basis_element(1)}));
    CHECK(min_poly(spanI.primitive_element()).degree() == 2);
}

TEST_CASE("the split cube over F2 has no primitive element but still has a type") {
    auto F2 = Field::prime(2);
    auto A = make_matrix_algebra(3, F2);
    // Diagonal subalgebra = F2 x F2 x F2.
    auto diag = EtaleSubalgebra(
        A, span_of(A, {A->basis_element(0), A->basis_element(4), A->basis_element(8)}));
    CHECK_THROWS_AS(diag.primitive_element(), exhaustion_error);
    CHECK(diag.type() == Partition({1, 1, 1}));
    CHECK_FALSE(diag.is_subfield());
    auto [E2, idems] = diag.minimal_idempotents();
    CHECK(idems.size() == 3);
}

TEST_CASE("minimal idempotents of the diagonal") {
    auto Q = Field::rationals();
    auto A = make_matrix_algebra(2, Q);
    auto diag = EtaleSubalgebra(A, span_of(A, {A->basis_element(0), A->basis_element(3)}));
    auto [E2, idems] = diag.minimal_idempotents();
    CHECK(E2->is_rationals());
    REQUIRE(idems.size() == 2);
    CHECK(idems[0] + idems[1] == idems[0].algebra()->one());
    CHECK((idems[0] * idems[1]).is_zero());
}

TEST_CASE("minimal idempotents of span{1,i}: the conjugate pair over Q(i)") {
    auto Q = Field::rationals();
    auto H = make_quaternion_algebra(Q->from_integer(-1), Q->from_integer(-1), Q);
    auto E = EtaleSubalgebra(H, span_of(H, {H->one(), H->basis_element(1)}));
    auto [E2, idems] = E.minimal_idempotents();
    REQUIRE(E2->is_extension());
    CHECK(E2->ext_degree() == 2);
    REQUIRE(idems.size() == 2);
    const auto& big = idems[0].algebra();
    // Orthogonal idempotents summing to one, by direct multiplication.
    CHECK(idems[0].is_idempotent());
    CHECK(idems[1].is_idempotent());
    CHECK((idems[0] * idems[1]).is_zero());
    CHECK(idems[0] + idems[1] == big->one());
    // Frozen expected value: e = (1 -+ i (x) w)/2 with w = sqrt(-1).
    Scalar half = embed(Q->from_mpq(mpq_class(1, 2)), E2->is_extension() ? E2 : E2);
    Scalar w = E2->generator();
    Scalar hw = half * w;
    auto e_plus = big->element({half, hw, E2->zero(), E2->zero()});
    auto e_minus = big->element({half, -hw, E2->zero(), E2->zero()});
    CHECK(((idems[0] == e_plus && idems[1] == e_minus) ||
           (idems[0] == e_minus && idems[1] == e_plus)));
}

TEST_CASE("types") {
    auto Q = Field::rationals();
    auto A3 = make_matrix_algebra(3, Q);
    auto diag3 = EtaleSubalgebra(
        A3, span_of(A3, {A3->basis_element(0), A3->basis_element(4), A3->basis_element(8)}));
    CHECK(diag3.type() == Partition({1, 1, 1}));

    auto A2 = make_matrix_algebra(2, Q);
    auto center = EtaleSubalgebra(A2, span_of(A2, {A2->one()}));
    CHECK(center.type() == Partition({2}));

    auto H = make_quaternion_algebra(Q->from_integer(-1), Q->from_integer(-1), Q);
    auto spanI = EtaleSubalgebra(H, span_of(H, {H->one(), H->basis_element(1)}));
    CHECK(spanI.type() == Partition({1, 1}));

    // span{1, diag(1,1,0)} in M3: type [2, 1].
    auto e = A3->element_from_integers({1, 0, 0, 0, 1, 0, 0, 0, 0});
    auto mixed = EtaleSubalgebra(A3, span_of(A3, {A3->one(), e}));
    CHECK(mixed.type() == Partition({2, 1}));
}

TEST_CASE("type length and sum invariants") {
    auto F3 = Field::prime(3);
    auto A = make_matrix_algebra(2, F3);
    etale::testing::SplitMix64 rng(53);
    int found = 0;
    while (found < 6) {
        auto a = testing::random_element(A, rng);
        Polynomial f = min_poly(a);
        if (f.degree() != 2 || !squarefree_test(f)) continue;
        ++found;
        auto E = psi(a);
        Partition t = E.type();
        CHECK(t.sum() == *A->degree());
        CHECK(t.length() == E.dim());
    }
}

TEST_CASE("is_subfield") {
    auto Q = Field::rationals();
    auto H = make_quaternion_algebra(Q->from_integer(-1), Q->from_integer(-1), Q);
    auto spanI = EtaleSubalgebra(H, span_of(H, {H->one(), H->basis_element(1)}));
    CHECK(spanI.is_subfield());

    auto A = make_matrix_algebra(2, Q);
    auto diag = EtaleSubalgebra(A, span_of(A, {A->basis_element(0), A->basis_element(3)}));
    CHECK_FALSE(diag.is_subfield());

    // F4 inside M2(F2): c = [[0,1],[1,1]] has minimal polynomial x^2+x+1.
    auto F2 = Field::prime(2);
    auto A2 = make_matrix_algebra(2, F2);
    auto c = A2->element_from_integers({0, 1, 1, 1});
    CHECK(min_poly(c) == Polynomial::from_integers(F2, {1, 1, 1}));
    CHECK(is_irreducible(min_poly(c)));
    auto E4 = EtaleSubalgebra(A2, span_of(A2, {A2->one(), c}));
    CHECK(E4.is_subfield());
    CHECK(E4.type() == Partition({1, 1}));
    // The subfield lemma instance: N(type) = 1.
    CHECK(E4.type().distinct_count() == 1);
}

TEST_CASE("minimal idempotents are minimal: e E e is one-dimensional") {
    auto F2 = Field::prime(2);
    auto A = make_matrix_algebra(2, F2);
    auto c = A->element_from_integers({0, 1, 1, 1});
    auto E = EtaleSubalgebra(A, span_of(A, {A->one(), c}));
    auto [E2, idems] = E.minimal_idempotents();
    const auto& big = idems[0].algebra();
    auto Eext = extend_scalars(E, E2);
    for (const auto& e : idems) {
        // e * (basis of E (x) E2) spans a 1-dim space.
        Matrix rows(E2, Eext.dim(), big->dim());
        for (std::size_t i = 0; i < Eext.dim(); ++i)
            rows.set_row(i, (e * big->element(Eext.subspace().basis().row(i))).coords());
        CHECK(Subspace::span(rows).dim() == 1);
    }
}

TEST_CASE("base-change consistency of idempotents") {
    auto F2 = Field::prime(2);
    auto A = make_matrix_algebra(2, F2);
    auto c = A->element_from_integers({0, 1, 1, 1});
    auto E = EtaleSubalgebra(A, span_of(A, {A->one(), c}));
    auto [E2, idems] = E.minimal_idempotents(); // F4
    // Extend the splitting field once more and recompute.
    auto E4 = canonical_extension(E2, 2); // F16 as a tower over F4
    auto Eext = extend_scalars(E, E4);
    auto [E3, idems2] = Eext.minimal_idempotents();
    REQUIRE(idems.size() == idems2.size());
    // The recomputed idempotents are the embeddings of the originals.
    auto bigger = idems2[0].algebra();
    for (const auto& e : idems) {
        auto lifted = embed_element(e, bigger);
        bool found = false;
        for (const auto& f : idems2)
            if (f == lifted) found = true;
        CHECK(found);
    }
}
