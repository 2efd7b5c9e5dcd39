#include <doctest.h>

#include "etale/poly.hpp"
#include "helpers.hpp"

using namespace etale;
using etale::testing::SplitMix64;

TEST_CASE("squarefree_test") {
    auto Q = Field::rationals();
    CHECK(squarefree_test(Polynomial::from_integers(Q, {2, -3, 1})));  // (x-1)(x-2)
    CHECK_FALSE(squarefree_test(Polynomial::from_integers(Q, {0, 0, 1}))); // x^2
    auto F2 = Field::prime(2);
    CHECK(squarefree_test(Polynomial::from_integers(F2, {1, 1, 1}))); // derivative 1
    CHECK_FALSE(squarefree_test(Polynomial::from_integers(F2, {1, 0, 1}))); // (x+1)^2
    // x^2 has zero derivative in characteristic 2 as well.
    CHECK_FALSE(squarefree_test(Polynomial::from_integers(F2, {0, 0, 1})));
    CHECK(squarefree_test(Polynomial::from_integers(F2, {1})));
    CHECK_THROWS_AS(squarefree_test(Polynomial::zero(Q)), invalid_input_error);
}

TEST_CASE("find_roots over prime fields matches exhaustive evaluation") {
    auto F3 = Field::prime(3);
    auto r = find_roots(Polynomial::from_integers(F3, {-1, 0, 1}), F3);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == F3->from_integer(1));
    CHECK(r[1] == F3->from_integer(2));

    auto F5 = Field::prime(5);
    Polynomial f = Polynomial::from_integers(F5, {1, 0, 1});
    // Independent oracle: evaluate at all five residues.
    std::vector<Scalar> expect;
    for (int v = 0; v < 5; ++v)
        if (f.eval(F5->from_integer(v)).is_zero()) expect.push_back(F5->from_integer(v));
    auto got = find_roots(f, F5);
    CHECK(got == expect);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == F5->from_integer(2));
    CHECK(got[1] == F5->from_integer(3));
}

TEST_CASE("find_roots over Q") {
    auto Q = Field::rationals();
    CHECK(find_roots(Polynomial::from_integers(Q, {1, 0, 1}), Q).empty());
    auto r = find_roots(Polynomial::from_integers(Q, {-6, 11, -6, 1}), Q); // (x-1)(x-2)(x-3)
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Q->from_integer(1));
    CHECK(r[2] == Q->from_integer(3));
    // Non-monic with rational roots: (2x-1)(x+3)
    auto r2 = find_roots(Polynomial::from_integers(Q, {-3, 5, 2}), Q);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == Q->from_integer(-3));
    CHECK(r2[1] == Q->from_mpq(mpq_class(1, 2)));
    // Multiplicity: x^2 (x - 1)
    auto r3 = find_roots(Polynomial::from_integers(Q, {0, 0, -1, 1}), Q);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0] == Q->zero());
    CHECK(r3[1] == Q->zero());
    CHECK(r3[2] == Q->one());
}

TEST_CASE("find_roots in an extension of the coefficient field") {
    auto Q = Field::rationals();
    auto Qi = Field::extension(Q, Polynomial::from_integers(Q, {1, 0, 1}));
    auto r = find_roots(Polynomial::from_integers(Q, {1, 0, 1}), Qi);
    REQUIRE(r.size() == 2);
    CHECK(r[0] + r[1] == Qi->zero());
    CHECK(r[0] * r[1] == Qi->one());
    // Mixed: (x - 1)(x^2 + 1) has all three roots in Q(i).
    auto r2 = find_roots(Polynomial::from_integers(Q, {-1, 1, -1, 1}), Qi);
    CHECK(r2.size() == 3);
}

TEST_CASE("splitting_extension over finite fields") {
    auto F2 = Field::prime(2);
    auto [E, roots] = splitting_extension(Polynomial::from_integers(F2, {1, 1, 1}));
    CHECK(E->order() == 4);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == E->generator());
    CHECK(roots[1] == E->generator() + E->one());
    // Roots listed in canonical order and distinct; product reconstructs f.
    Polynomial f = Polynomial::from_integers(F2, {1, 1, 1});
    Polynomial prod = Polynomial::from_roots(E, roots) * Polynomial::constant(embed(f.leading(), E));
    CHECK(prod == embed_poly(f, E));
}

TEST_CASE("splitting_extension over Q") {
    auto Q = Field::rationals();
    auto [E1, r1] = splitting_extension(Polynomial::from_integers(Q, {-6, 11, -6, 1}));
    CHECK(E1->is_rationals());
    CHECK(r1.size() == 3);
    auto [E2, r2] = splitting_extension(Polynomial::from_integers(Q, {1, 0, 1}));
    CHECK(E2->is_extension());
    CHECK(E2->ext_degree() == 2);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] * r2[0] == embed(Q->from_integer(-1), E2));
    // x^2 + 2 lands in Q(sqrt(-2)).
    auto [E3, r3] = splitting_extension(Polynomial::from_integers(Q, {2, 0, 1}));
    CHECK(r3[0] * r3[0] == embed(Q->from_integer(-2), E3));
    // Quartics without rational roots are outside the tower family.
    CHECK_THROWS_AS(splitting_extension(Polynomial::from_integers(Q, {4, 0, 5, 0, 1})),
                    unsupported_splitting_error);
    // Non-squarefree input is rejected.
    CHECK_THROWS_AS(splitting_extension(Polynomial::from_integers(Q, {0, 0, 1})),
                    invalid_input_error);
}

TEST_CASE("splitting invariant on random squarefree finite-field polynomials") {
    SplitMix64 rng(17);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto F = Field::prime(p);
        int done = 0;
        while (done < 15) {
            std::vector<Scalar> coeffs;
            int deg = 1 + static_cast<int>(rng.below(4));
            for (int i = 0; i < deg; ++i) coeffs.push_back(testing::random_scalar(F, rng));
            coeffs.push_back(F->one());
            Polynomial f(F, std::move(coeffs));
            if (!squarefree_test(f)) continue;
            ++done;
            auto [E, roots] = splitting_extension(f);
            CHECK(roots.size() == static_cast<std::size_t>(f.degree()));
            for (std::size_t i = 0; i + 1 < roots.size(); ++i)
                CHECK(roots[i].cmp(roots[i + 1]) == std::strong_ordering::less);
            Polynomial prod =
                Polynomial::from_roots(E, roots) * Polynomial::constant(embed(f.leading(), E));
            CHECK(prod == embed_poly(f, E));
        }
    }
}

TEST_CASE("factor_finite multiplies back") {
    auto F3 = Field::prime(3);
    // (x^2 + 1)(x + 1) over F3
    Polynomial f = Polynomial::from_integers(F3, {1, 0, 1}) *
                   Polynomial::from_integers(F3, {1, 1});
    auto fac = factor_finite(f);
    CHECK(fac.size() == 2);
    Polynomial prod = Polynomial::constant(f.leading());
    for (const auto& d : fac) prod = prod * d;
    CHECK(prod == f);
}

TEST_CASE("is_irreducible") {
    auto F2 = Field::prime(2);
    CHECK(is_irreducible(Polynomial::from_integers(F2, {1, 1, 1})));
    CHECK_FALSE(is_irreducible(Polynomial::from_integers(F2, {1, 0, 1})));
    CHECK(is_irreducible(Polynomial::from_integers(F2, {1, 1, 0, 1}))); // x^3+x+1
    auto Q = Field::rationals();
    CHECK(is_irreducible(Polynomial::from_integers(Q, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(Polynomial::from_integers(Q, {-1, 0, 1})));
    CHECK(is_irreducible(Polynomial::from_integers(Q, {2, 0, 0, 1}))); // x^3+2, no rational root
    CHECK_THROWS_AS(is_irreducible(Polynomial::from_integers(Q, {1, 1, 1, 1, 1})),
                    unsupported_splitting_error);
}

TEST_CASE("canonical extensions are memoized and consistent") {
    auto F5 = Field::prime(5);
    auto a = canonical_extension(F5, 2);
    auto b = canonical_extension(F5, 2);
    CHECK(a.get() == b.get());
    CHECK(a->order() == 25);
    CHECK(canonical_extension(F5, 1).get() == F5.get());
    CHECK(canonical_extension(Field::prime(2), 6)->order() == 64);
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(mpq_class(-4)) == -1);
    CHECK(squarefree_part(mpq_class(-8)) == -2);
    CHECK(squarefree_part(mpq_class(12)) == 3);
    CHECK(squarefree_part(mpq_class(1, 2)) == 2); // 1/2 = 2 * (1/2)^2
}

TEST_CASE("polynomial divmod and gcd") {
    auto Q = Field::rationals();
    SplitMix64 rng(29);
    for (int t = 0; t < 30; ++t) {
        std::vector<Scalar> ac, bc;
        for (int i = 0; i <= 4; ++i) ac.push_back(testing::random_scalar(Q, rng));
        for (int i = 0; i <= 2; ++i) bc.push_back(testing::random_scalar(Q, rng));
        Polynomial a(Q, ac), b(Q, bc);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        Polynomial g = gcd(a, b);
        if (!a.is_zero()) {
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
}
