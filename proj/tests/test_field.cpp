#include <doctest.h>

#include "etale/poly.hpp"
#include "helpers.hpp"

using namespace etale;
using etale::testing::SplitMix64;

TEST_CASE("rational scalars are canonical") {
    auto Q = Field::rationals();
    Scalar a = Q->from_mpq(mpq_class(6, 4));
    CHECK(a.to_text() == "3/2");
    Scalar b = Q->from_mpq(mpq_class(-3, -2));
    CHECK(a == b);
    CHECK(Q->from_mpq(mpq_class(2, -4)).to_text() == "-1/2");
    CHECK(Q->from_integer(7).to_text() == "7");
}

TEST_CASE("prime field construction rejects composites") {
    CHECK_THROWS_AS(Field::prime(6), invalid_input_error);
    CHECK_THROWS_AS(Field::prime(1), invalid_input_error);
    CHECK(Field::prime(2)->order() == 2);
    CHECK(Field::prime(65521)->order() == 65521);
}

TEST_CASE("field axioms hold exhaustively over small prime fields") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        auto F = Field::prime(p);
        for (std::uint64_t i = 0; i < p; ++i)
            for (std::uint64_t j = 0; j < p; ++j) {
                Scalar a = F->nth_element(i), b = F->nth_element(j);
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (std::uint64_t k = 0; k < p; ++k) {
                    Scalar c = F->nth_element(k);
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
                if (!b.is_zero()) CHECK(a / b * b == a);
            }
    }
}

TEST_CASE("field axioms hold on random rational triples") {
    auto Q = Field::rationals();
    SplitMix64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Scalar a = testing::random_scalar(Q, rng);
        Scalar b = testing::random_scalar(Q, rng);
        Scalar c = testing::random_scalar(Q, rng);
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Q->one());
    }
}

TEST_CASE("extension arithmetic: F4") {
    auto F2 = Field::prime(2);
    auto F4 = canonical_extension(F2, 2);
    CHECK(F4->order() == 4);
    Scalar w = F4->generator();
    // w^2 + w + 1 = 0 for the canonical modulus.
    CHECK(w * w == w + F4->one());
    CHECK(w * w * w == F4->one());
    CHECK(w.inverse() * w == F4->one());
    // Every nonzero element has an inverse.
    for (std::uint64_t i = 1; i < 4; ++i) {
        Scalar x = F4->nth_element(i);
        CHECK(x * x.inverse() == F4->one());
    }
}

TEST_CASE("extension arithmetic over Q(sqrt(-1))") {
    auto Q = Field::rationals();
    auto Qi = Field::extension(Q, Polynomial::from_integers(Q, {1, 0, 1}));
    Scalar i = Qi->generator();
    CHECK(i * i == Qi->from_integer(-1));
    Scalar z = Qi->element_from_coeffs({Q->from_integer(3), Q->from_mpq(mpq_class(1, 2))});
    CHECK(z * z.inverse() == Qi->one());
    CHECK(z.to_text() == "[3, 1/2]");
}

TEST_CASE("reducible moduli are rejected") {
    auto F2 = Field::prime(2);
    // x^2 + 1 = (x+1)^2 over F2.
    CHECK_THROWS_AS(Field::extension(F2, Polynomial::from_integers(F2, {1, 0, 1})),
                    invalid_input_error);
    auto Q = Field::rationals();
    // x^2 - 4 has rational roots.
    CHECK_THROWS_AS(Field::extension(Q, Polynomial::from_integers(Q, {-4, 0, 1})),
                    invalid_input_error);
}

TEST_CASE("canonical scalar order is total and deterministic") {
    auto F4 = canonical_extension(Field::prime(2), 2);
    Scalar w = F4->generator();
    Scalar w1 = w + F4->one();
    CHECK(w.cmp(w1) == std::strong_ordering::less); // [0,1] < [1,1]
    auto Q = Field::rationals();
    CHECK(Q->from_mpq(mpq_class(1, 3)).cmp(Q->from_mpq(mpq_class(1, 2))) ==
          std::strong_ordering::less);
}

TEST_CASE("text round trip for every representation") {
    auto Q = Field::rationals();
    auto F7 = Field::prime(7);
    auto F49 = canonical_extension(F7, 2);
    SplitMix64 rng(23);
    for (int t = 0; t < 50; ++t) {
        Scalar a = testing::random_scalar(Q, rng);
        CHECK(Scalar::from_text(a.to_text(), Q) == a);
        Scalar b = testing::random_scalar(F7, rng);
        CHECK(Scalar::from_text(b.to_text(), F7) == b);
        Scalar c = testing::random_scalar(F49, rng);
        CHECK(Scalar::from_text(c.to_text(), F49) == c);
    }
    CHECK_THROWS_AS(Scalar::from_text("", Q), invalid_input_error);
    CHECK_THROWS_AS(Scalar::from_text("x", Q), invalid_input_error);
}

TEST_CASE("embed and descend walk the tower") {
    auto F3 = Field::prime(3);
    auto F9 = canonical_extension(F3, 2);
    Scalar two = F3->from_integer(2);
    Scalar up = embed(two, F9);
    CHECK(up.field()->equals(F9));
    auto down = try_descend(up, F3);
    REQUIRE(down.has_value());
    CHECK(*down == two);
    CHECK_FALSE(try_descend(F9->generator(), F3).has_value());
}

TEST_CASE("frobenius fixes the base field and permutes roots") {
    auto F3 = Field::prime(3);
    auto F9 = canonical_extension(F3, 2);
    Scalar w = F9->generator();
    Scalar w3 = frobenius(w, 3);
    CHECK_FALSE(w3 == w);
    CHECK(frobenius(w3, 3) == w);
    CHECK(frobenius(embed(F3->from_integer(2), F9), 3) == embed(F3->from_integer(2), F9));
}

TEST_CASE("quadratic conjugation") {
    auto Q = Field::rationals();
    auto Qi = Field::extension(Q, Polynomial::from_integers(Q, {1, 0, 1}));
    Scalar z = Qi->element_from_coeffs({Q->from_integer(2), Q->from_integer(5)});
    Scalar zc = quadratic_conj(z);
    CHECK(zc == Qi->element_from_coeffs({Q->from_integer(2), Q->from_integer(-5)}));
    CHECK(quadratic_conj(zc) == z);
    // Conjugation is a ring map.
    Scalar u = Qi->element_from_coeffs({Q->from_integer(1), Q->from_integer(-3)});
    CHECK(quadratic_conj(z * u) == quadratic_conj(z) * quadratic_conj(u));
}

TEST_CASE("square roots in each supported field") {
    auto Q = Field::rationals();
    CHECK(sqrt_in_field(Q->from_mpq(mpq_class(9, 4)))->to_text() == "-3/2"); // canonical min
    CHECK_FALSE(sqrt_in_field(Q->from_integer(2)).has_value());
    auto F7 = Field::prime(7);
    auto r = sqrt_in_field(F7->from_integer(2));
    REQUIRE(r.has_value());
    CHECK(*r * *r == F7->from_integer(2));
    CHECK_FALSE(sqrt_in_field(F7->from_integer(3)).has_value());
    // In Q(sqrt 2): 2 is a square, and so is 6 + 4 sqrt(2) = (2 + sqrt 2)^2.
    auto Qs2 = Field::extension(Q, Polynomial::from_integers(Q, {-2, 0, 1}));
    auto s = sqrt_in_field(embed(Q->from_integer(2), Qs2));
    REQUIRE(s.has_value());
    CHECK(*s * *s == embed(Q->from_integer(2), Qs2));
    Scalar v = Qs2->element_from_coeffs({Q->from_integer(6), Q->from_integer(4)});
    auto sv = sqrt_in_field(v);
    REQUIRE(sv.has_value());
    CHECK(*sv * *sv == v);
    CHECK_FALSE(
        sqrt_in_field(Qs2->element_from_coeffs({Q->from_integer(1), Q->from_integer(1)}))
            .has_value());
}

TEST_CASE("field embeddings move scalars between towers") {
    auto F2 = Field::prime(2);
    auto F4 = canonical_extension(F2, 2);
    auto F16 = canonical_extension(F2, 4);
    auto sigma = FieldEmbedding::find(F4, F16, F2);
    Scalar w = F4->generator();
    Scalar img = sigma.apply(w);
    // The image satisfies the F4 modulus inside F16.
    Polynomial mod(F2, F4->modulus_coeffs());
    CHECK(embed_poly(mod, F16).eval(img).is_zero());
    auto back = sigma.preimage(img);
    REQUIRE(back.has_value());
    CHECK(*back == w);
    // Ring map on a few products.
    SplitMix64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Scalar a = testing::random_scalar(F4, rng);
        Scalar b = testing::random_scalar(F4, rng);
        CHECK(sigma.apply(a * b) == sigma.apply(a) * sigma.apply(b));
        CHECK(sigma.apply(a + b) == sigma.apply(a) + sigma.apply(b));
    }
    // Elements outside the image have no preimage.
    Scalar gen16 = F16->generator();
    bool in_image = sigma.preimage(gen16).has_value();
    CHECK_FALSE(in_image); // a generator of F16 is not in F4
}
