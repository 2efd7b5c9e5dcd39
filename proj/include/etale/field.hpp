#ifndef ETALE_FIELD_HPP
#define ETALE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "etale/errors.hpp"

namespace etale {

class Field;
class Scalar;
class Polynomial;

using FieldPtr = std::shared_ptr<const Field>;

/// An exact field: the rationals, a prime field F_p, or an extension of a
/// previously built field by a monic irreducible polynomial.  Fields form
/// finite towers; values are immutable after construction.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { rationals, prime, extension };

    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);

    // Extension by a monic polynomial over `base`.  Irreducibility is checked
    // exhaustively for finite bases; over Q only quadratics are decidable and
    // higher degrees need trust_irreducible.
    static FieldPtr extension(const FieldPtr& base, const Polynomial& modulus,
                              std::string generator_name = "",
                              bool trust_irreducible = false);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_prime() const { return kind_ == Kind::prime; }
    bool is_extension() const { return kind_ == Kind::extension; }

    // 0 in characteristic zero.
    std::uint64_t characteristic() const { return char_; }
    bool is_finite() const { return char_ != 0; }

    // Number of elements; finite fields only.
    std::uint64_t order() const;

    std::uint64_t prime_p() const;
    const FieldPtr& base() const;
    const std::vector<Scalar>& modulus_coeffs() const; // monic, lowest first, length deg+1
    Polynomial modulus() const;                        // defined in poly.cpp
    unsigned ext_degree() const;
    const std::string& generator_name() const { return gen_name_; }
    unsigned tower_height() const { return height_; }

    bool equals(const Field& other) const; // structural tower equality
    bool equals(const FieldPtr& other) const { return other && equals(*other); }

    // Short structural tag, e.g. "Q", "F5", "F5[w]/[2,0,1]".  Used for
    // canonical-extension memoization and diagnostics.
    std::string describe() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(long v) const;
    Scalar from_mpq(const mpq_class& v) const;
    Scalar generator() const; // extension fields
    Scalar element_from_coeffs(std::vector<Scalar> coeffs) const;

    // Deterministic enumeration of a finite field: index 0 is zero, indices
    // run through all `order()` elements in mixed-radix order with the
    // degree-0 coefficient fastest.
    Scalar nth_element(std::uint64_t idx) const;

    ~Field();

private:
    Field() = default;
    friend class Scalar;

    Kind kind_{Kind::rationals};
    std::uint64_t char_{0};
    std::uint64_t p_{0};         // prime fields and towers above them
    FieldPtr base_;              // extensions
    std::vector<Scalar> mod_;    // extensions: monic modulus coefficients
    std::string gen_name_;
    unsigned height_{0};
    std::uint64_t order_{0};     // 0 when infinite
};

/// A scalar in a specific Field, kept in canonical form: reduced fraction,
/// reduced residue, or a coefficient vector of length exactly ext_degree().
class Scalar {
public:
    Scalar(); // rational zero

    const FieldPtr& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order on canonical representations: rationals by value,
    // residues by value, extension elements lexicographically from the
    // degree-0 coefficient up.  Only defined within one field.
    std::strong_ordering cmp(const Scalar& o) const;

    // Canonical text form: "p/q" | decimal residue | "[c0, c1, ...]".
    std::string to_text() const;
    static Scalar from_text(const std::string& text, const FieldPtr& F);

    const mpq_class& rational() const;
    std::uint64_t residue() const;
    const std::vector<Scalar>& coeffs() const;

private:
    friend class Field;
    Scalar(FieldPtr F, mpq_class q);
    Scalar(FieldPtr F, std::uint64_t r);
    Scalar(FieldPtr F, std::vector<Scalar> c);

    void require_same_field(const Scalar& o) const;

    FieldPtr field_;
    std::variant<mpq_class, std::uint64_t, std::vector<Scalar>> rep_;
};

// Map a scalar of a field lower in a tower into `target` (identity when the
// fields already agree).  Throws invalid_input_error when `s.field()` is not
// a level of `target`'s tower.
Scalar embed(const Scalar& s, const FieldPtr& target);

// Inverse of embed for elements that happen to lie in a lower level; empty
// when the element does not descend.
std::optional<Scalar> try_descend(const Scalar& s, const FieldPtr& target);

// x -> x^q on every tower coordinate; q must be the order of a subfield.
Scalar frobenius(const Scalar& s, std::uint64_t q);

// The nontrivial automorphism of a degree-2 extension, fixing the base.
Scalar quadratic_conj(const Scalar& s);

// Exact square root within the scalar's own field, when one exists; the
// smaller of the two roots in canonical order.
std::optional<Scalar> sqrt_in_field(const Scalar& s);

// Degree of the tower F over its level `base`; throws when base is not a
// level of F's tower.
unsigned tower_degree_over(const FieldPtr& F, const FieldPtr& base);

// Coordinates of s as a vector over the tower level `base`, expanding every
// extension level (degree-0 coefficients first at each level).
std::vector<Scalar> flatten_over(const Scalar& s, const FieldPtr& base);

/// A field homomorphism between finite towers over a common level, fixed by
/// the canonical (smallest) root of the source modulus in the target.  Used
/// to move idempotent systems between splitting fields of the same order.
class FieldEmbedding {
public:
    // source must be `base` itself or a single extension level over it;
    // target any finite tower over base whose degree the source degree
    // divides.
    static FieldEmbedding find(const FieldPtr& source, const FieldPtr& target,
                               const FieldPtr& base);

    const FieldPtr& source() const { return source_; }
    const FieldPtr& target() const { return target_; }

    Scalar apply(const Scalar& s) const;
    std::optional<Scalar> preimage(const Scalar& t) const;

private:
    FieldEmbedding() = default;
    FieldPtr source_, target_, base_;
    std::optional<Scalar> gen_image_; // empty when source == base
};

namespace detail {
// Low-level polynomial arithmetic on coefficient vectors (lowest first, not
// necessarily trimmed); shared by Scalar extension arithmetic and Polynomial.
std::vector<Scalar> polyvec_trim(std::vector<Scalar> v);
std::vector<Scalar> polyvec_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                const FieldPtr& F);
std::vector<Scalar> polyvec_sub(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                const FieldPtr& F);
std::vector<Scalar> polyvec_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                const FieldPtr& F);
// Remainder modulo a monic polynomial.
std::vector<Scalar> polyvec_mod_monic(std::vector<Scalar> a, const std::vector<Scalar>& m,
                                      const FieldPtr& F);
// (quotient, remainder) with arbitrary nonzero divisor.
std::pair<std::vector<Scalar>, std::vector<Scalar>>
polyvec_divmod(std::vector<Scalar> a, const std::vector<Scalar>& b, const FieldPtr& F);
// Monic gcd.
std::vector<Scalar> polyvec_gcd(std::vector<Scalar> a, std::vector<Scalar> b, const FieldPtr& F);
// u with u*a = gcd(a, m) mod m (extended Euclid, used for inverses).
std::pair<std::vector<Scalar>, std::vector<Scalar>>
polyvec_ext_gcd(const std::vector<Scalar>& a, const std::vector<Scalar>& m, const FieldPtr& F);
} // namespace detail

} // namespace etale

#endif
