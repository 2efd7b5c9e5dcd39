#ifndef ETALE_POLY_HPP
#define ETALE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "etale/field.hpp"

namespace etale {

/// Univariate polynomial over a Field, coefficients lowest-degree first,
/// canonical (no trailing zeros; the zero polynomial has no coefficients).
class Polynomial {
public:
    Polynomial(FieldPtr F, std::vector<Scalar> coeffs);

    static Polynomial zero(const FieldPtr& F);
    static Polynomial one(const FieldPtr& F);
    static Polynomial x(const FieldPtr& F);
    static Polynomial constant(const Scalar& c);
    // Product of (x - r) over the given roots.
    static Polynomial from_roots(const FieldPtr& F, const std::vector<Scalar>& roots);
    // Convenience: coefficients given as small integers.
    static Polynomial from_integers(const FieldPtr& F, const std::vector<long>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    Scalar leading() const;
    Scalar coeff(std::size_t i) const; // zero beyond the stored range

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;

    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    Polynomial derivative() const;
    Polynomial make_monic() const;
    Scalar eval(const Scalar& x) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_text(const std::string& var = "x") const;

private:
    FieldPtr field_;
    std::vector<Scalar> coeffs_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

// True iff gcd(f, f') is a nonzero constant.  In characteristic p the
// derivative may vanish identically; such f are squarefree only in degree 0.
bool squarefree_test(const Polynomial& f);

// All roots of f lying in E (the coefficient field or an extension of it),
// with multiplicity, sorted in canonical scalar order.
std::vector<Scalar> find_roots(const Polynomial& f, const FieldPtr& E);

// A field in which the squarefree f splits completely, with its root list.
// Finite base: the canonical extension of minimal degree.  Q base: supported
// when f splits over Q itself or over one quadratic extension.
std::pair<FieldPtr, std::vector<Scalar>> splitting_extension(const Polynomial& f);

// Decides irreducibility where the tower family allows: trial division for
// finite fields, root search for degree <= 3 over Q (and quadratics over a
// quadratic extension of Q); throws unsupported_splitting_error beyond.
bool is_irreducible(const Polynomial& f);

// The canonical degree-m extension of a finite field: F[x]/(g) for the first
// monic irreducible g of degree m in deterministic coefficient order.
// Memoized, so repeated calls return structurally (and pointer-) equal fields.
FieldPtr canonical_extension(const FieldPtr& F, unsigned m);

// Coefficient-wise embed into an extension tower over f's field.
Polynomial embed_poly(const Polynomial& f, const FieldPtr& E);

// Complete factorization into monic irreducibles (with multiplicity), finite
// fields only; the product is verified against the input before returning.
std::vector<Polynomial> factor_finite(const Polynomial& f);

// The squarefree integer d (not 0 or 1, possibly negative) with q = d * s^2
// for rational s, via trial-division factorization.
mpz_class squarefree_part(const mpq_class& q);

} // namespace etale

#endif
