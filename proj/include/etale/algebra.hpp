#ifndef ETALE_ALGEBRA_HPP
#define ETALE_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "etale/linalg.hpp"
#include "etale/poly.hpp"

namespace etale {

class Algebra;
class AlgebraElement;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional unital associative algebra given by structure
/// constants: b_i * b_j = sum_k c[i][j][k] b_k.  Associativity and the
/// two-sided identity are checked at construction; an optional degree
/// certificate records deg(A) = n with dim = n^2.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static AlgebraPtr create(FieldPtr F, std::size_t dim, std::vector<Scalar> table,
                             std::vector<Scalar> one, std::optional<unsigned> degree);

    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::optional<unsigned> degree() const { return degree_; }
    const std::vector<Scalar>& one_coords() const { return one_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }

    // Sparse view of the product b_i * b_j: list of (k, c) with c != 0.
    const std::vector<std::pair<std::size_t, Scalar>>& product_terms(std::size_t i,
                                                                     std::size_t j) const {
        return sparse_[i * dim_ + j];
    }

    // Sparse view by output coordinate: triples (i, j, c) with c[i][j][k] != 0.
    const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>&
    coordinate_terms(std::size_t k) const {
        return by_k_[k];
    }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis_element(std::size_t i) const;
    AlgebraElement element(std::vector<Scalar> coords) const;
    AlgebraElement element_from_integers(const std::vector<long>& coords) const;

    // The same structure constants over an extension of the base field.
    AlgebraPtr extend_scalars(const FieldPtr& E) const;

    // n when this algebra is M_n with the standard basis e_ij in row-major
    // order (set by make_matrix_algebra and preserved by extend_scalars).
    std::optional<unsigned> matrix_form() const { return matrix_n_; }

    bool equals(const Algebra& other) const;

private:
    Algebra() = default;
    static AlgebraPtr build(FieldPtr F, std::size_t dim, std::vector<Scalar> table,
                            std::vector<Scalar> one, std::optional<unsigned> degree,
                            std::optional<unsigned> matrix_n, bool validate);
    friend AlgebraPtr make_matrix_algebra(unsigned n, const FieldPtr& F);

    FieldPtr field_;
    std::size_t dim_{0};
    std::vector<Scalar> table_;
    std::vector<Scalar> one_;
    std::optional<unsigned> degree_;
    std::optional<unsigned> matrix_n_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> by_k_;
};

/// Element of an Algebra: a coordinate vector in the algebra's basis.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr alg, std::vector<Scalar> coords);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool is_zero() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scale(const Scalar& c) const;
    AlgebraElement pow(unsigned e) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
    std::strong_ordering cmp(const AlgebraElement& o) const;

    bool is_idempotent() const { return *this * *this == *this; }

    std::string to_text() const;

private:
    AlgebraPtr alg_;
    std::vector<Scalar> coords_;
};

// M_n(F) with basis e_ij ordered row-major; degree certificate n.
AlgebraPtr make_matrix_algebra(unsigned n, const FieldPtr& F);

// Quaternion algebra (a, b / F): basis 1, i, j, k with i^2 = a, j^2 = b,
// ij = k = -ji; degree certificate 2.  Characteristic 2 is rejected.
AlgebraPtr make_quaternion_algebra(const Scalar& a, const Scalar& b, const FieldPtr& F);

// Monic generator of the kernel of F[x] -> A, x -> a, by exact linear
// dependence of successive powers.
Polynomial min_poly(const AlgebraElement& a);

// Map an element into the scalar extension of its algebra.
AlgebraElement embed_element(const AlgebraElement& a, const AlgebraPtr& extended);

// Coordinate-wise Frobenius x -> x^q (q the order of the base of the
// extension the coordinates live in).
AlgebraElement frobenius_element(const AlgebraElement& a, std::uint64_t q);

// Matrix of left multiplication by a in the algebra's basis.
Matrix left_multiplication_matrix(const AlgebraElement& a);

} // namespace etale

#endif
