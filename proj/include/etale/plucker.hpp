#ifndef ETALE_PLUCKER_HPP
#define ETALE_PLUCKER_HPP

#include <array>

#include "etale/linalg.hpp"

namespace etale {

/// A point of P^5 in Plucker coordinates (p12, p13, p14, p23, p24, p34),
/// canonicalized by scaling the first nonzero coordinate to 1.
class PluckerPoint {
public:
    PluckerPoint(FieldPtr F, std::array<Scalar, 6> coords);

    const FieldPtr& field() const { return field_; }
    const std::array<Scalar, 6>& coords() const { return p_; }

    // p12 p34 - p13 p24 + p14 p23.
    Scalar relation_value() const;
    bool is_decomposable() const { return relation_value().is_zero(); }

    bool operator==(const PluckerPoint& o) const;
    std::strong_ordering cmp(const PluckerPoint& o) const;

private:
    FieldPtr field_;
    std::array<Scalar, 6> p_;
};

/// A vector space with a quadratic form q(x) = x^T G x, G symmetric,
/// characteristic != 2.
class QuadraticSpace {
public:
    QuadraticSpace(FieldPtr F, Matrix gram);

    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    bool is_nondegenerate() const;

    Scalar q(const std::vector<Scalar>& x) const;
    Scalar bilinear(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

private:
    FieldPtr field_;
    Matrix gram_;
};

enum class IntersectionKind { transverse, tangent, contained };

/// The image of a projective line under intersection with a quadric: the
/// 2-plane W together with the restriction of q to W's canonical basis as a
/// binary form c0 s^2 + c1 st + c2 t^2, scaled so the first nonzero
/// coefficient is 1.  Conjugate point pairs stay representable over the
/// base field this way.
class PointPairOnQuadric {
public:
    PointPairOnQuadric(Subspace plane, std::array<Scalar, 3> form, IntersectionKind kind);

    const Subspace& plane() const { return plane_; }
    const std::array<Scalar, 3>& form() const { return form_; }
    IntersectionKind kind() const { return kind_; }

    // The double intersection point; tangent pairs only.
    std::vector<Scalar> tangent_point() const;

    bool operator==(const PointPairOnQuadric& o) const;

private:
    Subspace plane_;
    std::array<Scalar, 3> form_;
    IntersectionKind kind_;
};

// The six 2x2 minors of a basis of W (dim 2, ambient 4), as a canonical
// projective point; independent of the basis choice.
PluckerPoint plucker_embed(const Subspace& W);

// Coefficient of e1^e2^e3^e4 in w1 ^ w2; symmetric bilinear on wedge
// coordinates ordered (12, 13, 14, 23, 24, 34).
Scalar wedge_form(const std::array<Scalar, 6>& w1, const std::array<Scalar, 6>& w2);

// The unique 2-plane with the given Plucker coordinates; throws
// not_decomposable_error when the relation fails.
Subspace plucker_inverse(const PluckerPoint& p);

// Restriction of the quadric to a line, with the transverse/tangent/
// contained trichotomy decided by the discriminant.
PointPairOnQuadric line_quadric_intersect(const Subspace& W, const QuadraticSpace& qs);

// The span of the two intersection points of a transverse pair, recovered
// over the splitting field of the binary form and descended to the base.
Subspace pair_to_line(const PointPairOnQuadric& pp);

// The 6x6 matrix of the induced action of g on wedge coordinates.
Matrix induced_wedge_action(const Matrix& g);

} // namespace etale

#endif
