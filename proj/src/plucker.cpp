#include "etale/plucker.hpp"

#include "etale/etale_subalgebra.hpp"
#include "etale/poly.hpp"

namespace etale {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<Scalar, 6> canonicalize6(std::array<Scalar, 6> p) {
    for (const auto& c : p) {
        if (!c.is_zero()) {
            Scalar inv = c.inverse();
            for (auto& x : p) x = x * inv;
            return p;
        }
    }
    throw invalid_input_error("Plucker coordinates must not all vanish");
}

} // namespace

// ---------------------------------------------------------- PluckerPoint

PluckerPoint::PluckerPoint(FieldPtr F, std::array<Scalar, 6> coords)
    : field_(std::move(F)), p_(canonicalize6(std::move(coords))) {
    for (const auto& c : p_)
        if (!c.field()->equals(field_))
            throw invalid_input_error("Plucker coordinate outside the field");
}

Scalar PluckerPoint::relation_value() const {
    return p_[0] * p_[5] - p_[1] * p_[4] + p_[2] * p_[3];
}

bool PluckerPoint::operator==(const PluckerPoint& o) const {
    for (std::size_t i = 0; i < 6; ++i)
        if (!(p_[i] == o.p_[i])) return false;
    return true;
}

std::strong_ordering PluckerPoint::cmp(const PluckerPoint& o) const {
    for (std::size_t i = 0; i < 6; ++i) {
        auto c = p_[i].cmp(o.p_[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

// -------------------------------------------------------- QuadraticSpace

QuadraticSpace::QuadraticSpace(FieldPtr F, Matrix gram)
    : field_(std::move(F)), gram_(std::move(gram)) {
    if (field_->characteristic() == 2)
        throw invalid_input_error("quadratic spaces need characteristic != 2");
    if (gram_.rows() != gram_.cols())
        throw invalid_input_error("Gram matrix must be square");
    if (!(gram_ == gram_.transpose()))
        throw invalid_input_error("Gram matrix must be symmetric");
}

bool QuadraticSpace::is_nondegenerate() const { return !gram_.det().is_zero(); }

Scalar QuadraticSpace::q(const std::vector<Scalar>& x) const { return bilinear(x, x); }

Scalar QuadraticSpace::bilinear(const std::vector<Scalar>& x,
                                const std::vector<Scalar>& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw invalid_input_error("vector dimension mismatch");
    auto gy = gram_.apply(y);
    Scalar acc = field_->zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * gy[i];
    return acc;
}

// ------------------------------------------------------ PointPairOnQuadric

PointPairOnQuadric::PointPairOnQuadric(Subspace plane, std::array<Scalar, 3> form,
                                       IntersectionKind kind)
    : plane_(std::move(plane)), form_(std::move(form)), kind_(kind) {
    if (plane_.dim() != 2) throw invalid_input_error("point pair needs a 2-plane");
}

std::vector<Scalar> PointPairOnQuadric::tangent_point() const {
    if (kind_ != IntersectionKind::tangent)
        throw invalid_input_error("tangent point of a non-tangent pair");
    const auto& F = plane_.field();
    auto w1 = plane_.basis().row(0);
    auto w2 = plane_.basis().row(1);
    // Double root of c0 s^2 + c1 st + c2 t^2.
    Scalar two = F->from_integer(2);
    std::vector<Scalar> pt(plane_.ambient(), F->zero());
    if (!form_[0].is_zero()) {
        // (s : t) = (-c1 : 2 c0)
        for (std::size_t j = 0; j < pt.size(); ++j)
            pt[j] = (-form_[1]) * w1[j] + (two * form_[0]) * w2[j];
    } else {
        // c1 = 0 here (discriminant zero), double root at (1 : 0).
        pt = w1;
    }
    return pt;
}

bool PointPairOnQuadric::operator==(const PointPairOnQuadric& o) const {
    if (kind_ != o.kind_ || !(plane_ == o.plane_)) return false;
    for (std::size_t i = 0; i < 3; ++i)
        if (!(form_[i] == o.form_[i])) return false;
    return true;
}

// --------------------------------------------------------------- embed

PluckerPoint plucker_embed(const Subspace& W) {
    if (W.ambient() != 4 || W.dim() != 2)
        throw invalid_input_error("plucker_embed needs a 2-plane in a 4-space");
    auto u = W.basis().row(0);
    auto v = W.basis().row(1);
    std::array<Scalar, 6> p = {W.field()->zero(), W.field()->zero(), W.field()->zero(),
                               W.field()->zero(), W.field()->zero(), W.field()->zero()};
    for (std::size_t t = 0; t < 6; ++t) {
        auto [i, j] = kPairs[t];
        p[t] = u[i] * v[j] - u[j] * v[i];
    }
    return PluckerPoint(W.field(), std::move(p));
}

Scalar wedge_form(const std::array<Scalar, 6>& w1, const std::array<Scalar, 6>& w2) {
    // e_I ^ e_J is nonzero only for complementary index pairs; signs from
    // the shuffle: 12^34 = +, 13^24 = -, 14^23 = +.
    return w1[0] * w2[5] - w1[1] * w2[4] + w1[2] * w2[3] + w1[3] * w2[2] - w1[4] * w2[1] +
           w1[5] * w2[0];
}

Subspace plucker_inverse(const PluckerPoint& p) {
    if (!p.is_decomposable())
        throw not_decomposable_error("Plucker relation value is nonzero");
    const auto& F = p.field();
    // Antisymmetric matrix P with P[i][j] = p_ij; for p = u ^ v its column
    // space is span{u, v}.
    Matrix P(F, 4, 4);
    for (std::size_t t = 0; t < 6; ++t) {
        auto [i, j] = kPairs[t];
        P.at(i, j) = p.coords()[t];
        P.at(j, i) = -p.coords()[t];
    }
    Subspace W = Subspace::span(P.transpose()); // rows of P^T = columns of P
    if (W.dim() != 2)
        throw not_decomposable_error("coordinate matrix does not have rank 2");
    return W;
}

// ------------------------------------------------------- line vs quadric

PointPairOnQuadric line_quadric_intersect(const Subspace& W, const QuadraticSpace& qs) {
    if (W.dim() != 2) throw invalid_input_error("intersection needs a projective line");
    if (W.ambient() != qs.dim()) throw invalid_input_error("ambient dimension mismatch");
    if (!qs.is_nondegenerate())
        throw invalid_input_error("quadratic space must be nondegenerate");
    const auto& F = qs.field();
    auto w1 = W.basis().row(0);
    auto w2 = W.basis().row(1);
    Scalar c0 = qs.q(w1);
    Scalar c1 = F->from_integer(2) * qs.bilinear(w1, w2);
    Scalar c2 = qs.q(w2);
    if (c0.is_zero() && c1.is_zero() && c2.is_zero())
        return PointPairOnQuadric(W, {c0, c1, c2}, IntersectionKind::contained);
    // Normalize the first nonzero coefficient to 1.
    Scalar inv = (!c0.is_zero() ? c0 : !c1.is_zero() ? c1 : c2).inverse();
    std::array<Scalar, 3> form = {c0 * inv, c1 * inv, c2 * inv};
    Scalar disc = form[1] * form[1] - F->from_integer(4) * form[0] * form[2];
    IntersectionKind kind =
        disc.is_zero() ? IntersectionKind::tangent : IntersectionKind::transverse;
    return PointPairOnQuadric(W, std::move(form), kind);
}

Subspace pair_to_line(const PointPairOnQuadric& pp) {
    if (pp.kind() == IntersectionKind::tangent)
        throw boundary_error("tangent pair has no transverse line");
    if (pp.kind() == IntersectionKind::contained)
        throw boundary_error("line contained in the quadric has no finite point pair");
    const auto& F = pp.plane().field();
    const auto& c = pp.form();
    auto w1 = pp.plane().basis().row(0);
    auto w2 = pp.plane().basis().row(1);
    const std::size_t amb = pp.plane().ambient();

    // Roots (s : t) of c0 s^2 + c1 s t + c2 t^2, possibly over a quadratic
    // extension; the span of the two points descends to the base field.
    std::vector<std::pair<Scalar, Scalar>> pts; // (s, t) over E
    FieldPtr E = F;
    if (c[0].is_zero()) {
        // t (c1 s + c2 t): roots (1 : 0) and (-c2 : c1), both rational.
        pts.emplace_back(F->one(), F->zero());
        pts.emplace_back(-c[2], c[1]);
    } else {
        Polynomial bin(F, {c[2], c[1], c[0]}); // c0 x^2 + c1 x + c2 in x = s/t
        auto [Ex, roots] = splitting_extension(bin);
        E = Ex;
        for (const auto& r : roots) pts.emplace_back(r, E->one());
    }

    Matrix rows(E, 2, amb);
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& [s, t] = pts[k];
        for (std::size_t j = 0; j < amb; ++j)
            rows.at(k, j) = s * embed(w1[j], E) + t * embed(w2[j], E);
    }
    Subspace over_ext = Subspace::span(rows);
    if (over_ext.dim() != 2)
        throw structural_error("intersection points failed to span a plane");
    auto descended = descend_subspace(over_ext, F);
    if (!descended)
        throw structural_error("conjugate point span failed to descend");
    return *descended;
}

// -------------------------------------------------------- wedge action

Matrix induced_wedge_action(const Matrix& g) {
    if (g.rows() != 4 || g.cols() != 4)
        throw invalid_input_error("wedge action needs a 4x4 matrix");
    Matrix out(g.field(), 6, 6);
    for (std::size_t col = 0; col < 6; ++col) {
        auto [i, j] = kPairs[col];
        // g e_i ^ g e_j expanded over the wedge basis.
        for (std::size_t row = 0; row < 6; ++row) {
            auto [k, l] = kPairs[row];
            out.at(row, col) = g.at(k, i) * g.at(l, j) - g.at(l, i) * g.at(k, j);
        }
    }
    return out;
}

} // namespace etale
