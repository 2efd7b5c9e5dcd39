#include "etale/ideal.hpp"

namespace etale {

RightIdeal::RightIdeal(AlgebraPtr alg, Subspace space)
    : alg_(std::move(alg)), space_(std::move(space)) {
    if (space_.ambient() != alg_->dim())
        throw invalid_input_error("ideal subspace has the wrong ambient dimension");
    if (!space_.field()->equals(alg_->field()))
        throw invalid_input_error("ideal subspace over the wrong field");
    // Closure under right multiplication by every basis element.
    for (std::size_t r = 0; r < space_.dim(); ++r) {
        AlgebraElement v = alg_->element(space_.basis().row(r));
        for (std::size_t j = 0; j < alg_->dim(); ++j) {
            AlgebraElement w = v * alg_->basis_element(j);
            if (!space_.contains(w.coords()))
                throw invalid_input_error("subspace is not a right ideal");
        }
    }
}

RightIdeal ideal_from_idempotent(const AlgebraElement& e) {
    if (!e.is_idempotent())
        throw invalid_input_error("ideal_from_idempotent requires an idempotent");
    const auto& A = e.algebra();
    const std::size_t d = A->dim();
    Matrix rows(A->field(), d, d);
    for (std::size_t j = 0; j < d; ++j)
        rows.set_row(j, (e * A->basis_element(j)).coords());
    return RightIdeal(A, Subspace::span(rows));
}

unsigned reduced_rank(const RightIdeal& I) {
    auto deg = I.algebra()->degree();
    if (!deg) throw invalid_input_error("reduced rank needs a degree certificate");
    if (I.dim() % *deg != 0)
        throw structural_error("ideal dimension is not divisible by the degree");
    return static_cast<unsigned>(I.dim() / *deg);
}

std::optional<AlgebraElement> summand_generator(const RightIdeal& I) {
    const auto& A = I.algebra();
    const auto& F = A->field();
    const std::size_t d = A->dim();
    const std::size_t m = I.dim();
    if (m == 0) return A->zero();
    // e = sum_r t_r v_r with e * v_j = v_j for every basis vector v_j of I.
    std::vector<AlgebraElement> basis;
    basis.reserve(m);
    for (std::size_t r = 0; r < m; ++r) basis.push_back(A->element(I.subspace().basis().row(r)));
    Matrix M(F, d * m, m);
    std::vector<Scalar> rhs;
    rhs.reserve(d * m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < m; ++r) {
            AlgebraElement prod = basis[r] * basis[j];
            for (std::size_t t = 0; t < d; ++t) M.at(j * d + t, r) = prod.coords()[t];
        }
        for (std::size_t t = 0; t < d; ++t) rhs.push_back(basis[j].coords()[t]);
    }
    auto sol = solve_affine(M, rhs);
    if (sol.is_none()) return std::nullopt;
    AlgebraElement e = A->zero();
    for (std::size_t r = 0; r < m; ++r) e = e + basis[r].scale(sol.particular[r]);
    return e;
}

} // namespace etale
