#include "etale/etale_subalgebra.hpp"

#include <algorithm>

#include "etale/moduli.hpp"

namespace etale {

// ----------------------------------------------------------- predicate

namespace {

// Multiplication matrix of w restricted to V, in V's RREF basis; empty when
// w*V leaves V.
std::optional<Matrix> restricted_mult_matrix(const AlgebraPtr& A, const Subspace& V,
                                             const AlgebraElement& w) {
    const std::size_t m = V.dim();
    Matrix M(A->field(), m, m);
    for (std::size_t j = 0; j < m; ++j) {
        AlgebraElement prod = w * A->element(V.basis().row(j));
        auto coords = V.coordinates_of(prod.coords());
        if (!coords) return std::nullopt;
        for (std::size_t i = 0; i < m; ++i) M.at(i, j) = (*coords)[i];
    }
    return M;
}

Scalar trace_of(const Matrix& M) {
    Scalar t = M.field()->zero();
    for (std::size_t i = 0; i < M.rows(); ++i) t = t + M.at(i, i);
    return t;
}

} // namespace

bool is_etale_subalgebra(const Subspace& V, const AlgebraPtr& A) {
    if (V.ambient() != A->dim()) throw invalid_input_error("subspace/algebra mismatch");
    if (V.dim() == 0) return false;
    if (!V.contains(A->one_coords())) return false;

    const std::size_t m = V.dim();
    std::vector<AlgebraElement> basis;
    basis.reserve(m);
    for (std::size_t i = 0; i < m; ++i) basis.push_back(A->element(V.basis().row(i)));

    // Closure and commutativity on basis pairs.
    std::vector<std::vector<AlgebraElement>> prods(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            AlgebraElement p = basis[i] * basis[j];
            if (!(p == basis[j] * basis[i])) return false;
            if (!V.contains(p.coords())) return false;
            prods[i].push_back(p);
        }
    }

    // Trace form T(i, j) = trace of multiplication by b_i b_j on V.
    Matrix T(A->field(), m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            auto mm = restricted_mult_matrix(A, V, prods[i][j]);
            if (!mm) return false; // cannot happen once closure holds
            Scalar t = trace_of(*mm);
            T.at(i, j) = t;
            T.at(j, i) = t;
        }
    return !T.det().is_zero();
}

// ------------------------------------------------------ EtaleSubalgebra

EtaleSubalgebra::EtaleSubalgebra(AlgebraPtr alg, Subspace space)
    : alg_(std::move(alg)), space_(std::move(space)) {
    if (!is_etale_subalgebra(space_, alg_))
        throw invalid_input_error("subspace is not an etale subalgebra");
}

EtaleSubalgebra EtaleSubalgebra::generated_by(const AlgebraElement& a, Subspace space) {
    EtaleSubalgebra E(a.algebra(), std::move(space));
    E.primitive_ = a;
    return E;
}

std::vector<AlgebraElement> EtaleSubalgebra::basis_elements() const {
    std::vector<AlgebraElement> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(alg_->element(space_.basis().row(i)));
    return out;
}

namespace {

// Deterministic scalar sequence for primitive-element multipliers.
std::vector<Scalar> multiplier_sequence(const FieldPtr& F, std::size_t want) {
    std::vector<Scalar> out;
    if (F->is_finite()) {
        std::uint64_t n = F->order();
        for (std::uint64_t i = 1; i < n && out.size() < want; ++i)
            out.push_back(F->nth_element(i));
    } else {
        for (long v = 1; out.size() < want; ++v) out.push_back(F->from_integer(v));
    }
    return out;
}

} // namespace

const AlgebraElement& EtaleSubalgebra::primitive_element() const {
    if (primitive_) return *primitive_;
    const std::size_t m = dim();
    auto basis = basis_elements();
    auto degree_of = [](const AlgebraElement& x) {
        return static_cast<std::size_t>(min_poly(x).degree());
    };

    // Pass 1: basis elements.
    AlgebraElement best = basis[0];
    std::size_t best_deg = degree_of(best);
    for (std::size_t i = 1; i < m && best_deg < m; ++i) {
        std::size_t d = degree_of(basis[i]);
        if (d > best_deg) {
            best = basis[i];
            best_deg = d;
        }
    }

    // Pass 2: grow the current candidate by basis elements with small
    // multipliers; enough multipliers exist over fields of size
    // >= m(m-1)/2 + 1.
    if (best_deg < m) {
        auto lambdas = multiplier_sequence(alg_->field(), m * m + 1);
        for (std::size_t i = 0; i < m && best_deg < m; ++i) {
            for (const auto& lam : lambdas) {
                AlgebraElement cand = best + basis[i].scale(lam);
                std::size_t d = degree_of(cand);
                if (d > best_deg) {
                    best = cand;
                    best_deg = d;
                    if (best_deg == m) break;
                }
            }
        }
    }

    // Pass 3 (tiny finite fields): exhaustive sweep of E itself.
    if (best_deg < m && alg_->field()->is_finite()) {
        std::uint64_t q = alg_->field()->order();
        std::uint64_t total = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (total > (1ull << 24) / q) { overflow = true; break; }
            total *= q;
        }
        if (!overflow) {
            for (std::uint64_t idx = 0; idx < total && best_deg < m; ++idx) {
                std::uint64_t t = idx;
                AlgebraElement cand = alg_->zero();
                for (std::size_t i = 0; i < m; ++i) {
                    cand = cand + basis[i].scale(alg_->field()->nth_element(t % q));
                    t /= q;
                }
                if (degree_of(cand) == m) {
                    best = cand;
                    best_deg = m;
                }
            }
        }
    }

    if (best_deg < m)
        throw exhaustion_error("no primitive element within the search budget over " +
                               alg_->field()->describe());
    primitive_ = best;
    return *primitive_;
}

std::pair<FieldPtr, std::vector<AlgebraElement>> EtaleSubalgebra::minimal_idempotents() const {
    // Over tiny fields the subalgebra may have no primitive element at all
    // (a split product runs out of distinct coordinates); extending scalars
    // fixes that, and minimal idempotents are stable under base change.
    const EtaleSubalgebra* work = this;
    std::optional<EtaleSubalgebra> extended;
    for (unsigned t = 2; t <= 8; ++t) {
        try {
            work->primitive_element();
            break;
        } catch (const exhaustion_error&) {
            if (!alg_->field()->is_finite()) throw;
            extended = extend_scalars(*this, canonical_extension(alg_->field(), t));
            work = &*extended;
        }
    }
    const AlgebraElement& a = work->primitive_element();
    Polynomial f = min_poly(a);
    if (!squarefree_test(f))
        throw structural_error("primitive element of an etale subalgebra has a repeated root");
    auto [E2, roots] = splitting_extension(f);
    AlgebraPtr big = work->algebra()->extend_scalars(E2);
    AlgebraElement ax = embed_element(a, big);
    std::vector<Scalar> rs;
    rs.reserve(roots.size());
    for (const auto& r : roots) rs.push_back(embed(r, E2));
    return {E2, lagrange_idempotents(ax, rs)};
}

Partition EtaleSubalgebra::type() const {
    if (type_) return *type_;
    auto [E2, idems] = minimal_idempotents();
    std::vector<unsigned> ranks;
    ranks.reserve(idems.size());
    for (const auto& e : idems) ranks.push_back(reduced_rank(ideal_from_idempotent(e)));
    Partition p{std::move(ranks)};
    type_ = p;
    return p;
}

bool EtaleSubalgebra::is_subfield() const {
    try {
        return is_irreducible(min_poly(primitive_element()));
    } catch (const exhaustion_error&) {
        // A field extension of the base always has a primitive element, so
        // running out of candidates proves E is a proper product.
        return false;
    }
}

AlgebraElement primitive_element(const EtaleSubalgebra& E) { return E.primitive_element(); }

std::pair<FieldPtr, std::vector<AlgebraElement>> minimal_idempotents(const EtaleSubalgebra& E) {
    return E.minimal_idempotents();
}

Partition type_of(const EtaleSubalgebra& E) { return E.type(); }

bool is_subfield(const EtaleSubalgebra& E) { return E.is_subfield(); }

// --------------------------------------------------------- base change

Subspace extend_subspace(const Subspace& V, const FieldPtr& Eprime) {
    Matrix rows(Eprime, V.dim(), V.ambient());
    for (std::size_t i = 0; i < V.dim(); ++i)
        for (std::size_t j = 0; j < V.ambient(); ++j)
            rows.at(i, j) = embed(V.basis().at(i, j), Eprime);
    // An RREF basis stays RREF under field extension.
    return Subspace::span(rows);
}

std::optional<Subspace> descend_subspace(const Subspace& V, const FieldPtr& subfield) {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < V.dim(); ++i) {
        std::vector<Scalar> row;
        row.reserve(V.ambient());
        for (std::size_t j = 0; j < V.ambient(); ++j) {
            auto d = try_descend(V.basis().at(i, j), subfield);
            if (!d) return std::nullopt;
            row.push_back(*d);
        }
        rows.push_back(std::move(row));
    }
    return Subspace::span(Matrix::from_rows(subfield, rows, V.ambient()));
}

EtaleSubalgebra extend_scalars(const EtaleSubalgebra& E, const FieldPtr& Eprime) {
    AlgebraPtr big = E.algebra()->extend_scalars(Eprime);
    return EtaleSubalgebra(big, extend_subspace(E.subspace(), Eprime));
}

} // namespace etale
