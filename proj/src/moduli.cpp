#include "etale/moduli.hpp"

#include <algorithm>
#include <numeric>

namespace etale {

// -------------------------------------------------- lagrange_idempotents

std::vector<AlgebraElement> lagrange_idempotents(const AlgebraElement& a,
                                                 const std::vector<Scalar>& roots) {
    const auto& A = a.algebra();
    const auto& F = A->field();
    Polynomial f = min_poly(a);
    if (roots.size() != static_cast<std::size_t>(f.degree()))
        throw invalid_input_error("root count does not match the minimal polynomial degree");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (!roots[i].field()->equals(F))
            throw invalid_input_error("root outside the algebra's base field");
        if (!f.eval(roots[i]).is_zero())
            throw invalid_input_error("value is not a root of the minimal polynomial");
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw invalid_input_error("repeated root");
    }
    std::vector<AlgebraElement> out;
    out.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        AlgebraElement e = A->one();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            // (a - r_j) / (r_i - r_j)
            Scalar denom = roots[i] - roots[j];
            e = (e * (a - A->one().scale(roots[j]))).scale(denom.inverse());
        }
        out.push_back(e);
    }
    return out;
}

// ----------------------------------------------------------------- psi

EtaleSubalgebra psi(const AlgebraElement& a) {
    const auto& A = a.algebra();
    if (!A->degree())
        throw invalid_input_error("psi needs an algebra with a degree certificate");
    const unsigned n = *A->degree();
    Polynomial f = min_poly(a);
    if (f.degree() != static_cast<int>(n))
        throw not_in_u_error("element generates a subalgebra of dimension " +
                             std::to_string(f.degree()) + " < degree " + std::to_string(n));
    if (!squarefree_test(f))
        throw not_in_u_error("minimal polynomial is not squarefree");
    Matrix rows(A->field(), n, A->dim());
    AlgebraElement p = A->one();
    for (unsigned k = 0; k < n; ++k) {
        rows.set_row(k, p.coords());
        p = p * a;
    }
    return EtaleSubalgebra::generated_by(a, Subspace::span(rows));
}

// ------------------------------------------------------------ PsiConfig

PsiConfig::PsiConfig(EtaleSubalgebra E, AlgebraElement a, Subspace L)
    : E_(std::move(E)), a_(std::move(a)), L_(std::move(L)) {}

PsiConfig PsiConfig::with_complement(const AlgebraElement& a, Subspace L) {
    EtaleSubalgebra E = psi(a);
    const auto& A = a.algebra();
    const std::size_t d = A->dim();
    if (L.ambient() != d) throw invalid_input_error("complement has the wrong ambient space");
    if (L.dim() != d - E.dim())
        throw invalid_input_error("complement dimension must be dim(A) - dim(E)");
    if (L.intersect(E.subspace()).dim() != 0)
        throw invalid_input_error("complement meets the reference subalgebra");
    return PsiConfig(std::move(E), a, std::move(L));
}

PsiConfig PsiConfig::standard(const AlgebraElement& a) {
    EtaleSubalgebra E = psi(a);
    const auto& A = a.algebra();
    const auto& F = A->field();
    const std::size_t d = A->dim();
    // Complete E's RREF basis with standard basis vectors, greedily in
    // index order; the result is a deterministic complement.
    Subspace cur = E.subspace();
    std::vector<std::vector<Scalar>> chosen;
    for (std::size_t j = 0; j < d && cur.dim() < d; ++j) {
        std::vector<Scalar> v(d, F->zero());
        v[j] = F->one();
        if (!cur.contains(v)) {
            Matrix one_row = Matrix::from_rows(F, {v}, d);
            cur = cur.add(Subspace::span(one_row));
            chosen.push_back(std::move(v));
        }
    }
    Subspace L = Subspace::span(Matrix::from_rows(F, chosen, d));
    return PsiConfig(std::move(E), a, std::move(L));
}

// ----------------------------------------------------------------- phi

AlgebraElement phi(const EtaleSubalgebra& Eprime, const PsiConfig& cfg) {
    const auto& A = Eprime.algebra();
    if (!A->equals(*cfg.generator().algebra()))
        throw invalid_input_error("subalgebra and configuration live in different algebras");
    const auto& F = A->field();
    const std::size_t d = A->dim();
    const unsigned n = *A->degree();
    if (Eprime.dim() != n)
        throw invalid_input_error("phi needs a maximal etale subalgebra");
    if (Eprime.subspace().intersect(cfg.complement()).dim() != 0)
        throw transversality_error("subalgebra meets the complement L");

    // b = sum t_j f_j with b - a in L: [F^T | -L^T] (t; s) = a.
    const auto& EB = Eprime.subspace().basis();
    const auto& LB = cfg.complement().basis();
    const std::size_t k = EB.rows(), l = LB.rows();
    Matrix M(F, d, k + l);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < k; ++j) M.at(r, j) = EB.at(j, r);
        for (std::size_t j = 0; j < l; ++j) M.at(r, k + j) = -LB.at(j, r);
    }
    auto sol = solve_affine(M, cfg.generator().coords());
    if (!sol.is_unique())
        throw transversality_error("E' + L does not decompose the algebra uniquely");
    AlgebraElement b = A->zero();
    for (std::size_t j = 0; j < k; ++j)
        b = b + A->element(EB.row(j)).scale(sol.particular[j]);

    Polynomial f = min_poly(b);
    if (f.degree() != static_cast<int>(n) || !squarefree_test(f))
        throw boundary_error("the unique point of E' in L + a lies outside U");
    return b;
}

// ------------------------------------------------------------ IdealSystem

namespace {

std::vector<AlgebraElement> decompose_one(const AlgebraPtr& A,
                                          const std::vector<RightIdeal>& ideals) {
    const auto& F = A->field();
    const std::size_t d = A->dim();
    std::size_t total = 0;
    for (const auto& I : ideals) total += I.dim();
    Matrix M(F, d, total);
    std::size_t col = 0;
    for (const auto& I : ideals)
        for (std::size_t r = 0; r < I.dim(); ++r) {
            for (std::size_t t = 0; t < d; ++t) M.at(t, col) = I.subspace().basis().at(r, t);
            ++col;
        }
    auto sol = solve_affine(M, A->one_coords());
    if (!sol.is_unique())
        throw invalid_input_error("ideals do not decompose the algebra directly");
    std::vector<AlgebraElement> idems;
    col = 0;
    for (const auto& I : ideals) {
        AlgebraElement e = A->zero();
        for (std::size_t r = 0; r < I.dim(); ++r)
            e = e + A->element(I.subspace().basis().row(r)).scale(sol.particular[col++]);
        idems.push_back(e);
    }
    return idems;
}

void validate_system(const AlgebraPtr& A, const std::vector<RightIdeal>& ideals,
                     const std::vector<AlgebraElement>& idems) {
    std::vector<Subspace> parts;
    parts.reserve(ideals.size());
    for (const auto& I : ideals) parts.push_back(I.subspace());
    if (!direct_sum_check(parts, A->dim()))
        throw invalid_input_error("ideals do not span the algebra directly");
    AlgebraElement sum = A->zero();
    for (const auto& e : idems) sum = sum + e;
    if (!(sum == A->one())) throw invalid_input_error("idempotents do not sum to 1");
    for (std::size_t i = 0; i < idems.size(); ++i) {
        if (idems[i].is_zero()) throw invalid_input_error("zero idempotent in a system");
        for (std::size_t j = 0; j < idems.size(); ++j) {
            AlgebraElement p = idems[i] * idems[j];
            if (i == j ? !(p == idems[i]) : !p.is_zero())
                throw invalid_input_error("system elements are not orthogonal idempotents");
        }
    }
    for (std::size_t i = 0; i < idems.size(); ++i) {
        RightIdeal gen = ideal_from_idempotent(idems[i]);
        if (!(gen == ideals[i]))
            throw invalid_input_error("ideal is not generated by its idempotent");
    }
}

} // namespace

IdealSystem IdealSystem::from_ideals(AlgebraPtr alg, std::vector<RightIdeal> ideals,
                                     FieldPtr base_field) {
    if (ideals.empty()) throw invalid_input_error("empty ideal system");
    auto idems = decompose_one(alg, ideals);
    validate_system(alg, ideals, idems);
    IdealSystem sys;
    sys.alg_ = std::move(alg);
    sys.base_ = std::move(base_field);
    // Canonical order: reduced rank descending, then subspace order.
    std::vector<std::size_t> perm(ideals.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        if (ideals[x].dim() != ideals[y].dim()) return ideals[x].dim() > ideals[y].dim();
        return ideals[x].cmp(ideals[y]) == std::strong_ordering::less;
    });
    for (std::size_t i : perm) {
        sys.ideals_.push_back(ideals[i]);
        sys.idems_.push_back(idems[i]);
    }
    return sys;
}

IdealSystem IdealSystem::from_idempotents(AlgebraPtr alg, std::vector<AlgebraElement> idems,
                                          FieldPtr base_field) {
    std::vector<RightIdeal> ideals;
    ideals.reserve(idems.size());
    for (const auto& e : idems) ideals.push_back(ideal_from_idempotent(e));
    return from_ideals(std::move(alg), std::move(ideals), std::move(base_field));
}

Partition IdealSystem::rank_profile() const {
    std::vector<unsigned> ranks;
    ranks.reserve(ideals_.size());
    for (const auto& I : ideals_) ranks.push_back(reduced_rank(I));
    return Partition(std::move(ranks));
}

bool IdealSystem::is_frobenius_stable() const {
    if (!base_->is_finite()) return false;
    std::uint64_t q = base_->order();
    for (const auto& e : idems_) {
        AlgebraElement img = frobenius_element(e, q);
        bool found = false;
        for (const auto& f : idems_)
            if (img == f) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

IdealSystem IdealSystem::canonicalize_field(const AlgebraPtr& base_algebra) const {
    if (!base_->is_finite()) return *this;
    std::uint64_t q = base_->order();
    // Frobenius orbit sizes of the idempotent set.
    std::vector<bool> seen(idems_.size(), false);
    unsigned lcm_size = 1;
    for (std::size_t i = 0; i < idems_.size(); ++i) {
        if (seen[i]) continue;
        AlgebraElement x = frobenius_element(idems_[i], q);
        unsigned orbit = 1;
        int guard = 0;
        while (!(x == idems_[i])) {
            bool matched = false;
            for (std::size_t j = 0; j < idems_.size(); ++j)
                if (x == idems_[j]) { seen[j] = true; matched = true; break; }
            if (!matched)
                throw structural_error("idempotent system is not Frobenius-stable");
            ++orbit;
            x = frobenius_element(x, q);
            if (++guard > 64) throw structural_error("Frobenius orbit failed to close");
        }
        lcm_size = static_cast<unsigned>(std::lcm(lcm_size, orbit));
    }
    FieldPtr target = canonical_extension(base_, lcm_size);
    if (target->equals(alg_->field()) && tower_degree_over(alg_->field(), base_) == lcm_size)
        return *this;
    AlgebraPtr big = base_algebra->extend_scalars(target);
    FieldEmbedding sigma = FieldEmbedding::find(target, alg_->field(), base_);
    std::vector<AlgebraElement> moved;
    moved.reserve(idems_.size());
    for (const auto& e : idems_) {
        std::vector<Scalar> c;
        c.reserve(e.coords().size());
        for (const auto& x : e.coords()) {
            auto pre = sigma.preimage(x);
            if (!pre)
                throw structural_error("idempotent does not descend to its minimal field");
            c.push_back(*pre);
        }
        moved.emplace_back(big, std::move(c));
    }
    return from_idempotents(big, std::move(moved), base_);
}

bool IdealSystem::operator==(const IdealSystem& o) const {
    if (ideals_.size() != o.ideals_.size()) return false;
    if (!alg_->equals(*o.alg_)) return false;
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        if (!(ideals_[i] == o.ideals_[i])) return false;
    return true;
}

std::strong_ordering IdealSystem::cmp(const IdealSystem& o) const {
    if (auto c = ideals_.size() <=> o.ideals_.size(); c != std::strong_ordering::equal) return c;
    std::string fa = alg_->field()->describe(), fb = o.alg_->field()->describe();
    if (auto c = fa.compare(fb); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
        auto c = ideals_[i].cmp(o.ideals_[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

// ----------------------------------------------- system <-> subalgebra

EtaleSubalgebra subalgebra_from_ideal_system(const IdealSystem& sys) {
    const auto& A = sys.algebra();
    Matrix rows(A->field(), sys.length(), A->dim());
    for (std::size_t i = 0; i < sys.length(); ++i)
        rows.set_row(i, sys.idempotents()[i].coords());
    return EtaleSubalgebra(A, Subspace::span(rows));
}

IdealSystem ideal_system_from_subalgebra(const EtaleSubalgebra& E) {
    auto [E2, idems] = E.minimal_idempotents();
    AlgebraPtr big = idems.front().algebra();
    IdealSystem sys = IdealSystem::from_idempotents(big, idems, E.algebra()->field());
    return sys.canonicalize_field(E.algebra());
}

Subspace underlying_subspace(const EtaleSubalgebra& E) { return E.subspace(); }

} // namespace etale
