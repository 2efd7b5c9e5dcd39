#ifndef ETALE_MODULI_HPP
#define ETALE_MODULI_HPP

#include "etale/etale_subalgebra.hpp"

namespace etale {

// The idempotents e_i = prod_{j != i} (a - r_j)/(r_i - r_j), one per root,
// in root order.  The roots must be exactly the roots of min_poly(a) in the
// base field of a's algebra, pairwise distinct.
std::vector<AlgebraElement> lagrange_idempotents(const AlgebraElement& a,
                                                 const std::vector<Scalar>& roots);

// The maximal etale subalgebra generated by a, for a in U: min_poly(a)
// squarefree of degree deg(A).  Throws not_in_u_error otherwise.
EtaleSubalgebra psi(const AlgebraElement& a);

/// Configuration for the rational inverse of psi: a reference maximal etale
/// subalgebra E = psi(a) and a complementary subspace L with L + E = A.
class PsiConfig {
public:
    // Default complement: the deterministic RREF completion of E's basis to
    // the full space, taken from standard basis vectors.
    static PsiConfig standard(const AlgebraElement& a);
    static PsiConfig with_complement(const AlgebraElement& a, Subspace L);

    const EtaleSubalgebra& reference() const { return E_; }
    const AlgebraElement& generator() const { return a_; }
    const Subspace& complement() const { return L_; }

private:
    PsiConfig(EtaleSubalgebra E, AlgebraElement a, Subspace L);
    EtaleSubalgebra E_;
    AlgebraElement a_;
    Subspace L_;
};

// The unique b in E' with b - a in L; throws transversality_error when
// E' meets L, and boundary_error when b lands outside U.
AlgebraElement phi(const EtaleSubalgebra& Eprime, const PsiConfig& cfg);

/// An ordered system of right ideals I_1, ..., I_l with (+) I_i = A, plus the
/// idempotents decomposing 1.  Stored in canonical order: reduced rank
/// descending, then subspace order.  `base_field` records the field the
/// system's algebra was extended from (Frobenius acts relative to it).
class IdealSystem {
public:
    static IdealSystem from_ideals(AlgebraPtr alg, std::vector<RightIdeal> ideals,
                                   FieldPtr base_field);
    static IdealSystem from_idempotents(AlgebraPtr alg, std::vector<AlgebraElement> idems,
                                        FieldPtr base_field);

    const AlgebraPtr& algebra() const { return alg_; }
    const FieldPtr& base_field() const { return base_; }
    const std::vector<RightIdeal>& ideals() const { return ideals_; }
    const std::vector<AlgebraElement>& idempotents() const { return idems_; }
    std::size_t length() const { return ideals_.size(); }
    Partition rank_profile() const;

    // True when applying x -> x^|base| to every idempotent permutes the set.
    bool is_frobenius_stable() const;

    // The same system over the canonical minimal splitting field: the
    // canonical extension of base_field of degree lcm(Frobenius orbit sizes).
    IdealSystem canonicalize_field(const AlgebraPtr& base_algebra) const;

    bool operator==(const IdealSystem& o) const;
    std::strong_ordering cmp(const IdealSystem& o) const;

private:
    IdealSystem() = default;
    AlgebraPtr alg_;
    FieldPtr base_;
    std::vector<RightIdeal> ideals_;
    std::vector<AlgebraElement> idems_;
};

// The span of the system's idempotents, as an etale subalgebra of the
// system's algebra; its type is the multiset of the ideals' reduced ranks.
EtaleSubalgebra subalgebra_from_ideal_system(const IdealSystem& sys);

// Over the splitting extension from minimal_idempotents(E): the system
// (e_i A), canonicalized to the minimal splitting field.
IdealSystem ideal_system_from_subalgebra(const EtaleSubalgebra& E);

// The canonical subspace of E inside A (the Grassmannian image).
Subspace underlying_subspace(const EtaleSubalgebra& E);

} // namespace etale

#endif
