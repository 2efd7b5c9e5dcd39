#ifndef ETALE_ETALE_SUBALGEBRA_HPP
#define ETALE_ETALE_SUBALGEBRA_HPP

#include <optional>
#include <utility>

#include "etale/ideal.hpp"
#include "etale/partition.hpp"

namespace etale {

// The etale predicate: V contains 1, is closed under multiplication,
// commutative, and its internal trace form is nondegenerate.
bool is_etale_subalgebra(const Subspace& V, const AlgebraPtr& A);

/// A commutative separable unital subalgebra of an Algebra, held as a
/// canonical subspace.  The primitive element and the type partition are
/// cached lazily; recomputation is deterministic, so duplicate concurrent
/// fills write identical values.
class EtaleSubalgebra {
public:
    EtaleSubalgebra(AlgebraPtr alg, Subspace space);
    // Fast path when a generator is already known (psi); still validated.
    static EtaleSubalgebra generated_by(const AlgebraElement& a, Subspace space);

    const AlgebraPtr& algebra() const { return alg_; }
    const Subspace& subspace() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

    // An element of E whose minimal polynomial has degree dim(E); searched
    // deterministically over basis elements, then pairwise combinations.
    // Throws exhaustion_error when the base field is too small to host one.
    const AlgebraElement& primitive_element() const;

    // A splitting extension E' and the complete list of minimal idempotents
    // of E (x) E', in canonical root order.  Over tiny fields where no
    // primitive element exists, scalars are extended first, so E' may sit a
    // level above the minimal splitting field.
    std::pair<FieldPtr, std::vector<AlgebraElement>> minimal_idempotents() const;

    // Multiset of reduced ranks of the minimal idempotents; a partition of
    // deg(A) of length dim(E).
    Partition type() const;

    // True iff the minimal polynomial of the primitive element is
    // irreducible over the base field.
    bool is_subfield() const;

    std::vector<AlgebraElement> basis_elements() const;

    bool operator==(const EtaleSubalgebra& o) const { return space_ == o.space_; }
    bool operator!=(const EtaleSubalgebra& o) const { return !(*this == o); }
    std::strong_ordering cmp(const EtaleSubalgebra& o) const { return space_.cmp(o.space_); }

private:
    AlgebraPtr alg_;
    Subspace space_;
    mutable std::optional<AlgebraElement> primitive_;
    mutable std::optional<Partition> type_;
};

// Spec-surface free functions.
AlgebraElement primitive_element(const EtaleSubalgebra& E);
std::pair<FieldPtr, std::vector<AlgebraElement>> minimal_idempotents(const EtaleSubalgebra& E);
Partition type_of(const EtaleSubalgebra& E);
bool is_subfield(const EtaleSubalgebra& E);

// E (x) E' inside A (x) E'.
EtaleSubalgebra extend_scalars(const EtaleSubalgebra& E, const FieldPtr& Eprime);

Subspace extend_subspace(const Subspace& V, const FieldPtr& Eprime);

// RREF basis of V with every entry descended to the subfield; empty when
// some entry does not descend.
std::optional<Subspace> descend_subspace(const Subspace& V, const FieldPtr& subfield);

} // namespace etale

#endif
