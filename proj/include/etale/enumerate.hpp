#ifndef ETALE_ENUMERATE_HPP
#define ETALE_ENUMERATE_HPP

#include <functional>

#include "etale/moduli.hpp"

namespace etale {

struct EnumerationBudget {
    // Cap on the number of candidate subspaces an RREF traversal may visit.
    std::uint64_t max_subspace_candidates = 1ull << 30;
    // Cap on element sweeps (idempotent search, root hunts).
    std::uint64_t max_element_sweep = 1ull << 20;
};

/// Counting result of one moduli verification run.
struct EnumerationReport {
    Partition rho;
    std::uint64_t count_subalgebras = 0;
    std::uint64_t count_systems = 0;
    bool match = false;             // the two counts agree
    bool bijection_verified = false; // the two explicit maps are mutually inverse
    double seconds = 0.0;
};

// Number of r-dimensional subspaces of F_q^D (Gaussian binomial).
mpz_class gaussian_binomial(unsigned D, unsigned r, std::uint64_t q);

// Visit every r-dimensional subspace of F^ambient exactly once, in a
// deterministic order, via RREF canonical forms.
void for_each_subspace(const FieldPtr& F, std::size_t ambient, std::size_t r,
                       const EnumerationBudget& budget,
                       const std::function<void(const Subspace&)>& fn);

// All m-dimensional etale subalgebras of A (finite base field), sorted
// canonically; enumeration runs over subspaces containing 1.
std::vector<EtaleSubalgebra> enum_etale_subalgebras(const AlgebraPtr& A, unsigned m,
                                                    const EnumerationBudget& budget = {});

enum class IdempotentStrategy {
    automatic,  // projections when the algebra is a matrix algebra, else sweep
    sweep,      // exhaustive element sweep (any algebra, budget permitting)
    projection, // image/kernel subspace pairs (matrix algebras only)
};

// Every idempotent of A over its own (finite) base field.
std::vector<AlgebraElement> enum_idempotents(const AlgebraPtr& A,
                                             const EnumerationBudget& budget = {},
                                             IdempotentStrategy strategy =
                                                 IdempotentStrategy::automatic);

// All Frobenius-stable unordered idempotent systems with rank profile rho,
// each over the canonical extension of minimal sufficient degree for its
// orbit structure.  Requires a degree certificate on A.
std::vector<IdealSystem> enum_ideal_systems(const AlgebraPtr& A, const Partition& rho,
                                            const EnumerationBudget& budget = {});

// Both enumerations plus the explicit bijection check between them.
EnumerationReport verify_moduli_count(const AlgebraPtr& A, const Partition& rho,
                                      const EnumerationBudget& budget = {});

} // namespace etale

#endif
