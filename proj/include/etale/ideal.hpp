#ifndef ETALE_IDEAL_HPP
#define ETALE_IDEAL_HPP

#include <optional>

#include "etale/algebra.hpp"

namespace etale {

/// A right ideal: a subspace of the algebra closed under right
/// multiplication by every basis element (checked at construction).
class RightIdeal {
public:
    RightIdeal(AlgebraPtr alg, Subspace space);

    const AlgebraPtr& algebra() const { return alg_; }
    const Subspace& subspace() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

    bool operator==(const RightIdeal& o) const { return space_ == o.space_; }
    bool operator!=(const RightIdeal& o) const { return !(*this == o); }
    std::strong_ordering cmp(const RightIdeal& o) const { return space_.cmp(o.space_); }

private:
    AlgebraPtr alg_;
    Subspace space_;
};

// The right ideal eA spanned by { e * b_j }; e must be idempotent.
RightIdeal ideal_from_idempotent(const AlgebraElement& e);

// dim(I) / deg(A); requires a degree certificate, and throws
// structural_error when the degree does not divide the dimension.
unsigned reduced_rank(const RightIdeal& I);

// An idempotent e in I acting as identity on I, when one exists; then
// ideal_from_idempotent(e) == I.
std::optional<AlgebraElement> summand_generator(const RightIdeal& I);

} // namespace etale

#endif
