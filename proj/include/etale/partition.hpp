#ifndef ETALE_PARTITION_HPP
#define ETALE_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "etale/errors.hpp"

namespace etale {

/// A partition: a multiset of positive integers stored sorted descending.
class Partition {
public:
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned sum() const;
    std::size_t length() const { return parts_.size(); }         // l(rho)
    unsigned multiplicity(unsigned i) const;                     // rho(i)
    std::vector<unsigned> distinct_parts() const;                // S(rho), descending
    std::size_t distinct_count() const;                          // N(rho)

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string to_text() const; // "[2, 1]"
    static Partition from_text(const std::string& s); // "2,1" or "[2, 1]"

private:
    std::vector<unsigned> parts_;
};

} // namespace etale

#endif
