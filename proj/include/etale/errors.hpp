#ifndef ETALE_ERRORS_HPP
#define ETALE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etale {

// Root of the library's exception hierarchy.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or precondition-violating input (CLI exit 1).
struct invalid_input_error : error {
    using error::error;
};

// An operation left the dense open locus where it is defined (CLI exit 2).
struct domain_error : error {
    using error::error;
};

// Element is outside U: its minimal polynomial is not squarefree of full degree.
struct not_in_u_error : domain_error {
    using domain_error::domain_error;
};

// Subalgebra meets the chosen complement nontrivially.
struct transversality_error : domain_error {
    using domain_error::domain_error;
};

// Point lies on the boundary of a birational map's locus (tangent line, b outside U, ...).
struct boundary_error : domain_error {
    using domain_error::domain_error;
};

// Plucker coordinates do not satisfy the decomposability relation.
struct not_decomposable_error : domain_error {
    using domain_error::domain_error;
};

// Splitting would require a field tower outside the supported family.
struct unsupported_splitting_error : domain_error {
    using domain_error::domain_error;
};

// Deterministic search ran out of candidates (tiny fields).
struct exhaustion_error : domain_error {
    using domain_error::domain_error;
};

// Structural inconsistency, e.g. an ideal whose dimension the degree does not divide.
struct structural_error : domain_error {
    using domain_error::domain_error;
};

// Enumeration would exceed the configured budget (CLI exit 3).
struct budget_error : error {
    using error::error;
};

} // namespace etale

#endif
