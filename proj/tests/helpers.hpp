#ifndef ETALE_TESTS_HELPERS_HPP
#define ETALE_TESTS_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "etale/algebra.hpp"

namespace etale::testing {

// Deterministic PRNG, pinned independent of the standard library.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long integer(long lo, long hi) { // inclusive range
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline Scalar random_scalar(const FieldPtr& F, SplitMix64& rng) {
    if (F->is_finite()) return F->nth_element(rng.below(F->order()));
    mpq_class q(rng.integer(-9, 9), rng.integer(1, 9));
    q.canonicalize();
    return F->from_mpq(q);
}

inline Matrix random_matrix(const FieldPtr& F, std::size_t rows, std::size_t cols,
                            SplitMix64& rng) {
    Matrix M(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = random_scalar(F, rng);
    return M;
}

inline AlgebraElement random_element(const AlgebraPtr& A, SplitMix64& rng) {
    std::vector<Scalar> c;
    c.reserve(A->dim());
    for (std::size_t i = 0; i < A->dim(); ++i) c.push_back(random_scalar(A->field(), rng));
    return A->element(std::move(c));
}

// A random invertible matrix with small integer entries.
inline Matrix random_invertible(const FieldPtr& F, std::size_t n, SplitMix64& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        Matrix M = random_matrix(F, n, n, rng);
        if (!M.det().is_zero()) return M;
    }
    throw std::runtime_error("random invertible matrix eluded 1000 draws");
}

// Conjugate of diag(roots) by a random invertible matrix: an exact test
// element with known rational spectrum.
inline AlgebraElement conjugated_diagonal(const AlgebraPtr& A, const std::vector<Scalar>& diag,
                                          SplitMix64& rng) {
    auto n = *A->matrix_form();
    Matrix g = random_invertible(A->field(), n, rng);
    Matrix D(A->field(), n, n);
    for (unsigned i = 0; i < n; ++i) D.at(i, i) = diag[i];
    Matrix M = g * D * g.inverse();
    std::vector<Scalar> coords;
    coords.reserve(A->dim());
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) coords.push_back(M.at(i, j));
    return A->element(std::move(coords));
}

} // namespace etale::testing

#endif
