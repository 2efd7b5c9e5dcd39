#ifndef ETALE_LINALG_HPP
#define ETALE_LINALG_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "etale/field.hpp"

namespace etale {

/// Dense exact matrix over a Field, row-major.
class Matrix {
public:
    Matrix(FieldPtr F, std::size_t rows, std::size_t cols); // zeros
    static Matrix identity(const FieldPtr& F, std::size_t n);
    static Matrix from_rows(const FieldPtr& F, const std::vector<std::vector<Scalar>>& rows,
                            std::size_t cols);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Scalar>& r);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // M v

    Matrix rref() const;
    std::size_t rank() const;
    Scalar det() const;
    Matrix inverse() const; // square, invertible

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    // Total order: by shape, then entries row-major in canonical scalar order.
    std::strong_ordering cmp(const Matrix& o) const;

    std::string to_text() const;

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// A linear subspace in canonical form: basis rows in RREF with strictly
/// increasing pivot columns and no zero rows.  Equality of subspaces is
/// equality of these matrices.
class Subspace {
public:
    // The zero subspace of the given ambient dimension.
    Subspace(FieldPtr F, std::size_t ambient);
    // Row span of the given matrix.
    static Subspace span(const Matrix& vectors);

    const FieldPtr& field() const { return field_; }
    const Matrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return ambient_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the RREF basis; empty when v is outside.
    std::optional<std::vector<Scalar>> coordinates_of(const std::vector<Scalar>& v) const;

    Subspace intersect(const Subspace& other) const;
    Subspace add(const Subspace& other) const; // subspace sum

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    std::strong_ordering cmp(const Subspace& o) const;

private:
    FieldPtr field_;
    std::size_t ambient_;
    Matrix basis_;
};

/// Result of exact Gaussian elimination on M x = b.
struct AffineSolution {
    enum class Kind { unique, solution_set, none };
    Kind kind;
    std::vector<Scalar> particular; // valid unless kind == none
    Matrix kernel_basis;            // rows; zero rows x cols matrix when unique/none

    bool is_unique() const { return kind == Kind::unique; }
    bool is_none() const { return kind == Kind::none; }
};

AffineSolution solve_affine(const Matrix& M, const std::vector<Scalar>& b);

// Basis rows of { x : M x = 0 }.
Matrix kernel_basis(const Matrix& M);

// True iff the given subspaces are independent and together fill the
// ambient space: rank of the concatenated bases equals the dimension sum,
// which equals the ambient dimension.
bool direct_sum_check(const std::vector<Subspace>& parts, std::size_t ambient_dim);

} // namespace etale

#endif
