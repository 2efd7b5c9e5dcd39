#include "etale/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace etale {

// ------------------------------------------------------------- Matrix

Matrix::Matrix(FieldPtr F, std::size_t rows, std::size_t cols)
    : field_(std::move(F)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(const FieldPtr& F, std::size_t n) {
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F->one();
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& F, const std::vector<std::vector<Scalar>>& rows,
                         std::size_t cols) {
    Matrix m(F, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw invalid_input_error("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(data_.begin() + static_cast<long>(i * cols_),
                               data_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const std::vector<Scalar>& r) {
    if (r.size() != cols_) throw invalid_input_error("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw invalid_input_error("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw invalid_input_error("matrix shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw invalid_input_error("matrix shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw invalid_input_error("vector length mismatch");
    std::vector<Scalar> out(rows_, field_->zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] = out[i] + at(i, j) * v[j];
        }
    return out;
}

Matrix Matrix::rref() const {
    Matrix R = *this;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
        std::size_t pivot = pr;
        while (pivot < rows_ && R.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != pr)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(R.at(pivot, j), R.at(pr, j));
        Scalar inv = R.at(pr, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) R.at(pr, j) = R.at(pr, j) * inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || R.at(r, c).is_zero()) continue;
            Scalar f = R.at(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                R.at(r, j) = R.at(r, j) - f * R.at(pr, j);
        }
        ++pr;
    }
    return R;
}

std::size_t Matrix::rank() const {
    Matrix R = rref();
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!R.at(i, j).is_zero()) { nonzero = true; break; }
        if (nonzero) ++r;
    }
    return r;
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw invalid_input_error("determinant of a non-square matrix");
    Matrix R = *this;
    Scalar d = field_->one();
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = c;
        while (pivot < rows_ && R.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) return field_->zero();
        if (pivot != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(R.at(pivot, j), R.at(c, j));
            d = -d;
        }
        d = d * R.at(c, c);
        Scalar inv = R.at(c, c).inverse();
        for (std::size_t r = c + 1; r < rows_; ++r) {
            if (R.at(r, c).is_zero()) continue;
            Scalar f = R.at(r, c) * inv;
            for (std::size_t j = c; j < cols_; ++j)
                R.at(r, j) = R.at(r, j) - f * R.at(c, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw invalid_input_error("inverse of a non-square matrix");
    // Eliminate on [M | I].
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_->one();
    }
    Matrix R = aug.rref();
    for (std::size_t i = 0; i < rows_; ++i)
        if (!R.at(i, i).is_one()) throw invalid_input_error("matrix is singular");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = R.at(i, cols_ + j);
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!(data_[i] == o.data_[i])) return false;
    return true;
}

std::strong_ordering Matrix::cmp(const Matrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != std::strong_ordering::equal) return c;
    if (auto c = cols_ <=> o.cols_; c != std::strong_ordering::equal) return c;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        auto c = data_[i].cmp(o.data_[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

std::string Matrix::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_text();
        }
    }
    os << "]";
    return os.str();
}

// ------------------------------------------------------------ Subspace

Subspace::Subspace(FieldPtr F, std::size_t ambient)
    : field_(std::move(F)), ambient_(ambient), basis_(field_, 0, ambient) {}

Subspace Subspace::span(const Matrix& vectors) {
    Matrix R = vectors.rref();
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < R.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < R.cols(); ++j)
            if (!R.at(i, j).is_zero()) { nonzero = true; break; }
        if (nonzero) rows.push_back(R.row(i));
    }
    Subspace s(vectors.field(), vectors.cols());
    s.basis_ = Matrix::from_rows(vectors.field(), rows, vectors.cols());
    return s;
}

std::optional<std::vector<Scalar>> Subspace::coordinates_of(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw invalid_input_error("vector/ambient mismatch");
    std::vector<Scalar> rem = v;
    std::vector<Scalar> coords(dim(), field_->zero());
    for (std::size_t r = 0; r < dim(); ++r) {
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(r, p).is_zero()) ++p;
        // RREF pivot entries are 1.
        if (!rem[p].is_zero()) {
            coords[r] = rem[p];
            for (std::size_t j = p; j < ambient_; ++j)
                rem[j] = rem[j] - coords[r] * basis_.at(r, j);
        }
    }
    for (const auto& x : rem)
        if (!x.is_zero()) return std::nullopt;
    return coords;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    return coordinates_of(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::add(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw invalid_input_error("ambient mismatch");
    Matrix stacked(field_, dim() + other.dim(), ambient_);
    for (std::size_t i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
    for (std::size_t i = 0; i < other.dim(); ++i) stacked.set_row(dim() + i, other.basis_.row(i));
    return span(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw invalid_input_error("ambient mismatch");
    // x in both spans: x = a^T U = b^T V; solve [U^T | -V^T] (a; b) = 0.
    const std::size_t k = dim(), l = other.dim();
    if (k == 0 || l == 0) return Subspace(field_, ambient_);
    Matrix sys(field_, ambient_, k + l);
    for (std::size_t j = 0; j < ambient_; ++j) {
        for (std::size_t r = 0; r < k; ++r) sys.at(j, r) = basis_.at(r, j);
        for (std::size_t r = 0; r < l; ++r) sys.at(j, k + r) = -other.basis_.at(r, j);
    }
    Matrix ker = kernel_basis(sys);
    Matrix vecs(field_, ker.rows(), ambient_);
    for (std::size_t i = 0; i < ker.rows(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) {
            Scalar acc = field_->zero();
            for (std::size_t r = 0; r < k; ++r) acc = acc + ker.at(i, r) * basis_.at(r, j);
            vecs.at(i, j) = acc;
        }
    return span(vecs);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

std::strong_ordering Subspace::cmp(const Subspace& o) const {
    if (auto c = ambient_ <=> o.ambient_; c != std::strong_ordering::equal) return c;
    return basis_.cmp(o.basis_);
}

// --------------------------------------------------------- solve_affine

AffineSolution solve_affine(const Matrix& M, const std::vector<Scalar>& b) {
    if (b.size() != M.rows()) throw invalid_input_error("rhs length mismatch");
    const auto& F = M.field();
    const std::size_t n = M.cols();
    Matrix aug(F, M.rows(), n + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n) = b[i];
    }
    Matrix R = aug.rref();

    std::vector<long> pivot_of_col(n, -1);
    for (std::size_t i = 0; i < R.rows(); ++i) {
        std::size_t p = 0;
        while (p < n + 1 && R.at(i, p).is_zero()) ++p;
        if (p == n + 1) break;       // zero row; the rest are zero too
        if (p == n)                  // 0 = nonzero
            return {AffineSolution::Kind::none, {}, Matrix(F, 0, n)};
        pivot_of_col[p] = static_cast<long>(i);
    }

    std::vector<Scalar> particular(n, F->zero());
    for (std::size_t j = 0; j < n; ++j)
        if (pivot_of_col[j] >= 0)
            particular[j] = R.at(static_cast<std::size_t>(pivot_of_col[j]), n);

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (pivot_of_col[j] < 0) free_cols.push_back(j);

    Matrix ker(F, free_cols.size(), n);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        ker.at(t, fc) = F->one();
        for (std::size_t j = 0; j < n; ++j)
            if (pivot_of_col[j] >= 0)
                ker.at(t, j) = -R.at(static_cast<std::size_t>(pivot_of_col[j]), fc);
    }

    if (free_cols.empty())
        return {AffineSolution::Kind::unique, std::move(particular), Matrix(F, 0, n)};
    return {AffineSolution::Kind::solution_set, std::move(particular), std::move(ker)};
}

Matrix kernel_basis(const Matrix& M) {
    auto sol = solve_affine(M, std::vector<Scalar>(M.rows(), M.field()->zero()));
    return sol.kernel_basis;
}

bool direct_sum_check(const std::vector<Subspace>& parts, std::size_t ambient_dim) {
    if (parts.empty()) return ambient_dim == 0;
    const auto& F = parts.front().field();
    std::size_t total = 0;
    for (const auto& s : parts) {
        if (s.ambient() != parts.front().ambient())
            throw invalid_input_error("subspaces with different ambient spaces");
        total += s.dim();
    }
    if (total != ambient_dim) return false;
    Matrix stacked(F, total, parts.front().ambient());
    std::size_t r = 0;
    for (const auto& s : parts)
        for (std::size_t i = 0; i < s.dim(); ++i) stacked.set_row(r++, s.basis().row(i));
    return stacked.rank() == total;
}

} // namespace etale
