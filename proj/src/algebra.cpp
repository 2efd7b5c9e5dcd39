#include "etale/algebra.hpp"

#include <sstream>

#include "etale/partition.hpp"

namespace etale {

// ------------------------------------------------------------ Partition

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
        if (p == 0) throw invalid_input_error("partition entries must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

unsigned Partition::sum() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p;
    return s;
}

unsigned Partition::multiplicity(unsigned i) const {
    unsigned c = 0;
    for (unsigned p : parts_)
        if (p == i) ++c;
    return c;
}

std::vector<unsigned> Partition::distinct_parts() const {
    std::vector<unsigned> out;
    for (unsigned p : parts_)
        if (out.empty() || out.back() != p) out.push_back(p);
    return out;
}

std::size_t Partition::distinct_count() const { return distinct_parts().size(); }

std::string Partition::to_text() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition Partition::from_text(const std::string& s) {
    std::vector<unsigned> parts;
    std::string cur;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
            if (!cur.empty()) {
                parts.push_back(static_cast<unsigned>(std::stoul(cur)));
                cur.clear();
            }
        } else {
            throw invalid_input_error("bad partition literal: " + s);
        }
    }
    if (!cur.empty()) parts.push_back(static_cast<unsigned>(std::stoul(cur)));
    if (parts.empty()) throw invalid_input_error("empty partition literal");
    return Partition(std::move(parts));
}

// -------------------------------------------------------------- Algebra

AlgebraPtr Algebra::create(FieldPtr F, std::size_t dim, std::vector<Scalar> table,
                           std::vector<Scalar> one, std::optional<unsigned> degree) {
    return build(std::move(F), dim, std::move(table), std::move(one), degree, std::nullopt,
                 true);
}

AlgebraPtr Algebra::build(FieldPtr F, std::size_t dim, std::vector<Scalar> table,
                          std::vector<Scalar> one, std::optional<unsigned> degree,
                          std::optional<unsigned> matrix_n, bool validate) {
    if (dim == 0) throw invalid_input_error("algebra dimension must be positive");
    if (table.size() != dim * dim * dim)
        throw invalid_input_error("structure constant tensor has wrong size");
    if (one.size() != dim) throw invalid_input_error("unity coordinate length mismatch");
    if (degree && static_cast<std::size_t>(*degree) * *degree != dim)
        throw invalid_input_error("degree certificate does not square to the dimension");

    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->field_ = std::move(F);
    a->dim_ = dim;
    a->table_ = std::move(table);
    a->one_ = std::move(one);
    a->degree_ = degree;
    a->matrix_n_ = matrix_n;

    for (const auto& s : a->table_)
        if (!s.field()->equals(a->field_))
            throw invalid_input_error("structure constant outside the base field");
    for (const auto& s : a->one_)
        if (!s.field()->equals(a->field_))
            throw invalid_input_error("unity coordinate outside the base field");

    a->sparse_.resize(dim * dim);
    a->by_k_.resize(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto& terms = a->sparse_[i * dim + j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!a->c(i, j, k).is_zero()) {
                    terms.emplace_back(k, a->c(i, j, k));
                    a->by_k_[k].emplace_back(i, j, a->c(i, j, k));
                }
        }

    if (validate) {
        AlgebraPtr ap = a;
        // Unity: 1 * b_i = b_i * 1 = b_i.
        AlgebraElement e = ap->one();
        for (std::size_t i = 0; i < dim; ++i) {
            AlgebraElement bi = ap->basis_element(i);
            if (!(e * bi == bi) || !(bi * e == bi))
                throw invalid_input_error("declared unity is not a two-sided identity");
        }
        // Associativity on basis triples.
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                AlgebraElement bij = ap->basis_element(i) * ap->basis_element(j);
                for (std::size_t k = 0; k < dim; ++k) {
                    AlgebraElement left = bij * ap->basis_element(k);
                    AlgebraElement right =
                        ap->basis_element(i) * (ap->basis_element(j) * ap->basis_element(k));
                    if (!(left == right))
                        throw invalid_input_error("structure constants are not associative");
                }
            }
        return ap;
    }
    return a;
}

AlgebraElement Algebra::zero() const {
    return AlgebraElement(shared_from_this(), std::vector<Scalar>(dim_, field_->zero()));
}

AlgebraElement Algebra::one() const {
    return AlgebraElement(shared_from_this(), one_);
}

AlgebraElement Algebra::basis_element(std::size_t i) const {
    if (i >= dim_) throw invalid_input_error("basis index out of range");
    std::vector<Scalar> c(dim_, field_->zero());
    c[i] = field_->one();
    return AlgebraElement(shared_from_this(), std::move(c));
}

AlgebraElement Algebra::element(std::vector<Scalar> coords) const {
    return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement Algebra::element_from_integers(const std::vector<long>& coords) const {
    std::vector<Scalar> c;
    c.reserve(coords.size());
    for (long v : coords) c.push_back(field_->from_integer(v));
    return AlgebraElement(shared_from_this(), std::move(c));
}

AlgebraPtr Algebra::extend_scalars(const FieldPtr& E) const {
    if (E->equals(field_) && E.get() == field_.get())
        return shared_from_this();
    std::vector<Scalar> table;
    table.reserve(table_.size());
    for (const auto& s : table_) table.push_back(embed(s, E));
    std::vector<Scalar> one;
    one.reserve(one_.size());
    for (const auto& s : one_) one.push_back(embed(s, E));
    // Associativity is inherited; skip the O(d^5) recheck.
    return build(E, dim_, std::move(table), std::move(one), degree_, matrix_n_, false);
}

bool Algebra::equals(const Algebra& other) const {
    if (this == &other) return true;
    if (dim_ != other.dim_ || !field_->equals(*other.field_)) return false;
    for (std::size_t t = 0; t < table_.size(); ++t)
        if (!(table_[t] == other.table_[t])) return false;
    for (std::size_t t = 0; t < one_.size(); ++t)
        if (!(one_[t] == other.one_[t])) return false;
    return true;
}

// ------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<Scalar> coords)
    : alg_(std::move(alg)), coords_(std::move(coords)) {
    if (coords_.size() != alg_->dim())
        throw invalid_input_error("element coordinate length mismatch");
    for (const auto& c : coords_)
        if (!c.field()->equals(alg_->field()))
            throw invalid_input_error("element coordinate outside the base field");
}

bool AlgebraElement::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (!alg_->equals(*o.alg_)) throw invalid_input_error("elements of different algebras");
    std::vector<Scalar> c;
    c.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) c.push_back(coords_[i] + o.coords_[i]);
    return AlgebraElement(alg_, std::move(c));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + (-o);
}

AlgebraElement AlgebraElement::operator-() const {
    std::vector<Scalar> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) c.push_back(-x);
    return AlgebraElement(alg_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (!alg_->equals(*o.alg_)) throw invalid_input_error("elements of different algebras");
    const std::size_t d = alg_->dim();
    std::vector<Scalar> out(d, alg_->field()->zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coords_[j].is_zero()) continue;
            Scalar s = coords_[i] * o.coords_[j];
            for (const auto& [k, c] : alg_->product_terms(i, j))
                out[k] = out[k] + s * c;
        }
    }
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::scale(const Scalar& c) const {
    std::vector<Scalar> out;
    out.reserve(coords_.size());
    for (const auto& x : coords_) out.push_back(x * c);
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::pow(unsigned e) const {
    AlgebraElement acc = alg_->one();
    AlgebraElement b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (!alg_->equals(*o.alg_)) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!(coords_[i] == o.coords_[i])) return false;
    return true;
}

std::strong_ordering AlgebraElement::cmp(const AlgebraElement& o) const {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        auto c = coords_[i].cmp(o.coords_[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

std::string AlgebraElement::to_text() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].to_text();
    }
    os << ")";
    return os.str();
}

// --------------------------------------------------------- constructors

AlgebraPtr make_matrix_algebra(unsigned n, const FieldPtr& F) {
    if (n < 1) throw invalid_input_error("matrix algebra needs n >= 1");
    const std::size_t d = static_cast<std::size_t>(n) * n;
    std::vector<Scalar> table(d * d * d, F->zero());
    auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };
    // e_{ab} e_{cd} = delta_{bc} e_{ad}
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e)
                    if (b == c)
                        table[(idx(a, b) * d + idx(c, e)) * d + idx(a, e)] = F->one();
    std::vector<Scalar> one(d, F->zero());
    for (std::size_t a = 0; a < n; ++a) one[idx(a, a)] = F->one();
    return Algebra::build(F, d, std::move(table), std::move(one), n, n, true);
}

AlgebraPtr make_quaternion_algebra(const Scalar& a, const Scalar& b, const FieldPtr& F) {
    if (F->characteristic() == 2)
        throw invalid_input_error("quaternion algebras need characteristic != 2");
    if (a.is_zero() || b.is_zero())
        throw invalid_input_error("quaternion parameters must be nonzero");
    if (!a.field()->equals(F) || !b.field()->equals(F))
        throw invalid_input_error("quaternion parameters outside the base field");
    const std::size_t d = 4;
    std::vector<Scalar> table(d * d * d, F->zero());
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        table[(i * d + j) * d + k] = v;
    };
    const Scalar one = F->one();
    // basis: 1, i, j, k
    for (std::size_t t = 0; t < 4; ++t) {
        set(0, t, t, one); // 1 * x
        set(t, 0, t, one); // x * 1
    }
    set(1, 1, 0, a);            // i i = a
    set(1, 2, 3, one);          // i j = k
    set(1, 3, 2, a);            // i k = a j
    set(2, 1, 3, -one);         // j i = -k
    set(2, 2, 0, b);            // j j = b
    set(2, 3, 1, -b);           // j k = -b i
    set(3, 1, 2, -a);           // k i = -a j
    set(3, 2, 1, b);            // k j = b i
    set(3, 3, 0, -(a * b));     // k k = -a b
    std::vector<Scalar> unity = {one, F->zero(), F->zero(), F->zero()};
    return Algebra::create(F, d, std::move(table), std::move(unity), 2);
}

// ------------------------------------------------------------- min_poly

Polynomial min_poly(const AlgebraElement& a) {
    const auto& A = a.algebra();
    const auto& F = A->field();
    const std::size_t d = A->dim();
    std::vector<std::vector<Scalar>> powers;
    powers.push_back(A->one().coords());
    AlgebraElement p = A->one();
    for (std::size_t k = 1; k <= d + 1; ++k) {
        p = p * a;
        // Is p a combination of the previous powers?
        Matrix M(F, d, powers.size());
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (std::size_t r = 0; r < d; ++r) M.at(r, j) = powers[j][r];
        auto sol = solve_affine(M, p.coords());
        if (!sol.is_none()) {
            // x^k - sum c_i x^i
            std::vector<Scalar> coeffs(k + 1, F->zero());
            for (std::size_t i = 0; i < powers.size(); ++i) coeffs[i] = -sol.particular[i];
            coeffs[k] = F->one();
            return Polynomial(F, std::move(coeffs));
        }
        powers.push_back(p.coords());
    }
    throw structural_error("minimal polynomial search exceeded the algebra dimension");
}

AlgebraElement embed_element(const AlgebraElement& a, const AlgebraPtr& extended) {
    std::vector<Scalar> c;
    c.reserve(a.coords().size());
    for (const auto& x : a.coords()) c.push_back(embed(x, extended->field()));
    return AlgebraElement(extended, std::move(c));
}

AlgebraElement frobenius_element(const AlgebraElement& a, std::uint64_t q) {
    std::vector<Scalar> c;
    c.reserve(a.coords().size());
    for (const auto& x : a.coords()) c.push_back(frobenius(x, q));
    return AlgebraElement(a.algebra(), std::move(c));
}

Matrix left_multiplication_matrix(const AlgebraElement& a) {
    const auto& A = a.algebra();
    const std::size_t d = A->dim();
    Matrix M(A->field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
        AlgebraElement col = a * A->basis_element(j);
        for (std::size_t i = 0; i < d; ++i) M.at(i, j) = col.coords()[i];
    }
    return M;
}

} // namespace etale
