#include "etale/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "etale/linalg.hpp"
#include "etale/poly.hpp"

namespace etale {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    // p stays below 2^32 (enforced at construction), so no overflow.
    return (a * b) % p;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw invalid_input_error("division by zero in prime field");
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

// ---------------------------------------------------------------- Field

Field::~Field() = default;

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = Kind::rationals;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw invalid_input_error("characteristic is not prime: " + std::to_string(p));
    if (p >= (1ull << 32))
        throw invalid_input_error("prime field characteristic too large");
    static std::mutex mu;
    static std::map<std::uint64_t, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::prime;
    f->char_ = p;
    f->p_ = p;
    f->order_ = p;
    cache.emplace(p, f);
    return f;
}

std::uint64_t Field::order() const {
    if (order_ == 0) throw invalid_input_error("order() of an infinite field");
    return order_;
}

std::uint64_t Field::prime_p() const {
    if (p_ == 0) throw invalid_input_error("prime_p() of a characteristic-0 field");
    return p_;
}

const FieldPtr& Field::base() const {
    if (kind_ != Kind::extension) throw invalid_input_error("base() of a non-extension field");
    return base_;
}

const std::vector<Scalar>& Field::modulus_coeffs() const {
    if (kind_ != Kind::extension) throw invalid_input_error("modulus of a non-extension field");
    return mod_;
}

unsigned Field::ext_degree() const {
    if (kind_ != Kind::extension) throw invalid_input_error("ext_degree of a non-extension field");
    return static_cast<unsigned>(mod_.size()) - 1;
}

bool Field::equals(const Field& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
    case Kind::rationals: return true;
    case Kind::prime: return p_ == other.p_;
    case Kind::extension:
        if (!base_->equals(*other.base_)) return false;
        if (mod_.size() != other.mod_.size()) return false;
        for (std::size_t i = 0; i < mod_.size(); ++i)
            if (!(mod_[i] == other.mod_[i])) return false;
        return true;
    }
    return false;
}

std::string Field::describe() const {
    switch (kind_) {
    case Kind::rationals: return "Q";
    case Kind::prime: return "F" + std::to_string(p_);
    case Kind::extension: {
        std::ostringstream os;
        os << base_->describe() << "[" << gen_name_ << "]/[";
        for (std::size_t i = 0; i < mod_.size(); ++i) {
            if (i) os << ",";
            os << mod_[i].to_text();
        }
        os << "]";
        return os.str();
    }
    }
    return "?";
}

Scalar Field::zero() const {
    return from_integer(0);
}

Scalar Field::one() const {
    return from_integer(1);
}

Scalar Field::from_integer(long v) const {
    return from_mpq(mpq_class(v));
}

Scalar Field::from_mpq(const mpq_class& v) const {
    auto self = shared_from_this();
    switch (kind_) {
    case Kind::rationals: {
        mpq_class q = v;
        q.canonicalize();
        return Scalar(self, q);
    }
    case Kind::prime: {
        mpz_class num = v.get_num(), den = v.get_den();
        mpz_class pz(static_cast<unsigned long>(p_));
        mpz_class nr = num % pz;
        if (nr < 0) nr += pz;
        mpz_class dr = den % pz;
        if (dr < 0) dr += pz;
        std::uint64_t n = nr.get_ui();
        std::uint64_t d = dr.get_ui();
        if (d == 0) throw invalid_input_error("denominator not invertible mod p");
        return Scalar(self, mul_mod(n, inv_mod(d, p_), p_));
    }
    case Kind::extension: {
        std::vector<Scalar> c(ext_degree(), base_->zero());
        c[0] = base_->from_mpq(v);
        return Scalar(self, std::move(c));
    }
    }
    throw invalid_input_error("bad field kind");
}

Scalar Field::generator() const {
    if (kind_ != Kind::extension)
        throw invalid_input_error("generator() of a non-extension field");
    std::vector<Scalar> c(ext_degree(), base_->zero());
    if (c.size() < 2)
        throw invalid_input_error("degree-1 extension has no proper generator");
    c[1] = base_->one();
    return Scalar(shared_from_this(), std::move(c));
}

Scalar Field::element_from_coeffs(std::vector<Scalar> coeffs) const {
    if (kind_ != Kind::extension)
        throw invalid_input_error("element_from_coeffs on a non-extension field");
    const unsigned e = ext_degree();
    if (coeffs.size() > e) {
        coeffs = detail::polyvec_mod_monic(std::move(coeffs), mod_, base_);
    }
    coeffs.resize(e, base_->zero());
    for (auto& c : coeffs)
        if (!c.field()->equals(base_))
            throw invalid_input_error("coefficient not in the base field");
    return Scalar(shared_from_this(), std::move(coeffs));
}

Scalar Field::nth_element(std::uint64_t idx) const {
    switch (kind_) {
    case Kind::rationals:
        throw invalid_input_error("cannot enumerate an infinite field");
    case Kind::prime:
        if (idx >= p_) throw invalid_input_error("element index out of range");
        return Scalar(shared_from_this(), idx);
    case Kind::extension: {
        const std::uint64_t b = base_->order();
        const unsigned e = ext_degree();
        std::vector<Scalar> c;
        c.reserve(e);
        for (unsigned t = 0; t < e; ++t) {
            c.push_back(base_->nth_element(idx % b));
            idx /= b;
        }
        if (idx != 0) throw invalid_input_error("element index out of range");
        return Scalar(shared_from_this(), std::move(c));
    }
    }
    throw invalid_input_error("bad field kind");
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : field_(Field::rationals()), rep_(mpq_class(0)) {}

Scalar::Scalar(FieldPtr F, mpq_class q) : field_(std::move(F)), rep_(std::move(q)) {}
Scalar::Scalar(FieldPtr F, std::uint64_t r) : field_(std::move(F)), rep_(r) {}
Scalar::Scalar(FieldPtr F, std::vector<Scalar> c) : field_(std::move(F)), rep_(std::move(c)) {}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_.get() == o.field_.get()) return;
    if (!field_->equals(*o.field_))
        throw invalid_input_error("scalars from different fields: " + field_->describe() +
                                  " vs " + o.field_->describe());
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(rep_); }
std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(rep_); }
const std::vector<Scalar>& Scalar::coeffs() const { return std::get<std::vector<Scalar>>(rep_); }

bool Scalar::is_zero() const {
    switch (field_->kind()) {
    case Field::Kind::rationals: return rational() == 0;
    case Field::Kind::prime: return residue() == 0;
    case Field::Kind::extension:
        for (const auto& c : coeffs())
            if (!c.is_zero()) return false;
        return true;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
    case Field::Kind::rationals: return rational() == 1;
    case Field::Kind::prime: return residue() == 1;
    case Field::Kind::extension: {
        const auto& c = coeffs();
        if (!c[0].is_one()) return false;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!c[i].is_zero()) return false;
        return true;
    }
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    switch (field_->kind()) {
    case Field::Kind::rationals: {
        mpq_class r = rational() + o.rational();
        return Scalar(field_, std::move(r));
    }
    case Field::Kind::prime: {
        std::uint64_t p = field_->prime_p();
        return Scalar(field_, (residue() + o.residue()) % p);
    }
    case Field::Kind::extension: {
        const auto& a = coeffs();
        const auto& b = o.coeffs();
        std::vector<Scalar> c;
        c.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i] + b[i]);
        return Scalar(field_, std::move(c));
    }
    }
    throw invalid_input_error("bad field kind");
}

Scalar Scalar::operator-() const {
    switch (field_->kind()) {
    case Field::Kind::rationals: return Scalar(field_, mpq_class(-rational()));
    case Field::Kind::prime: {
        std::uint64_t p = field_->prime_p();
        std::uint64_t r = residue();
        return Scalar(field_, r == 0 ? 0 : p - r);
    }
    case Field::Kind::extension: {
        std::vector<Scalar> c;
        c.reserve(coeffs().size());
        for (const auto& x : coeffs()) c.push_back(-x);
        return Scalar(field_, std::move(c));
    }
    }
    throw invalid_input_error("bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    switch (field_->kind()) {
    case Field::Kind::rationals: {
        mpq_class r = rational() * o.rational();
        return Scalar(field_, std::move(r));
    }
    case Field::Kind::prime:
        return Scalar(field_, mul_mod(residue(), o.residue(), field_->prime_p()));
    case Field::Kind::extension: {
        const auto& base = field_->base();
        auto prod = detail::polyvec_mul(coeffs(), o.coeffs(), base);
        auto red = detail::polyvec_mod_monic(std::move(prod), field_->modulus_coeffs(), base);
        red.resize(field_->ext_degree(), base->zero());
        return Scalar(field_, std::move(red));
    }
    }
    throw invalid_input_error("bad field kind");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw invalid_input_error("inverse of zero");
    switch (field_->kind()) {
    case Field::Kind::rationals: {
        mpq_class r = 1 / rational();
        return Scalar(field_, std::move(r));
    }
    case Field::Kind::prime:
        return Scalar(field_, inv_mod(residue(), field_->prime_p()));
    case Field::Kind::extension: {
        const auto& base = field_->base();
        auto [g, u] = detail::polyvec_ext_gcd(detail::polyvec_trim(coeffs()),
                                              field_->modulus_coeffs(), base);
        if (g.size() != 1)
            throw structural_error("modulus not irreducible: gcd has positive degree");
        Scalar ginv = g[0].inverse();
        for (auto& c : u) c = c * ginv;
        auto red = detail::polyvec_mod_monic(std::move(u), field_->modulus_coeffs(), base);
        red.resize(field_->ext_degree(), base->zero());
        return Scalar(field_, std::move(red));
    }
    }
    throw invalid_input_error("bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar result = field_->one();
    Scalar b = *this;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    switch (field_->kind()) {
    case Field::Kind::rationals: return rational() == o.rational();
    case Field::Kind::prime: return residue() == o.residue();
    case Field::Kind::extension: {
        const auto& a = coeffs();
        const auto& b = o.coeffs();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return false;
        return true;
    }
    }
    return false;
}

std::strong_ordering Scalar::cmp(const Scalar& o) const {
    require_same_field(o);
    switch (field_->kind()) {
    case Field::Kind::rationals: {
        int c = mpq_cmp(rational().get_mpq_t(), o.rational().get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    case Field::Kind::prime:
        return residue() <=> o.residue();
    case Field::Kind::extension: {
        const auto& a = coeffs();
        const auto& b = o.coeffs();
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto c = a[i].cmp(b[i]);
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }
    }
    return std::strong_ordering::equal;
}

std::string Scalar::to_text() const {
    switch (field_->kind()) {
    case Field::Kind::rationals: return rational().get_str();
    case Field::Kind::prime: return std::to_string(residue());
    case Field::Kind::extension: {
        std::string out = "[";
        const auto& c = coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ", ";
            out += c[i].to_text();
        }
        out += "]";
        return out;
    }
    }
    return "?";
}

namespace {

std::string strip_ws(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in)
        if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') out += ch;
    return out;
}

// Split "a,b,[c,d],e" at top-level commas.
std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

Scalar Scalar::from_text(const std::string& text, const FieldPtr& F) {
    std::string s = strip_ws(text);
    if (s.empty()) throw invalid_input_error("empty scalar literal");
    switch (F->kind()) {
    case Field::Kind::rationals: {
        try {
            mpq_class q(s);
            q.canonicalize();
            if (q.get_den() == 0) throw invalid_input_error("zero denominator");
            return F->from_mpq(q);
        } catch (const std::invalid_argument&) {
            throw invalid_input_error("bad rational literal: " + text);
        }
    }
    case Field::Kind::prime: {
        try {
            mpz_class z(s);
            return F->from_mpq(mpq_class(z));
        } catch (const std::invalid_argument&) {
            throw invalid_input_error("bad residue literal: " + text);
        }
    }
    case Field::Kind::extension: {
        if (s.front() != '[' || s.back() != ']') {
            // Allow base-field literals to denote constants.
            Scalar b = Scalar::from_text(s, F->base());
            return embed(b, F);
        }
        auto parts = split_top(s.substr(1, s.size() - 2));
        std::vector<Scalar> c;
        c.reserve(parts.size());
        for (const auto& part : parts) c.push_back(Scalar::from_text(part, F->base()));
        if (c.size() > F->ext_degree())
            throw invalid_input_error("too many coefficients for the extension degree");
        return F->element_from_coeffs(std::move(c));
    }
    }
    throw invalid_input_error("bad field kind");
}

// ------------------------------------------------------- tower helpers

Scalar embed(const Scalar& s, const FieldPtr& target) {
    if (s.field().get() == target.get()) return s;
    if (s.field()->equals(*target)) {
        // Structurally equal but distinct objects: rebind onto target.
        switch (target->kind()) {
        case Field::Kind::rationals: return target->from_mpq(s.rational());
        case Field::Kind::prime: return target->from_mpq(mpq_class(static_cast<unsigned long>(s.residue())));
        case Field::Kind::extension: {
            std::vector<Scalar> c;
            c.reserve(s.coeffs().size());
            for (const auto& x : s.coeffs()) c.push_back(embed(x, target->base()));
            return target->element_from_coeffs(std::move(c));
        }
        }
    }
    if (target->is_extension()) {
        Scalar b = embed(s, target->base());
        std::vector<Scalar> c(target->ext_degree(), target->base()->zero());
        c[0] = std::move(b);
        return target->element_from_coeffs(std::move(c));
    }
    throw invalid_input_error("scalar field is not a level of the target tower");
}

std::optional<Scalar> try_descend(const Scalar& s, const FieldPtr& target) {
    if (s.field()->equals(*target)) return s;
    if (!s.field()->is_extension()) return std::nullopt;
    const auto& c = s.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return std::nullopt;
    return try_descend(c[0], target);
}

Scalar frobenius(const Scalar& s, std::uint64_t q) {
    if (!s.field()->is_finite())
        throw invalid_input_error("frobenius needs a finite field");
    return s.pow(q);
}

Scalar quadratic_conj(const Scalar& s) {
    const auto& F = s.field();
    if (!F->is_extension() || F->ext_degree() != 2)
        throw invalid_input_error("quadratic_conj needs a degree-2 extension");
    // The other root of x^2 + b x + c is -b - w.
    const auto& m = F->modulus_coeffs();
    const auto& c = s.coeffs();
    Scalar other_lin = -m[1]; // base-field scalar
    // c0 + c1*w  ->  c0 + c1*(-b - w) = (c0 - c1*b) - c1*w
    std::vector<Scalar> out = {c[0] + c[1] * other_lin, -c[1]};
    return F->element_from_coeffs(std::move(out));
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

Scalar canonical_of_pair(const Scalar& r) {
    Scalar m = -r;
    return r.cmp(m) == std::strong_ordering::greater ? m : r;
}

} // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& s) {
    const auto& F = s.field();
    if (s.is_zero()) return F->zero();
    if (F->is_finite()) {
        // Exhaustive: fields at desk scale are tiny.
        std::uint64_t n = F->order();
        for (std::uint64_t i = 0; i < n; ++i) {
            Scalar x = F->nth_element(i);
            if (x * x == s) return canonical_of_pair(x);
        }
        return std::nullopt;
    }
    if (F->is_rationals()) {
        auto r = rational_sqrt(s.rational());
        if (!r) return std::nullopt;
        return canonical_of_pair(F->from_mpq(*r));
    }
    // Quadratic tower over Q: s = a + b*w with w^2 = d (modulus x^2 - d).
    if (!F->is_extension() || F->ext_degree() != 2 || !F->base()->is_rationals())
        throw unsupported_splitting_error("square roots unsupported over " + F->describe());
    const auto& m = F->modulus_coeffs();
    if (!m[1].is_zero())
        throw unsupported_splitting_error("square roots need a pure quadratic modulus");
    mpq_class d = -m[0].rational(); // x^2 - d
    mpq_class a = s.coeffs()[0].rational();
    mpq_class b = s.coeffs()[1].rational();
    if (b == 0) {
        if (auto ra = rational_sqrt(a))
            return canonical_of_pair(embed(Field::rationals()->from_mpq(*ra), F));
        // sqrt(a) = y*w with d*y^2 = a
        if (auto ry = rational_sqrt(a / d)) {
            std::vector<Scalar> c = {Field::rationals()->from_mpq(0),
                                     Field::rationals()->from_mpq(*ry)};
            return canonical_of_pair(F->element_from_coeffs(std::move(c)));
        }
        return std::nullopt;
    }
    // (x + y w)^2 = x^2 + d y^2 + 2xy w: solve 2xy = b, x^2 + d y^2 = a.
    mpq_class inner = a * a - d * b * b;
    auto n = rational_sqrt(inner);
    if (!n) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        mpq_class x2 = sign == 0 ? mpq_class((a + *n) / 2) : mpq_class((a - *n) / 2);
        auto x = rational_sqrt(x2);
        if (!x || *x == 0) continue;
        mpq_class y = b / (2 * *x);
        std::vector<Scalar> c = {Field::rationals()->from_mpq(*x),
                                 Field::rationals()->from_mpq(y)};
        Scalar cand = F->element_from_coeffs(std::move(c));
        if (cand * cand == s) return canonical_of_pair(cand);
    }
    return std::nullopt;
}

// ------------------------------------------------------ field embeddings

unsigned tower_degree_over(const FieldPtr& F, const FieldPtr& base) {
    if (F->equals(*base)) return 1;
    if (!F->is_extension())
        throw invalid_input_error("field is not a tower over the requested base");
    return F->ext_degree() * tower_degree_over(F->base(), base);
}

std::vector<Scalar> flatten_over(const Scalar& s, const FieldPtr& base) {
    if (s.field()->equals(*base)) return {s};
    if (!s.field()->is_extension())
        throw invalid_input_error("scalar field is not a tower over the requested base");
    std::vector<Scalar> out;
    for (const auto& c : s.coeffs()) {
        auto part = flatten_over(c, base);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

FieldEmbedding FieldEmbedding::find(const FieldPtr& source, const FieldPtr& target,
                                    const FieldPtr& base) {
    FieldEmbedding e;
    e.source_ = source;
    e.target_ = target;
    e.base_ = base;
    if (source->equals(*base)) return e;
    if (!source->is_extension() || !source->base()->equals(*base))
        throw invalid_input_error("embedding source must sit directly over the base");
    if (!target->is_finite())
        throw invalid_input_error("embeddings are computed for finite towers only");
    // Canonical image of the generator: smallest root of the modulus.
    Polynomial mod(base, source->modulus_coeffs());
    Scalar best = target->zero();
    bool found = false;
    std::uint64_t n = target->order();
    if (n > (1ull << 20)) throw budget_error("embedding root search too large");
    for (std::uint64_t i = 0; i < n; ++i) {
        Scalar x = target->nth_element(i);
        if (mod.eval(x).is_zero()) {
            if (!found || x.cmp(best) == std::strong_ordering::less) best = x;
            found = true;
        }
    }
    if (!found) throw invalid_input_error("source modulus has no root in the target");
    e.gen_image_ = best;
    return e;
}

Scalar FieldEmbedding::apply(const Scalar& s) const {
    if (!s.field()->equals(*source_))
        throw invalid_input_error("embedding applied to a scalar outside its source");
    if (!gen_image_) return embed(s, target_);
    Scalar acc = target_->zero();
    Scalar p = target_->one();
    for (const auto& c : s.coeffs()) {
        acc = acc + embed(c, target_) * p;
        p = p * *gen_image_;
    }
    return acc;
}

std::optional<Scalar> FieldEmbedding::preimage(const Scalar& t) const {
    if (!t.field()->equals(*target_))
        throw invalid_input_error("preimage of a scalar outside the embedding target");
    if (!gen_image_) return try_descend(t, source_);
    const unsigned s_deg = source_->ext_degree();
    const unsigned t_deg = tower_degree_over(target_, base_);
    Matrix M(base_, t_deg, s_deg);
    Scalar p = target_->one();
    for (unsigned j = 0; j < s_deg; ++j) {
        auto col = flatten_over(p, base_);
        for (unsigned i = 0; i < t_deg; ++i) M.at(i, j) = col[i];
        p = p * *gen_image_;
    }
    auto sol = solve_affine(M, flatten_over(t, base_));
    if (sol.is_none()) return std::nullopt;
    return source_->element_from_coeffs(sol.particular);
}

// --------------------------------------------------------- detail polyvec

namespace detail {

std::vector<Scalar> polyvec_trim(std::vector<Scalar> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

std::vector<Scalar> polyvec_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                const FieldPtr& F) {
    std::vector<Scalar> out(std::max(a.size(), b.size()), F->zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
    return polyvec_trim(std::move(out));
}

std::vector<Scalar> polyvec_sub(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                const FieldPtr& F) {
    std::vector<Scalar> out(std::max(a.size(), b.size()), F->zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = out[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    return polyvec_trim(std::move(out));
}

std::vector<Scalar> polyvec_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                const FieldPtr& F) {
    if (a.empty() || b.empty()) return {};
    std::vector<Scalar> out(a.size() + b.size() - 1, F->zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return polyvec_trim(std::move(out));
}

std::vector<Scalar> polyvec_mod_monic(std::vector<Scalar> a, const std::vector<Scalar>& m,
                                      const FieldPtr& F) {
    const std::size_t deg = m.size() - 1;
    a = polyvec_trim(std::move(a));
    while (a.size() > deg) {
        Scalar lead = a.back();
        std::size_t shift = a.size() - 1 - deg;
        if (!lead.is_zero()) {
            for (std::size_t t = 0; t < deg; ++t)
                a[shift + t] = a[shift + t] - lead * m[t];
        }
        a.pop_back();
        a = polyvec_trim(std::move(a));
        (void)F;
    }
    return a;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>>
polyvec_divmod(std::vector<Scalar> a, const std::vector<Scalar>& b, const FieldPtr& F) {
    auto bt = polyvec_trim(b);
    if (bt.empty()) throw invalid_input_error("polynomial division by zero");
    a = polyvec_trim(std::move(a));
    Scalar lead_inv = bt.back().inverse();
    std::vector<Scalar> q;
    if (a.size() >= bt.size()) q.assign(a.size() - bt.size() + 1, F->zero());
    while (a.size() >= bt.size()) {
        Scalar c = a.back() * lead_inv;
        std::size_t shift = a.size() - bt.size();
        q[shift] = c;
        for (std::size_t t = 0; t < bt.size(); ++t)
            a[shift + t] = a[shift + t] - c * bt[t];
        a = polyvec_trim(std::move(a));
        if (a.size() > shift + bt.size() - 1) // no progress safeguard
            throw structural_error("polynomial division failed to reduce degree");
    }
    return {polyvec_trim(std::move(q)), std::move(a)};
}

std::vector<Scalar> polyvec_gcd(std::vector<Scalar> a, std::vector<Scalar> b, const FieldPtr& F) {
    a = polyvec_trim(std::move(a));
    b = polyvec_trim(std::move(b));
    while (!b.empty()) {
        auto r = polyvec_divmod(a, b, F).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Scalar inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>>
polyvec_ext_gcd(const std::vector<Scalar>& a, const std::vector<Scalar>& m, const FieldPtr& F) {
    // Returns (g, u) with u*a = g (mod m).
    std::vector<Scalar> r0 = polyvec_trim(m), r1 = polyvec_trim(a);
    std::vector<Scalar> u0 = {}, u1 = {F->one()};
    while (!r1.empty()) {
        auto [q, r2] = polyvec_divmod(r0, r1, F);
        auto u2 = polyvec_sub(u0, polyvec_mul(q, u1, F), F);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {std::move(r0), std::move(u0)};
}

} // namespace detail

} // namespace etale
