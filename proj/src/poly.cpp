#include "etale/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace etale {

// ------------------------------------------------------------ Polynomial

Polynomial::Polynomial(FieldPtr F, std::vector<Scalar> coeffs)
    : field_(std::move(F)), coeffs_(detail::polyvec_trim(std::move(coeffs))) {
    for (const auto& c : coeffs_)
        if (!c.field()->equals(field_))
            throw invalid_input_error("polynomial coefficient outside its field");
}

Polynomial Polynomial::zero(const FieldPtr& F) { return Polynomial(F, {}); }
Polynomial Polynomial::one(const FieldPtr& F) { return Polynomial(F, {F->one()}); }
Polynomial Polynomial::x(const FieldPtr& F) { return Polynomial(F, {F->zero(), F->one()}); }
Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::from_roots(const FieldPtr& F, const std::vector<Scalar>& roots) {
    Polynomial p = one(F);
    for (const auto& r : roots)
        p = p * Polynomial(F, {-r, F->one()});
    return p;
}

Polynomial Polynomial::from_integers(const FieldPtr& F, const std::vector<long>& coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(F->from_integer(v));
    return Polynomial(F, std::move(c));
}

bool Polynomial::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Scalar Polynomial::leading() const {
    if (is_zero()) throw invalid_input_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Scalar Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : field_->zero();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    return Polynomial(field_, detail::polyvec_add(coeffs_, o.coeffs_, field_));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return Polynomial(field_, detail::polyvec_sub(coeffs_, o.coeffs_, field_));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    return Polynomial(field_, detail::polyvec_mul(coeffs_, o.coeffs_, field_));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    auto [q, r] = detail::polyvec_divmod(coeffs_, d.coeffs_, field_);
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(coeffs_[i] * field_->from_integer(static_cast<long>(i)));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::make_monic() const {
    if (is_zero()) throw invalid_input_error("cannot normalize zero polynomial");
    return *this * coeffs_.back().inverse();
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = x.field()->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + embed(*it, x.field());
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

std::string Polynomial::to_text(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[i].to_text();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    return Polynomial(a.field(), detail::polyvec_gcd(a.coeffs(), b.coeffs(), a.field()));
}

Polynomial Field::modulus() const {
    return Polynomial(base(), modulus_coeffs());
}

// ---------------------------------------------------------- squarefree

bool squarefree_test(const Polynomial& f) {
    if (f.is_zero()) throw invalid_input_error("squarefree_test of zero polynomial");
    if (f.degree() == 0) return true;
    Polynomial d = f.derivative();
    if (d.is_zero()) return false; // x^p-style degeneracy in characteristic p
    return gcd(f, d).degree() == 0;
}

// ------------------------------------------------- extension construction

namespace {

std::string ext_gen_name(const FieldPtr& base) {
    unsigned h = base->tower_height() + 1;
    return h == 1 ? "w" : "w" + std::to_string(h);
}

} // namespace

FieldPtr Field::extension(const FieldPtr& base, const Polynomial& modulus,
                          std::string generator_name, bool trust_irreducible) {
    if (!modulus.field()->equals(base))
        throw invalid_input_error("modulus not defined over the base field");
    if (modulus.degree() < 1)
        throw invalid_input_error("extension modulus must have positive degree");
    if (!modulus.is_monic())
        throw invalid_input_error("extension modulus must be monic");
    if (!trust_irreducible && !is_irreducible(modulus))
        throw invalid_input_error("extension modulus is reducible over " + base->describe());

    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::extension;
    f->char_ = base->characteristic();
    f->p_ = base->char_ == 0 ? 0 : base->p_;
    f->base_ = base;
    f->mod_ = modulus.coeffs();
    f->gen_name_ = generator_name.empty() ? ext_gen_name(base) : std::move(generator_name);
    f->height_ = base->tower_height() + 1;
    if (base->is_finite()) {
        std::uint64_t o = 1;
        for (int i = 0; i < modulus.degree(); ++i) {
            if (o > (1ull << 40) / base->order())
                throw budget_error("extension field order exceeds supported range");
            o *= base->order();
        }
        f->order_ = o;
    }
    return f;
}

FieldPtr canonical_extension(const FieldPtr& F, unsigned m) {
    if (m == 0) throw invalid_input_error("extension degree must be positive");
    if (m == 1) return F;
    if (!F->is_finite())
        throw unsupported_splitting_error("canonical extensions exist only over finite fields");

    static std::mutex mu;
    static std::map<std::pair<std::string, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(F->describe(), m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // First monic irreducible of degree m, lowest coefficient running fastest.
    std::uint64_t q = F->order();
    mpz_class total = 1;
    for (unsigned i = 0; i < m; ++i) total *= static_cast<unsigned long>(q);
    if (total > (1 << 24))
        throw budget_error("irreducible search space too large");
    for (std::uint64_t idx = 0;; ++idx) {
        if (mpz_class(static_cast<unsigned long>(idx)) >= total)
            throw structural_error("no irreducible polynomial found (impossible)");
        std::vector<Scalar> c;
        c.reserve(m + 1);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < m; ++i) {
            c.push_back(F->nth_element(t % q));
            t /= q;
        }
        c.push_back(F->one());
        Polynomial cand(F, std::move(c));
        if (is_irreducible(cand)) {
            auto E = Field::extension(F, cand, ext_gen_name(F), true);
            cache.emplace(key, E);
            return E;
        }
    }
}

Polynomial embed_poly(const Polynomial& f, const FieldPtr& E) {
    if (f.field()->equals(E) && f.field().get() == E.get()) return f;
    std::vector<Scalar> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(embed(a, E));
    return Polynomial(E, std::move(c));
}

// ------------------------------------------------------------- roots

namespace {

// Roots in f's own finite field by exhaustive evaluation, without multiplicity.
std::vector<Scalar> distinct_roots_finite(const Polynomial& f) {
    const auto& F = f.field();
    std::uint64_t n = F->order();
    if (n > (1ull << 20)) throw budget_error("root search space too large");
    std::vector<Scalar> roots;
    for (std::uint64_t i = 0; i < n; ++i) {
        Scalar x = F->nth_element(i);
        if (f.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
}

void sort_scalars(std::vector<Scalar>& v) {
    std::sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) {
        return a.cmp(b) == std::strong_ordering::less;
    });
}

// Divisors of |z|, by trial division; throws when z has a large prime factor.
std::vector<mpz_class> divisors_of(mpz_class z) {
    if (z < 0) z = -z;
    if (z == 0) throw invalid_input_error("divisors of zero requested");
    std::map<mpz_class, unsigned> fac;
    mpz_class d = 2;
    while (d * d <= z) {
        while (z % d == 0) {
            ++fac[d];
            z /= d;
        }
        d += (d == 2 ? 1 : 2);
        if (d > 2000000)
            throw budget_error("rational-root search: coefficient too hard to factor");
    }
    if (z > 1) ++fac[z];
    std::vector<mpz_class> divs = {1};
    for (const auto& [p, e] : fac) {
        std::size_t base_count = divs.size();
        mpz_class pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t t = 0; t < base_count; ++t) divs.push_back(divs[t] * pe);
        }
    }
    return divs;
}

// Distinct rational roots of f (coefficients over Q).
std::vector<Scalar> distinct_rational_roots(const Polynomial& f) {
    const auto& Q = f.field();
    std::vector<Scalar> roots;
    if (f.degree() < 1) return roots;
    // Factor out x^k.
    std::size_t low = 0;
    while (low < f.coeffs().size() && f.coeffs()[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Q->zero());
    // Clear denominators.
    mpz_class den_lcm = 1;
    for (std::size_t i = low; i < f.coeffs().size(); ++i) {
        mpz_class d = f.coeffs()[i].rational().get_den();
        den_lcm = lcm(den_lcm, d);
    }
    mpz_class a0 = mpz_class(f.coeffs()[low].rational() * den_lcm);
    mpz_class alead = mpz_class(f.coeffs().back().rational() * den_lcm);
    auto nums = divisors_of(a0);
    auto dens = divisors_of(alead);
    for (const auto& n : nums) {
        for (const auto& d : dens) {
            for (int sign = 0; sign < 2; ++sign) {
                mpq_class cand(sign == 0 ? n : -n, d);
                cand.canonicalize();
                Scalar x = Q->from_mpq(cand);
                if (f.eval(x).is_zero()) roots.push_back(x);
            }
        }
    }
    sort_scalars(roots);
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const Scalar& a, const Scalar& b) { return a == b; }),
                roots.end());
    return roots;
}

// Roots of a degree <= 2 polynomial over a characteristic-0 field.
std::vector<Scalar> small_degree_roots(const Polynomial& f) {
    const auto& F = f.field();
    std::vector<Scalar> roots;
    if (f.degree() == 1) {
        roots.push_back(-(f.coeff(0) / f.coeff(1)));
        return roots;
    }
    if (f.degree() == 2) {
        Scalar a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        Scalar disc = b * b - F->from_integer(4) * a * c;
        auto s = sqrt_in_field(disc);
        if (!s) return roots;
        Scalar two_a = F->from_integer(2) * a;
        roots.push_back((-b + *s) / two_a);
        if (!s->is_zero()) roots.push_back((-b - *s) / two_a);
        else roots.push_back(roots.back()); // double root
    }
    return roots;
}

unsigned multiplicity_of_root(const Polynomial& f, const Scalar& r) {
    Polynomial lin(f.field(), {-r, f.field()->one()});
    Polynomial g = f;
    unsigned m = 0;
    while (!g.is_zero()) {
        auto [q, rem] = g.divmod(lin);
        if (!rem.is_zero()) break;
        ++m;
        g = q;
    }
    return m;
}

} // namespace

std::vector<Scalar> find_roots(const Polynomial& f, const FieldPtr& E) {
    // E must be f's field or an extension tower over it.
    {
        const Field* w = E.get();
        bool ok = false;
        while (true) {
            if (f.field()->equals(*w)) { ok = true; break; }
            if (!w->is_extension()) break;
            w = w->base().get();
        }
        if (!ok)
            throw invalid_input_error("root field is not an extension of the coefficient field");
    }
    Polynomial g = embed_poly(f, E);
    if (g.is_zero()) throw invalid_input_error("find_roots of zero polynomial");
    std::vector<Scalar> distinct;
    if (E->is_finite()) {
        distinct = distinct_roots_finite(g);
    } else if (E->is_rationals()) {
        distinct = distinct_rational_roots(g);
    } else {
        // Quadratic tower over Q: strip rational roots (plus x^k), then a
        // remaining factor of degree <= 2 is handled by the formula.  Any
        // residual degree >= 3 cannot contain E-roots when its rational
        // roots are gone and it has no rational quadratic factor we can
        // certify, so anything left beyond degree 2 is unsupported.
        Polynomial work = g;
        std::optional<Polynomial> rational_form; // g with coefficients in Q, when they descend
        {
            std::vector<Scalar> qc;
            bool ok = true;
            for (const auto& c : g.coeffs()) {
                auto d = try_descend(c, Field::rationals());
                if (!d) { ok = false; break; }
                qc.push_back(*d);
            }
            if (ok) rational_form = Polynomial(Field::rationals(), std::move(qc));
        }
        if (rational_form) {
            for (const auto& r : distinct_rational_roots(*rational_form)) {
                Scalar re = embed(r, E);
                if (std::find(distinct.begin(), distinct.end(), re) == distinct.end())
                    distinct.push_back(re);
                Polynomial lin(E, {-re, E->one()});
                while (true) {
                    auto [q, rem] = work.divmod(lin);
                    if (!rem.is_zero()) break;
                    work = q;
                }
            }
        }
        if (work.degree() >= 1 && work.degree() <= 2) {
            for (const auto& r : small_degree_roots(work))
                if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
                    distinct.push_back(r);
        } else if (work.degree() == 3 && rational_form) {
            // No rational root survived, so a root in a quadratic tower would
            // force a rational linear factor; there are none.
        } else if (work.degree() > 2) {
            throw unsupported_splitting_error(
                "root finding over " + E->describe() + " limited to residual degree 2");
        }
    }
    std::vector<Scalar> out;
    for (const auto& r : distinct) {
        unsigned m = multiplicity_of_root(g, r);
        for (unsigned i = 0; i < m; ++i) out.push_back(r);
    }
    sort_scalars(out);
    return out;
}

// --------------------------------------------------------- factorization

namespace {

// Enumerate monic polynomials of the exact degree over a finite field.
template <typename Fn>
void for_each_monic(const FieldPtr& F, unsigned deg, Fn&& fn) {
    std::uint64_t q = F->order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Scalar> c;
        c.reserve(deg + 1);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < deg; ++i) {
            c.push_back(F->nth_element(t % q));
            t /= q;
        }
        c.push_back(F->one());
        if (fn(Polynomial(F, std::move(c)))) return;
    }
}

} // namespace

bool is_irreducible(const Polynomial& f) {
    const auto& F = f.field();
    int deg = f.degree();
    if (deg <= 0) return false;
    if (deg == 1) return true;
    if (F->is_finite()) {
        std::uint64_t q = F->order();
        // Trial division by every monic polynomial of degree <= deg/2.
        mpz_class work = 0;
        for (int k = 1; k <= deg / 2; ++k) {
            mpz_class qk = 1;
            for (int i = 0; i < k; ++i) qk *= static_cast<unsigned long>(q);
            work += qk;
        }
        if (work > (1 << 22)) throw budget_error("irreducibility trial division too large");
        bool reducible = false;
        for (int k = 1; k <= deg / 2 && !reducible; ++k) {
            for_each_monic(F, static_cast<unsigned>(k), [&](const Polynomial& d) {
                if ((f % d).is_zero()) {
                    reducible = true;
                    return true;
                }
                return false;
            });
        }
        return !reducible;
    }
    if (F->is_rationals()) {
        if (!distinct_rational_roots(f).empty()) return false;
        if (deg <= 3) return true;
        throw unsupported_splitting_error(
            "irreducibility over Q undecidable beyond degree 3 in this tower family");
    }
    // Quadratic tower over Q.
    if (F->is_extension() && F->base()->is_rationals() && F->ext_degree() == 2) {
        if (deg == 2) {
            Scalar disc = f.coeff(1) * f.coeff(1) -
                          F->from_integer(4) * f.coeff(2) * f.coeff(0);
            return !sqrt_in_field(disc).has_value();
        }
    }
    throw unsupported_splitting_error("irreducibility undecidable over " + F->describe());
}

std::vector<Polynomial> factor_finite(const Polynomial& f) {
    const auto& F = f.field();
    if (!F->is_finite()) throw invalid_input_error("factor_finite needs a finite field");
    if (f.is_zero()) throw invalid_input_error("factorization of zero polynomial");
    std::vector<Polynomial> factors;
    Polynomial g = f.make_monic();
    int guard = 0;
    while (g.degree() >= 1) {
        if (++guard > 1024) throw structural_error("factorization failed to terminate");
        bool found = false;
        for (int k = 1; k <= g.degree() / 2 && !found; ++k) {
            for_each_monic(F, static_cast<unsigned>(k), [&](const Polynomial& d) {
                // Only irreducible d can be the lowest-degree divisor found,
                // since smaller degrees were exhausted first.
                auto [q, r] = g.divmod(d);
                if (r.is_zero()) {
                    factors.push_back(d);
                    g = q;
                    found = true;
                    return true;
                }
                return false;
            });
        }
        if (!found) {
            factors.push_back(g); // irreducible remainder
            g = Polynomial::one(F);
        }
    }
    // Verify the factorization by multiplying back.
    Polynomial prod = Polynomial::constant(f.leading());
    for (const auto& d : factors) prod = prod * d;
    if (!(prod == f)) throw structural_error("factorization verification failed");
    return factors;
}

// ----------------------------------------------------- squarefree part

mpz_class squarefree_part(const mpq_class& q) {
    if (q == 0) throw invalid_input_error("squarefree part of zero");
    mpz_class z = q.get_num() * q.get_den(); // same square class as q
    mpz_class out = z < 0 ? -1 : 1;
    if (z < 0) z = -z;
    mpz_class d = 2;
    while (d * d <= z) {
        unsigned e = 0;
        while (z % d == 0) {
            ++e;
            z /= d;
        }
        if (e % 2) out *= d;
        d += (d == 2 ? 1 : 2);
        if (d > 2000000) throw budget_error("squarefree part: value too hard to factor");
    }
    out *= z;
    return out;
}

// ------------------------------------------------------ splitting fields

std::pair<FieldPtr, std::vector<Scalar>> splitting_extension(const Polynomial& f) {
    if (f.is_zero() || !squarefree_test(f))
        throw invalid_input_error("splitting_extension requires a squarefree polynomial");
    const auto& F = f.field();
    if (f.degree() == 0) return {F, {}};

    if (F->is_finite()) {
        auto factors = factor_finite(f);
        unsigned m = 1;
        for (const auto& d : factors)
            m = static_cast<unsigned>(std::lcm<std::uint64_t>(m, d.degree()));
        FieldPtr E = canonical_extension(F, m);
        auto roots = find_roots(f, E);
        if (static_cast<int>(roots.size()) != f.degree())
            throw structural_error("splitting field failed to split the polynomial");
        return {E, std::move(roots)};
    }

    if (F->is_rationals()) {
        auto rr = find_roots(f, F);
        if (static_cast<int>(rr.size()) == f.degree()) return {F, std::move(rr)};
        // Strip the rational roots; a single remaining quadratic is supported.
        Polynomial work = f;
        for (const auto& r : rr)
            work = work / Polynomial(F, {-r, F->one()});
        if (work.degree() != 2)
            throw unsupported_splitting_error(
                "splitting over Q requires at most one quadratic extension");
        Scalar disc = work.coeff(1) * work.coeff(1) -
                      F->from_integer(4) * work.coeff(2) * work.coeff(0);
        mpz_class d = squarefree_part(disc.rational());
        if (d == 1)
            throw structural_error("square discriminant escaped the rational-root search");
        // Q(sqrt(d)) with modulus x^2 - d.
        Polynomial mod(F, {F->from_mpq(mpq_class(-d)), F->zero(), F->one()});
        FieldPtr E = Field::extension(F, mod);
        auto roots = find_roots(f, E);
        if (static_cast<int>(roots.size()) != f.degree())
            throw structural_error("quadratic extension failed to split the polynomial");
        return {E, std::move(roots)};
    }

    // Extension base: supported only when f already splits there.
    auto roots = find_roots(f, F);
    if (static_cast<int>(roots.size()) == f.degree()) return {F, std::move(roots)};
    throw unsupported_splitting_error("splitting over " + F->describe() + " is unsupported");
}

} // namespace etale
