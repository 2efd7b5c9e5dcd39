#include "etale/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

namespace etale {

// ----------------------------------------------------- subspace traversal

mpz_class gaussian_binomial(unsigned D, unsigned r, std::uint64_t q) {
    if (r > D) return 0;
    mpz_class num = 1, den = 1;
    mpz_class qz(static_cast<unsigned long>(q));
    auto qpow = [&](unsigned e) {
        mpz_class out = 1;
        for (unsigned i = 0; i < e; ++i) out *= qz;
        return out;
    };
    for (unsigned i = 0; i < r; ++i) {
        num *= qpow(D - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    return num / den;
}

namespace {

// Iterate over all r-subsets of {0..D-1} (pivot columns), lexicographically.
bool next_combination(std::vector<std::size_t>& c, std::size_t D) {
    const std::size_t r = c.size();
    for (std::size_t i = r; i-- > 0;) {
        if (c[i] + (r - i) < D) {
            ++c[i];
            for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

void for_each_subspace(const FieldPtr& F, std::size_t ambient, std::size_t r,
                       const EnumerationBudget& budget,
                       const std::function<void(const Subspace&)>& fn) {
    if (r > ambient) return;
    if (r == 0) {
        fn(Subspace(F, ambient));
        return;
    }
    mpz_class total = gaussian_binomial(static_cast<unsigned>(ambient),
                                        static_cast<unsigned>(r), F->order());
    if (total > mpz_class(static_cast<unsigned long>(budget.max_subspace_candidates)))
        throw budget_error("subspace enumeration over budget: " + total.get_str() +
                           " candidates");

    const std::uint64_t q = F->order();
    std::vector<std::size_t> pivots(r);
    std::iota(pivots.begin(), pivots.end(), 0);
    do {
        std::vector<bool> is_pivot(ambient, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        // Free positions of the RREF pattern, row-major.
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = pivots[i] + 1; j < ambient; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<std::uint64_t> digits(free_pos.size(), 0);
        Matrix base(F, r, ambient);
        for (std::size_t i = 0; i < r; ++i) base.at(i, pivots[i]) = F->one();
        while (true) {
            Matrix M = base;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                if (digits[t] != 0)
                    M.at(free_pos[t].first, free_pos[t].second) = F->nth_element(digits[t]);
            fn(Subspace::span(M)); // already RREF; span canonicalizes cheaply
            // Mixed-radix increment.
            std::size_t t = 0;
            while (t < digits.size()) {
                if (++digits[t] < q) break;
                digits[t] = 0;
                ++t;
            }
            if (t == digits.size()) break;
        }
    } while (next_combination(pivots, ambient));
}

// ------------------------------------------------- etale subalgebra sweep

std::vector<EtaleSubalgebra> enum_etale_subalgebras(const AlgebraPtr& A, unsigned m,
                                                    const EnumerationBudget& budget) {
    const auto& F = A->field();
    if (!F->is_finite())
        throw invalid_input_error("subalgebra enumeration needs a finite base field");
    if (m < 1 || m > A->dim())
        throw invalid_input_error("subalgebra dimension out of range");
    const std::size_t d = A->dim();

    // Subspaces containing 1 correspond to subspaces of A / <1>; enumerate
    // the quotient and lift.  i0 is a coordinate where 1 is nonzero.
    std::size_t i0 = 0;
    while (i0 < d && A->one_coords()[i0].is_zero()) ++i0;
    if (i0 == d) throw structural_error("algebra unity is zero");
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < d; ++j)
        if (j != i0) rest.push_back(j);

    std::vector<EtaleSubalgebra> out;
    for_each_subspace(F, d - 1, m - 1, budget, [&](const Subspace& Wbar) {
        Matrix rows(F, m, d);
        rows.set_row(0, A->one_coords());
        for (std::size_t i = 0; i < Wbar.dim(); ++i)
            for (std::size_t t = 0; t < d - 1; ++t)
                rows.at(i + 1, rest[t]) = Wbar.basis().at(i, t);
        Subspace V = Subspace::span(rows);
        if (V.dim() != m)
            throw structural_error("lifted subspace has the wrong dimension");
        if (is_etale_subalgebra(V, A)) out.emplace_back(A, V);
    });
    std::sort(out.begin(), out.end(), [](const EtaleSubalgebra& a, const EtaleSubalgebra& b) {
        return a.cmp(b) == std::strong_ordering::less;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------- idempotent search

namespace {

std::vector<AlgebraElement> idempotents_by_sweep(const AlgebraPtr& A,
                                                 const EnumerationBudget& budget) {
    const auto& F = A->field();
    const std::size_t d = A->dim();
    const std::uint64_t q = F->order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > budget.max_element_sweep / q + 1)
            throw budget_error("idempotent sweep over budget");
        total *= q;
    }
    if (total > budget.max_element_sweep)
        throw budget_error("idempotent sweep over budget");

    std::vector<AlgebraElement> out;
    std::vector<std::uint64_t> digits(d, 0);
    std::vector<Scalar> coords(d, F->zero());
    for (std::uint64_t step = 0;; ++step) {
        // e*e == e, coordinate by coordinate with early exit.
        bool ok = true;
        for (std::size_t k = 0; k < d && ok; ++k) {
            Scalar acc = F->zero();
            for (const auto& [i, j, c] : A->coordinate_terms(k)) {
                if (coords[i].is_zero() || coords[j].is_zero()) continue;
                acc = acc + coords[i] * coords[j] * c;
            }
            ok = acc == coords[k];
        }
        if (ok) out.push_back(A->element(coords));
        // Mixed-radix increment.
        std::size_t t = 0;
        while (t < d) {
            if (++digits[t] < q) {
                coords[t] = F->nth_element(digits[t]);
                break;
            }
            digits[t] = 0;
            coords[t] = F->zero();
            ++t;
        }
        if (t == d) break;
    }
    return out;
}

std::vector<AlgebraElement> idempotents_by_projection(const AlgebraPtr& A,
                                                      const EnumerationBudget& budget) {
    auto nopt = A->matrix_form();
    if (!nopt) throw invalid_input_error("projection enumeration needs a matrix algebra");
    const unsigned n = *nopt;
    const auto& F = A->field();
    std::vector<AlgebraElement> out;
    out.push_back(A->zero());
    out.push_back(A->one());
    for (unsigned r = 1; r < n; ++r) {
        std::vector<Subspace> images;
        for_each_subspace(F, n, r, budget, [&](const Subspace& U) { images.push_back(U); });
        std::vector<Subspace> kernels;
        for_each_subspace(F, n, n - r, budget,
                          [&](const Subspace& W) { kernels.push_back(W); });
        for (const auto& U : images) {
            for (const auto& W : kernels) {
                if (!direct_sum_check({U, W}, n)) continue;
                // Projection onto U along W: C diag(1,..,1,0,..,0) C^{-1}
                // with C's columns a basis of U then W.
                Matrix C(F, n, n);
                for (unsigned j = 0; j < r; ++j)
                    for (unsigned i = 0; i < n; ++i) C.at(i, j) = U.basis().at(j, i);
                for (unsigned j = 0; j < n - r; ++j)
                    for (unsigned i = 0; i < n; ++i) C.at(i, r + j) = W.basis().at(j, i);
                Matrix D(F, n, n);
                for (unsigned i = 0; i < r; ++i) D.at(i, i) = F->one();
                Matrix P = C * D * C.inverse();
                std::vector<Scalar> coords(static_cast<std::size_t>(n) * n, F->zero());
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j) coords[i * n + j] = P.at(i, j);
                AlgebraElement e = A->element(std::move(coords));
                if (!e.is_idempotent())
                    throw structural_error("constructed projection is not idempotent");
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

} // namespace

std::vector<AlgebraElement> enum_idempotents(const AlgebraPtr& A,
                                             const EnumerationBudget& budget,
                                             IdempotentStrategy strategy) {
    const auto& F = A->field();
    if (!F->is_finite())
        throw invalid_input_error("idempotent enumeration needs a finite field");
    std::vector<AlgebraElement> out;
    switch (strategy) {
    case IdempotentStrategy::sweep:
        out = idempotents_by_sweep(A, budget);
        break;
    case IdempotentStrategy::projection:
        out = idempotents_by_projection(A, budget);
        break;
    case IdempotentStrategy::automatic:
        if (A->matrix_form())
            out = idempotents_by_projection(A, budget);
        else
            out = idempotents_by_sweep(A, budget);
        break;
    }
    std::sort(out.begin(), out.end(), [](const AlgebraElement& a, const AlgebraElement& b) {
        return a.cmp(b) == std::strong_ordering::less;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ------------------------------------------------------- ideal systems

namespace {

// Partitions of n into positive parts, descending, deterministic order.
std::vector<std::vector<unsigned>> integer_partitions(unsigned n) {
    if (n == 0) return {{}};
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

struct Orbit {
    std::vector<AlgebraElement> elems; // sorted canonically
    std::string key;
};

std::string orbit_key(const std::vector<AlgebraElement>& elems) {
    std::string k;
    for (const auto& e : elems) k += e.to_text() + "|";
    return k;
}

// Frobenius orbits of size exactly `s` of reduced-rank-r idempotents of
// A (x) F_{q^s}, as element lists over that field.
std::vector<Orbit> enum_orbits(const AlgebraPtr& A, unsigned r, unsigned s,
                               const EnumerationBudget& budget) {
    const auto& base = A->field();
    const std::uint64_t q = base->order();
    FieldPtr Es = canonical_extension(base, s);
    AlgebraPtr As = A->extend_scalars(Es);
    std::map<std::string, Orbit> seen;
    for (const auto& e : enum_idempotents(As, budget)) {
        if (e.is_zero()) continue;
        RightIdeal I = ideal_from_idempotent(e);
        if (reduced_rank(I) != r) continue;
        std::vector<AlgebraElement> orbit = {e};
        AlgebraElement x = frobenius_element(e, q);
        while (!(x == e) && orbit.size() <= s) {
            orbit.push_back(x);
            x = frobenius_element(x, q);
        }
        if (orbit.size() != s || !(x == e)) continue;
        // Orbit elements must be pairwise orthogonal to sit in one system.
        bool ortho = true;
        for (std::size_t i = 0; i < orbit.size() && ortho; ++i)
            for (std::size_t j = 0; j < orbit.size() && ortho; ++j)
                if (i != j && !(orbit[i] * orbit[j]).is_zero()) ortho = false;
        if (!ortho) continue;
        std::sort(orbit.begin(), orbit.end(),
                  [](const AlgebraElement& a, const AlgebraElement& b) {
                      return a.cmp(b) == std::strong_ordering::less;
                  });
        std::string k = orbit_key(orbit);
        if (!seen.count(k)) seen.emplace(k, Orbit{std::move(orbit), k});
    }
    std::vector<Orbit> out;
    out.reserve(seen.size());
    for (auto& [k, o] : seen) out.push_back(std::move(o));
    return out;
}

// All ways to pick `count` distinct indices out of n, lexicographic.
void for_each_choice(std::size_t n, std::size_t count,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (count > n) return;
    std::vector<std::size_t> c(count);
    std::iota(c.begin(), c.end(), 0);
    if (count == 0) {
        fn(c);
        return;
    }
    while (true) {
        fn(c);
        if (!next_combination(c, n)) break;
    }
}

} // namespace

std::vector<IdealSystem> enum_ideal_systems(const AlgebraPtr& A, const Partition& rho,
                                            const EnumerationBudget& budget) {
    const auto& base = A->field();
    if (!base->is_finite())
        throw invalid_input_error("ideal-system enumeration needs a finite base field");
    if (!A->degree())
        throw invalid_input_error("ideal-system enumeration needs a degree certificate");
    if (rho.sum() != *A->degree())
        throw invalid_input_error("rank profile does not sum to the degree");

    // Orbit structure: Frobenius preserves reduced rank, so the orbits
    // partition the multiplicity of each distinct rank separately.
    std::vector<unsigned> ranks = rho.distinct_parts();
    std::vector<std::vector<std::vector<unsigned>>> per_rank_structures;
    for (unsigned r : ranks)
        per_rank_structures.push_back(integer_partitions(rho.multiplicity(r)));

    std::map<std::string, IdealSystem> found; // key: field tag + system key
    std::vector<std::size_t> choice(ranks.size(), 0);

    // Cartesian product over the per-rank structure choices.
    while (true) {
        // Assemble the orbit-size request: (rank, size) with multiplicity.
        std::map<std::pair<unsigned, unsigned>, unsigned> want; // (r, s) -> count
        unsigned L = 1;
        for (std::size_t t = 0; t < ranks.size(); ++t)
            for (unsigned s : per_rank_structures[t][choice[t]]) {
                ++want[{ranks[t], s}];
                L = static_cast<unsigned>(std::lcm(L, s));
            }

        FieldPtr EL = canonical_extension(base, L);
        AlgebraPtr AL = A->extend_scalars(EL);

        // Orbits per (rank, size), embedded into A (x) E_L.
        std::vector<std::vector<std::vector<AlgebraElement>>> pools;
        std::vector<unsigned> pool_count;
        bool feasible = true;
        for (const auto& [rs, cnt] : want) {
            auto [r, s] = rs;
            auto orbits = enum_orbits(A, r, s, budget);
            if (orbits.size() < cnt) feasible = false;
            FieldEmbedding sigma =
                FieldEmbedding::find(canonical_extension(base, s), EL, base);
            std::vector<std::vector<AlgebraElement>> embedded;
            embedded.reserve(orbits.size());
            for (const auto& o : orbits) {
                std::vector<AlgebraElement> lifted;
                lifted.reserve(o.elems.size());
                for (const auto& e : o.elems) {
                    std::vector<Scalar> c;
                    c.reserve(e.coords().size());
                    for (const auto& x : e.coords()) c.push_back(sigma.apply(x));
                    lifted.emplace_back(AL, std::move(c));
                }
                embedded.push_back(std::move(lifted));
            }
            pools.push_back(std::move(embedded));
            pool_count.push_back(cnt);
        }

        if (feasible) {
            // Choose `cnt` distinct orbits from each pool, all combinations.
            std::vector<std::vector<std::vector<std::size_t>>> selections(pools.size());
            for (std::size_t p = 0; p < pools.size(); ++p)
                for_each_choice(pools[p].size(), pool_count[p],
                                [&](const std::vector<std::size_t>& c) {
                                    selections[p].push_back(c);
                                });
            std::vector<std::size_t> sel(pools.size(), 0);
            bool more = !pools.empty();
            if (pools.empty()) more = false;
            while (more) {
                std::vector<AlgebraElement> elems;
                for (std::size_t p = 0; p < pools.size(); ++p)
                    for (std::size_t oi : selections[p][sel[p]])
                        for (const auto& e : pools[p][oi]) elems.push_back(e);
                // Cheap filters before full system validation.
                bool ok = elems.size() == rho.length();
                if (ok) {
                    AlgebraElement sum = AL->zero();
                    for (const auto& e : elems) sum = sum + e;
                    ok = sum == AL->one();
                }
                if (ok) {
                    for (std::size_t i = 0; i < elems.size() && ok; ++i)
                        for (std::size_t j = i + 1; j < elems.size() && ok; ++j)
                            if (!(elems[i] * elems[j]).is_zero() ||
                                !(elems[j] * elems[i]).is_zero())
                                ok = false;
                }
                if (ok) {
                    IdealSystem sys = IdealSystem::from_idempotents(AL, elems, base);
                    if (sys.rank_profile() == rho && sys.is_frobenius_stable()) {
                        std::vector<AlgebraElement> sorted = sys.idempotents();
                        std::sort(sorted.begin(), sorted.end(),
                                  [](const AlgebraElement& a, const AlgebraElement& b) {
                                      return a.cmp(b) == std::strong_ordering::less;
                                  });
                        std::string key = EL->describe() + "#" + orbit_key(sorted);
                        found.emplace(key, std::move(sys));
                    }
                }
                // Advance the cross-pool odometer.
                std::size_t p = 0;
                while (p < pools.size()) {
                    if (++sel[p] < selections[p].size()) break;
                    sel[p] = 0;
                    ++p;
                }
                if (p == pools.size()) more = false;
            }
        }

        // Next structure choice.
        std::size_t t = 0;
        while (t < ranks.size()) {
            if (++choice[t] < per_rank_structures[t].size()) break;
            choice[t] = 0;
            ++t;
        }
        if (t == ranks.size()) break;
    }

    std::vector<IdealSystem> out;
    out.reserve(found.size());
    for (auto& [k, s] : found) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const IdealSystem& a, const IdealSystem& b) {
        return a.cmp(b) == std::strong_ordering::less;
    });
    return out;
}

// ------------------------------------------------------- verification

EnumerationReport verify_moduli_count(const AlgebraPtr& A, const Partition& rho,
                                      const EnumerationBudget& budget) {
    auto t0 = std::chrono::steady_clock::now();
    EnumerationReport rep{rho, 0, 0, false, false, 0.0};

    auto all_subs = enum_etale_subalgebras(A, static_cast<unsigned>(rho.length()), budget);
    std::vector<EtaleSubalgebra> subs;
    for (const auto& E : all_subs)
        if (E.type() == rho) subs.push_back(E);
    rep.count_subalgebras = subs.size();

    auto systems = enum_ideal_systems(A, rho, budget);
    rep.count_systems = systems.size();
    rep.match = rep.count_subalgebras == rep.count_systems;

    // Explicit bijection: each subalgebra's system appears exactly once in
    // the enumerated list, and maps back to the subalgebra it came from.
    bool bij = rep.match;
    std::vector<bool> used(systems.size(), false);
    for (const auto& E : subs) {
        if (!bij) break;
        IdealSystem sysE = ideal_system_from_subalgebra(E);
        bool matched = false;
        for (std::size_t i = 0; i < systems.size(); ++i) {
            if (used[i] || !(systems[i] == sysE)) continue;
            used[i] = true;
            matched = true;
            // Round trip: span of the system's idempotents descends to E.
            EtaleSubalgebra back = subalgebra_from_ideal_system(systems[i]);
            auto descended = descend_subspace(back.subspace(), A->field());
            if (!descended || !(*descended == E.subspace())) bij = false;
            break;
        }
        if (!matched) bij = false;
    }
    for (bool u : used)
        if (!u) bij = false;
    rep.bijection_verified = bij;

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace etale
