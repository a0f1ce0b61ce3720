#pragma once

/**
 * @file hodge.hpp
 * @brief Hodge-Poincare polynomials of moduli spaces of stable bundles on a curve.
 *
 * For coprime (r, d) and genus g >= 2 the Hodge-Poincare polynomial of the
 * moduli space M_C(r, L) with fixed determinant is the sum over compositions
 * r = r_1 + ... + r_l of
 *
 *   (-1)^{l-1} ((1+x)^g (1+y)^g)^{l-1} / (1-xy)^{l-1}
 *     * prod_j prod_{i=1}^{r_j-1} (1+x^i y^{i+1})^g (1+x^{i+1} y^i)^g
 *                                 / ((1-(xy)^i)(1-(xy)^{i+1}))
 *     * prod_{j=1}^{l-1} 1 / (1-(xy)^{r_j+r_{j+1}})
 *     * (xy)^E
 *
 * with E from twist_exponent(). Each summand is a power series; the total is a
 * polynomial of bidegree at most (N, N), N = dim M, so every summand is
 * evaluated truncated at (N, N). Letting the determinant vary multiplies by the
 * Jacobian factor (1+x)^g (1+y)^g.
 */

#include <cstdint>
#include <future>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <mhodge/composition.hpp>
#include <mhodge/error.hpp>
#include <mhodge/series.hpp>

namespace mhodge {

struct moduli_params {
    unsigned rank = 1;
    std::int64_t degree = 1;
    std::int64_t genus = 2;
    bool fixed_determinant = true;

    friend bool operator==(const moduli_params&, const moduli_params&) = default;

    void validate() const
    {
        if (rank == 0) {
            throw error(error_kind::invalid_argument, "rank must be positive");
        }
        if (std::gcd(static_cast<std::int64_t>(rank), degree) != 1) {
            std::ostringstream os;
            os << "gcd(" << rank << ", " << degree << ") != 1";
            throw error(error_kind::non_coprime, os.str());
        }
        if (genus < 2) {
            throw error(error_kind::genus_too_small, "genus must be at least 2, got "
                                                         + std::to_string(genus));
        }
    }

    /// (r^2-1)(g-1) with fixed determinant, r^2(g-1)+1 otherwise.
    unsigned dimension() const
    {
        const std::int64_t r2 = std::int64_t{rank} * rank;
        return static_cast<unsigned>(fixed_determinant ? (r2 - 1) * (genus - 1)
                                                       : r2 * (genus - 1) + 1);
    }
};

namespace detail {

inline bipoly one_plus_monomial(unsigned i, unsigned j, caps c)
{
    bipoly p = bipoly::one(c);
    p.add_term(i, j, 1);
    return p;
}

inline bipoly composition_term(const composition& comp, const moduli_params& mp, caps c)
{
    const auto g = static_cast<unsigned>(mp.genus);
    const std::size_t len = comp.length();
    const std::int64_t e = twist_exponent(comp, mp.genus, mp.degree, mp.rank);

    // Start from the monomial so the later products stay small under truncation.
    bipoly t = bipoly::monomial(static_cast<unsigned>(e), static_cast<unsigned>(e),
                                len % 2 == 1 ? 1 : -1, c);
    if (t.is_zero()) {
        return t;
    }
    if (len > 1) {
        const auto jac_power = static_cast<unsigned>(g * (len - 1));
        t = bp_mul(t, bp_pow(one_plus_monomial(1, 0, c), jac_power));
        t = bp_mul(t, bp_pow(one_plus_monomial(0, 1, c), jac_power));
        for (std::size_t k = 0; k + 1 < len; ++k) {
            t = bp_mul_geom(t, 1, 1);
        }
    }
    for (unsigned part : comp.parts) {
        for (unsigned i = 1; i < part; ++i) {
            t = bp_mul(t, bp_pow(one_plus_monomial(i, i + 1, c), g));
            t = bp_mul(t, bp_pow(one_plus_monomial(i + 1, i, c), g));
            t = bp_mul_geom(t, i, i);
            t = bp_mul_geom(t, i + 1, i + 1);
        }
    }
    for (std::size_t j = 0; j + 1 < len; ++j) {
        const unsigned s = comp.parts[j] + comp.parts[j + 1];
        t = bp_mul_geom(t, s, s);
    }
    return t;
}

// Fixed-determinant polynomial evaluated at arbitrary caps.
inline bipoly fixed_det_sum(const moduli_params& mp, caps c)
{
    const auto comps = compositions(mp.rank);
    std::vector<bipoly> terms(comps.size());
    if (comps.size() >= 4) {
        std::vector<std::future<bipoly>> jobs;
        jobs.reserve(comps.size());
        for (const auto& comp : comps) {
            jobs.push_back(std::async(std::launch::async,
                                      [&comp, &mp, c] { return composition_term(comp, mp, c); }));
        }
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            terms[k] = jobs[k].get();
        }
    } else {
        for (std::size_t k = 0; k < comps.size(); ++k) {
            terms[k] = composition_term(comps[k], mp, c);
        }
    }
    // Reduce in enumeration order so the result does not depend on scheduling.
    bipoly total(c);
    for (const auto& t : terms) {
        total = bp_add(total, t);
    }
    return total;
}

inline bipoly jacobian_factor(std::int64_t g, caps c)
{
    const auto gu = static_cast<unsigned>(g);
    return bp_mul(bp_pow(one_plus_monomial(1, 0, c), gu), bp_pow(one_plus_monomial(0, 1, c), gu));
}

} // namespace detail

/// HP(M_C(r, L)) for the fixed-determinant moduli space, caps (N, N).
inline bipoly hp_fixed_det(moduli_params mp)
{
    mp.fixed_determinant = true;
    mp.validate();
    const unsigned n = mp.dimension();
    return detail::fixed_det_sum(mp, caps{n, n});
}

/// HP(M_C(r, d)) = HP(M_C(r, L)) * (1+x)^g (1+y)^g, caps (N, N) with N = r^2(g-1)+1.
inline bipoly hp_varying_det(moduli_params mp)
{
    mp.fixed_determinant = false;
    mp.validate();
    const unsigned n = mp.dimension();
    const caps c{n, n};
    return bp_mul(detail::fixed_det_sum(mp, c), detail::jacobian_factor(mp.genus, c));
}

inline bipoly hodge_poincare(const moduli_params& mp)
{
    return mp.fixed_determinant ? hp_fixed_det(mp) : hp_varying_det(mp);
}

/**
 * Square matrix of Hodge numbers h^{p,q}, 0 <= p, q <= n. Construction checks
 * Hodge symmetry, Serre duality, h^{0,0} = 1 and nonnegativity; a violation
 * means the producing evaluator is wrong and is reported as an error.
 */
class hodge_diamond {
public:
    hodge_diamond(unsigned n, std::vector<big_int> entries) : n_(n), h_(std::move(entries))
    {
        if (h_.size() != std::size_t{n_ + 1} * (n_ + 1)) {
            throw error(error_kind::invalid_argument, "hodge_diamond: entry count mismatch");
        }
        validate();
    }

    static hodge_diamond from_polynomial(const bipoly& p, unsigned n)
    {
        std::vector<big_int> h(std::size_t{n + 1} * (n + 1));
        for (const auto& [k, v] : p.terms()) {
            if (k.x > n || k.y > n) {
                std::ostringstream os;
                os << "monomial x^" << k.x << " y^" << k.y << " beyond dimension " << n;
                throw error(error_kind::duality_violation, os.str());
            }
            h[std::size_t{k.x} * (n + 1) + k.y] = v;
        }
        return hodge_diamond(n, std::move(h));
    }

    unsigned dimension() const noexcept { return n_; }

    const big_int& at(unsigned p, unsigned q) const { return h_.at(std::size_t{p} * (n_ + 1) + q); }

    bipoly to_polynomial() const
    {
        bipoly out(caps{n_, n_});
        for (unsigned p = 0; p <= n_; ++p) {
            for (unsigned q = 0; q <= n_; ++q) {
                out.add_term(p, q, at(p, q));
            }
        }
        return out;
    }

    friend bool operator==(const hodge_diamond&, const hodge_diamond&) = default;

private:
    void validate() const
    {
        if (at(0, 0) != 1) {
            throw error(error_kind::unit_violation, "h^{0,0} != 1");
        }
        for (unsigned p = 0; p <= n_; ++p) {
            for (unsigned q = 0; q <= n_; ++q) {
                const auto& v = at(p, q);
                auto where = [&] {
                    return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}";
                };
                if (v < 0) {
                    throw error(error_kind::negative_hodge_number, where() + " < 0");
                }
                if (v != at(q, p)) {
                    throw error(error_kind::symmetry_violation, where() + " != h^{q,p}");
                }
                if (v != at(n_ - p, n_ - q)) {
                    throw error(error_kind::duality_violation, where() + " != h^{n-p,n-q}");
                }
            }
        }
    }

    unsigned n_;
    std::vector<big_int> h_;
};

inline hodge_diamond diamond(const moduli_params& mp)
{
    return hodge_diamond::from_polynomial(hodge_poincare(mp), mp.dimension());
}

struct clause_result {
    std::string clause;
    bool pass = false;
    std::string detail;
};

struct lemma_report {
    unsigned rank = 0;
    std::int64_t genus = 0;
    std::vector<clause_result> clauses;

    bool all_pass() const
    {
        for (const auto& c : clauses) {
            if (!c.pass) {
                return false;
            }
        }
        return !clauses.empty();
    }
};

/// h^{0,1} = 0, h^{1,1} = 1, h^{2,1} = g and h^{i,1} = 0 for 3 <= i <= N, with d = 1.
inline lemma_report lemma_hodge_numbers_check(unsigned r, std::int64_t g)
{
    const moduli_params mp{r, 1, g, true};
    const auto dm = diamond(mp);
    const unsigned n = dm.dimension();
    auto h = [&](unsigned p, unsigned q) { return p <= n && q <= n ? dm.at(p, q) : big_int(0); };
    auto describe = [](const char* name, const big_int& v) {
        std::ostringstream os;
        os << name << " = " << v;
        return os.str();
    };

    lemma_report rep{r, g, {}};
    rep.clauses.push_back({"h^{0,1} = 0", h(0, 1) == 0, describe("h^{0,1}", h(0, 1))});
    rep.clauses.push_back({"h^{1,1} = 1", h(1, 1) == 1, describe("h^{1,1}", h(1, 1))});
    rep.clauses.push_back({"h^{2,1} = g", h(2, 1) == g, describe("h^{2,1}", h(2, 1))});

    clause_result tail{"h^{i,1} = 0 for 3 <= i <= N", true, "all zero"};
    for (unsigned i = 3; i <= n; ++i) {
        if (h(i, 1) != 0) {
            std::ostringstream os;
            os << "h^{" << i << ",1} = " << h(i, 1);
            tail.pass = false;
            tail.detail = os.str();
            break;
        }
    }
    rep.clauses.push_back(tail);
    return rep;
}

struct level_violation {
    unsigned p = 0;
    unsigned q = 0;
    big_int value;
};

struct level_report {
    bool pass = true;
    std::vector<level_violation> violations;
};

/// Every nonzero h^{p,q} with p+q = i must satisfy |p-q| <= floor(i/3).
inline level_report level_check(const hodge_diamond& dm)
{
    level_report rep;
    const unsigned n = dm.dimension();
    for (unsigned p = 0; p <= n; ++p) {
        for (unsigned q = 0; q <= n; ++q) {
            if (dm.at(p, q) == 0) {
                continue;
            }
            const unsigned spread = p > q ? p - q : q - p;
            if (spread > (p + q) / 3) {
                rep.pass = false;
                rep.violations.push_back({p, q, dm.at(p, q)});
            }
        }
    }
    return rep;
}

/// Poincare polynomial, by the Hodge decomposition.
inline unipoly betti(const moduli_params& mp) { return specialize_diag(hodge_poincare(mp)); }

/// Topological Euler characteristic.
inline big_int euler(const moduli_params& mp) { return betti(mp).evaluate(-1); }

} // namespace mhodge
