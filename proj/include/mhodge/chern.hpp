#pragma once

/**
 * @file chern.hpp
 * @brief Kunneth-truncated Chern calculus on C x M and the GRR pushforward to M.
 *
 * Cohomology classes on C x M are modelled as base + fiber * f, where f is the
 * point class of the curve (f^2 = 0) and base, fiber are polynomials in
 * classes on M. Odd Kunneth components H^1(C) x H^odd(M) are not modelled:
 * they push forward to odd-degree classes on M and cannot contribute to the
 * first Chern class of a determinant line bundle.
 *
 * Generators on M (complex degree in parentheses):
 *   theta (1)  c_1 of the theta bundle
 *   a     (1)  c_1(W_x)
 *   nu_m  (2)  base Kunneth part of N_2(W) = c_1(W)^2 - 2 c_2(W); inert
 *   nu_f  (1)  fibre Kunneth part of N_2(W); the unknown solved for below
 * Classes on M are truncated above complex degree 2.
 */

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <mhodge/bounds.hpp>
#include <mhodge/composition.hpp>
#include <mhodge/error.hpp>

namespace mhodge {

enum class msymbol : std::size_t { theta = 0, a = 1, nu_m = 2, nu_f = 3 };

constexpr std::size_t msymbol_count = 4;
constexpr std::array<unsigned, msymbol_count> msymbol_degree{1, 1, 2, 1};
constexpr std::array<const char*, msymbol_count> msymbol_name{"theta", "a", "nu_M", "nu_f"};
constexpr unsigned mclass_max_degree = 2;

using mmonomial = std::array<unsigned, msymbol_count>;

inline unsigned monomial_degree(const mmonomial& m)
{
    unsigned d = 0;
    for (std::size_t i = 0; i < msymbol_count; ++i) {
        d += m[i] * msymbol_degree[i];
    }
    return d;
}

/// Graded polynomial in the generators with rational coefficients, truncated at degree 2.
class mclass {
public:
    mclass() = default;
    mclass(const rational& scalar) { add(mmonomial{}, scalar); } // NOLINT(google-explicit-constructor)

    static mclass symbol(msymbol s, const rational& coef = 1)
    {
        mmonomial m{};
        m[static_cast<std::size_t>(s)] = 1;
        mclass out;
        out.add(m, coef);
        return out;
    }

    void add(const mmonomial& m, const rational& coef)
    {
        if (coef == 0 || monomial_degree(m) > mclass_max_degree) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    const std::map<mmonomial, rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    rational coeff(const mmonomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? rational(0) : it->second;
    }

    /// Coefficient of a single generator to the first power.
    rational coeff(msymbol s) const
    {
        mmonomial m{};
        m[static_cast<std::size_t>(s)] = 1;
        return coeff(m);
    }

    mclass component(unsigned degree) const
    {
        mclass out;
        for (const auto& [m, c] : terms_) {
            if (monomial_degree(m) == degree) {
                out.add(m, c);
            }
        }
        return out;
    }

    bool is_homogeneous(unsigned degree) const
    {
        for (const auto& [m, c] : terms_) {
            if (monomial_degree(m) != degree) {
                return false;
            }
        }
        return true;
    }

    bool mentions(msymbol s) const
    {
        for (const auto& [m, c] : terms_) {
            if (m[static_cast<std::size_t>(s)] != 0) {
                return true;
            }
        }
        return false;
    }

    friend mclass operator+(const mclass& x, const mclass& y)
    {
        mclass out = x;
        for (const auto& [m, c] : y.terms_) {
            out.add(m, c);
        }
        return out;
    }

    friend mclass operator-(const mclass& x) { return x * rational(-1); }
    friend mclass operator-(const mclass& x, const mclass& y) { return x + (-y); }

    friend mclass operator*(const mclass& x, const rational& s)
    {
        mclass out;
        for (const auto& [m, c] : x.terms_) {
            out.add(m, c * s);
        }
        return out;
    }

    friend mclass operator*(const mclass& x, const mclass& y)
    {
        mclass out;
        for (const auto& [mx, cx] : x.terms_) {
            for (const auto& [my, cy] : y.terms_) {
                mmonomial m{};
                for (std::size_t i = 0; i < msymbol_count; ++i) {
                    m[i] = mx[i] + my[i];
                }
                out.add(m, cx * cy);
            }
        }
        return out;
    }

    friend bool operator==(const mclass&, const mclass&) = default;

private:
    std::map<mmonomial, rational> terms_;
};

/// Replaces every occurrence of s by the class `value`.
inline mclass substitute(const mclass& x, msymbol s, const mclass& value)
{
    const auto idx = static_cast<std::size_t>(s);
    mclass out;
    for (const auto& [m, c] : x.terms()) {
        mmonomial rest = m;
        rest[idx] = 0;
        mclass term;
        term.add(rest, c);
        for (unsigned k = 0; k < m[idx]; ++k) {
            term = term * value;
        }
        out = out + term;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const mclass& x)
{
    if (x.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        os << (first ? "" : " + ") << '(' << c << ')';
        first = false;
        for (std::size_t i = 0; i < msymbol_count; ++i) {
            if (m[i] == 1) {
                os << '*' << msymbol_name[i];
            } else if (m[i] > 1) {
                os << '*' << msymbol_name[i] << '^' << m[i];
            }
        }
    }
    return os;
}

inline std::string to_string(const mclass& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

/// base + fiber * f on C x M, with f^2 = 0.
struct kclass {
    mclass base;
    mclass fiber;

    friend kclass operator+(const kclass& x, const kclass& y) { return {x.base + y.base, x.fiber + y.fiber}; }
    friend kclass operator-(const kclass& x) { return {-x.base, -x.fiber}; }
    friend kclass operator-(const kclass& x, const kclass& y) { return x + (-y); }
    friend kclass operator*(const kclass& x, const rational& s) { return {x.base * s, x.fiber * s}; }

    friend kclass operator*(const kclass& x, const kclass& y)
    {
        return {x.base * y.base, x.base * y.fiber + x.fiber * y.base};
    }

    /// Part of total complex degree k: base in degree k, fibre coefficient in degree k - 1.
    kclass component(unsigned k) const
    {
        return {base.component(k), k == 0 ? mclass{} : fiber.component(k - 1)};
    }

    bool is_homogeneous(unsigned k) const
    {
        return base.is_homogeneous(k) && (k == 0 ? fiber.is_zero() : fiber.is_homogeneous(k - 1));
    }

    friend bool operator==(const kclass&, const kclass&) = default;
};

/// Rank, c_1 and N_2 = c_1^2 - 2 c_2 of a sheaf on C x M.
struct chern_data {
    rational rank = 0;
    kclass c1;
    kclass n2;

    friend bool operator==(const chern_data&, const chern_data&) = default;

    void validate() const
    {
        if (rank < 0 || !c1.is_homogeneous(1) || !n2.is_homogeneous(2)) {
            throw error(error_kind::invalid_argument, "chern_data: expects rank >= 0, c1 of degree 1, n2 of degree 2");
        }
    }
};

inline chern_data cd_trivial_line() { return {1, {}, {}}; }

/// Odd Chern character components change sign: (r, -c1, n2).
inline chern_data cd_dual(const chern_data& e) { return {e.rank, -e.c1, e.n2}; }

inline chern_data cd_sum(const chern_data& e1, const chern_data& e2)
{
    return {e1.rank + e2.rank, e1.c1 + e2.c1, e1.n2 + e2.n2};
}

inline chern_data cd_tensor(const chern_data& e1, const chern_data& e2)
{
    return {
        e1.rank * e2.rank,
        e1.c1 * e2.rank + e2.c1 * e1.rank,
        e1.n2 * e2.rank + e2.n2 * e1.rank + (e1.c1 * e2.c1) * rational(2),
    };
}

/// ch = rank + c1 + n2 / 2, up to degree 2.
inline kclass chern_character(const chern_data& e)
{
    return kclass{mclass(e.rank), {}} + e.c1 + e.n2 * rational(1, 2);
}

/// td(C) = 1 + c_1(T_C)/2 = 1 + (1 - g) f.
inline kclass todd_curve(std::int64_t g)
{
    if (g < 0) {
        throw error(error_kind::invalid_argument, "todd_curve: genus must be nonnegative");
    }
    return {mclass(1), mclass(rational(1 - g))};
}

/// c_1(R p_{2*} E) = p_{2*}((ch(E) td(C))_{deg 2}); the pushforward reads off the f-coefficient.
inline mclass grr_push(const chern_data& e, std::int64_t g)
{
    return (chern_character(e) * todd_curve(g)).component(2).fiber;
}

/// The normalised Poincare bundle W = (r, a + d f, nu_m + nu_f f).
inline chern_data poincare_bundle(std::int64_t r, std::int64_t d)
{
    return {
        rational(r),
        {mclass::symbol(msymbol::a), mclass(rational(d))},
        {mclass::symbol(msymbol::nu_m), mclass::symbol(msymbol::nu_f)},
    };
}

struct lemma_equality_result {
    mclass pushforward; ///< c_1(det R p_{2*} ad W) as a linear form in nu_f
    mclass nu_f;        ///< solved fibre part of N_2(W)
    mclass expected;    ///< (-2 theta + 2 d a) / r
    bool check = false;
};

/**
 * Solves c_1(det R p_{2*} ad W) = -2 theta for nu_f, where ad W = End W - O and
 * -2 theta is the canonical class of M, then compares with (-2 theta + 2 d a)/r.
 */
inline lemma_equality_result verify_lemma_equality(std::int64_t r, std::int64_t d, std::int64_t g)
{
    if (r < 1) {
        throw error(error_kind::invalid_argument, "verify_lemma_equality: rank must be positive");
    }
    if (std::gcd(r, d) != 1) {
        throw error(error_kind::non_coprime, "verify_lemma_equality: gcd(r, d) != 1");
    }
    const chern_data w = poincare_bundle(r, d);
    const chern_data end_w = cd_tensor(w, cd_dual(w));

    lemma_equality_result out;
    out.pushforward = grr_push(end_w, g) - grr_push(cd_trivial_line(), g);

    const rational slope = out.pushforward.coeff(msymbol::nu_f);
    const mclass rest = out.pushforward - mclass::symbol(msymbol::nu_f, slope);
    if (slope == 0 || rest.mentions(msymbol::nu_f)) {
        throw error(error_kind::solve_failure, "pushforward is not a nondegenerate linear form in nu_f");
    }
    const mclass canonical = mclass::symbol(msymbol::theta, -2);
    out.nu_f = (canonical - rest) * (rational(1) / slope);
    out.expected = (mclass::symbol(msymbol::theta, -2) + mclass::symbol(msymbol::a, 2 * d))
                   * rational(1, r);
    out.check = out.nu_f == out.expected;
    return out;
}

struct determinant_result {
    std::int64_t ell = 0;
    mclass c1_det;       ///< c_1(det R p_{2*} W^dual) before normalisation
    rational exponent;   ///< q with det(R p_{2*} W^dual)^dual = Theta^q
    rational expected;   ///< (1 - l d)/r + l (1 - g)
    bool check = false;
};

inline determinant_result det_cohomology_exponent(std::int64_t r, std::int64_t d, std::int64_t g)
{
    const auto lemma = verify_lemma_equality(r, d, g);
    determinant_result out;
    out.ell = normalization_ell(r, d);
    out.c1_det = substitute(grr_push(cd_dual(poincare_bundle(r, d)), g), msymbol::nu_f, lemma.nu_f);

    // c_1(W_x) = l theta, and dualising the determinant negates c_1.
    const mclass normalised =
        -substitute(out.c1_det, msymbol::a, mclass::symbol(msymbol::theta, out.ell));
    if (normalised != mclass::symbol(msymbol::theta, normalised.coeff(msymbol::theta))) {
        throw error(error_kind::assertion_failure,
                    "determinant class is not a multiple of theta: " + to_string(normalised));
    }
    out.exponent = normalised.coeff(msymbol::theta);
    out.expected = rational(1 - out.ell * d, r) + rational(out.ell * (1 - g));
    out.check = lemma.check && out.exponent == out.expected;
    if (!out.check) {
        std::ostringstream os;
        os << "exponent " << out.exponent << " != " << out.expected;
        throw error(error_kind::assertion_failure, os.str());
    }
    return out;
}

} // namespace mhodge
