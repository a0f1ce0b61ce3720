#pragma once

/**
 * @file series.hpp
 * @brief Truncated bivariate polynomials with exact integer coefficients.
 *
 * A BiPoly is a sparse map from bidegrees (i, j) to nonzero big integers,
 * together with inclusive truncation caps. Products discard every monomial
 * whose x-degree or y-degree exceeds the caps, so a BiPoly also serves as a
 * truncated power series in x and y. Binary operations require equal caps.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include <mhodge/error.hpp>

namespace mhodge {

using big_int = boost::multiprecision::cpp_int;

struct bidegree {
    unsigned x = 0;
    unsigned y = 0;

    friend constexpr auto operator<=>(const bidegree&, const bidegree&) = default;
};

struct caps {
    unsigned x = 0;
    unsigned y = 0;

    friend constexpr bool operator==(const caps&, const caps&) = default;

    constexpr bool contains(unsigned i, unsigned j) const noexcept { return i <= x && j <= y; }
};

class bipoly {
public:
    using term_map = std::map<bidegree, big_int>;

    bipoly() = default;
    explicit bipoly(caps c) : caps_(c) {}

    static bipoly one(caps c) { return monomial(0, 0, 1, c); }

    static bipoly monomial(unsigned i, unsigned j, const big_int& coef, caps c)
    {
        bipoly p(c);
        p.add_term(i, j, coef);
        return p;
    }

    caps bounds() const noexcept { return caps_; }
    unsigned cap_x() const noexcept { return caps_.x; }
    unsigned cap_y() const noexcept { return caps_.y; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // Adds coef * x^i y^j; monomials outside the caps are dropped.
    void add_term(unsigned i, unsigned j, const big_int& coef)
    {
        if (coef == 0 || !caps_.contains(i, j)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(bidegree{i, j}, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    big_int coeff(unsigned i, unsigned j) const
    {
        auto it = terms_.find(bidegree{i, j});
        return it == terms_.end() ? big_int(0) : it->second;
    }

    unsigned max_x_degree() const noexcept
    {
        unsigned m = 0;
        for (const auto& [k, v] : terms_) {
            m = std::max(m, k.x);
        }
        return m;
    }

    unsigned max_y_degree() const noexcept
    {
        unsigned m = 0;
        for (const auto& [k, v] : terms_) {
            m = std::max(m, k.y);
        }
        return m;
    }

    unsigned max_total_degree() const noexcept
    {
        unsigned m = 0;
        for (const auto& [k, v] : terms_) {
            m = std::max(m, k.x + k.y);
        }
        return m;
    }

    friend bool operator==(const bipoly& a, const bipoly& b)
    {
        return a.caps_ == b.caps_ && a.terms_ == b.terms_;
    }

private:
    caps caps_{};
    term_map terms_;
};

namespace detail {

inline void require_same_caps(const bipoly& a, const bipoly& b, const char* op)
{
    if (!(a.bounds() == b.bounds())) {
        std::ostringstream os;
        os << op << ": caps (" << a.cap_x() << ',' << a.cap_y() << ") vs (" << b.cap_x() << ','
           << b.cap_y() << ')';
        throw error(error_kind::cap_mismatch, os.str());
    }
}

} // namespace detail

inline bipoly bp_add(const bipoly& a, const bipoly& b)
{
    detail::require_same_caps(a, b, "bp_add");
    bipoly out = a;
    for (const auto& [k, v] : b.terms()) {
        out.add_term(k.x, k.y, v);
    }
    return out;
}

inline bipoly bp_neg(const bipoly& a)
{
    bipoly out(a.bounds());
    for (const auto& [k, v] : a.terms()) {
        out.add_term(k.x, k.y, -v);
    }
    return out;
}

inline bipoly bp_sub(const bipoly& a, const bipoly& b) { return bp_add(a, bp_neg(b)); }

inline bipoly bp_scale(const bipoly& a, const big_int& s)
{
    bipoly out(a.bounds());
    if (s == 0) {
        return out;
    }
    for (const auto& [k, v] : a.terms()) {
        out.add_term(k.x, k.y, v * s);
    }
    return out;
}

inline bipoly bp_mul(const bipoly& a, const bipoly& b)
{
    detail::require_same_caps(a, b, "bp_mul");
    const caps c = a.bounds();
    bipoly out(c);
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            const unsigned i = ka.x + kb.x;
            const unsigned j = ka.y + kb.y;
            if (c.contains(i, j)) {
                out.add_term(i, j, va * vb);
            }
        }
    }
    return out;
}

inline bipoly bp_pow(const bipoly& a, unsigned n)
{
    bipoly result = bipoly::one(a.bounds());
    bipoly base = a;
    while (n > 0) {
        if (n & 1U) {
            result = bp_mul(result, base);
        }
        n >>= 1U;
        if (n > 0) {
            base = bp_mul(base, base);
        }
    }
    return result;
}

// Sum_{k >= 0} x^{ak} y^{bk} within the caps: the inverse of (1 - x^a y^b).
inline bipoly geom_series(unsigned a, unsigned b, caps c)
{
    if (a == 0 && b == 0) {
        throw error(error_kind::zero_monomial, "geom_series(0, 0) has no inverse");
    }
    bipoly out(c);
    for (unsigned i = 0, j = 0; c.contains(i, j); i += a, j += b) {
        out.add_term(i, j, 1);
    }
    return out;
}

// p / (1 - x^a y^b), computed by the running-sum recurrence q[e] = p[e] + q[e - (a,b)].
// Equal to bp_mul(p, geom_series(a, b, caps)) but linear in the number of terms.
inline bipoly bp_mul_geom(const bipoly& p, unsigned a, unsigned b)
{
    if (a == 0 && b == 0) {
        throw error(error_kind::zero_monomial, "bp_mul_geom(0, 0) has no inverse");
    }
    const caps c = p.bounds();
    bipoly::term_map q = p.terms();
    // Keys increase lexicographically along every chain e, e+(a,b), ...; entries
    // inserted ahead of the iterator are visited later by std::map iteration.
    for (auto it = q.begin(); it != q.end();) {
        const unsigned i = it->first.x + a;
        const unsigned j = it->first.y + b;
        if (c.contains(i, j) && it->second != 0) {
            q[bidegree{i, j}] += it->second;
        }
        ++it;
    }
    bipoly out(c);
    for (const auto& [k, v] : q) {
        out.add_term(k.x, k.y, v);
    }
    return out;
}

// Same truncation rule on new caps; widening keeps every term.
inline bipoly recap(const bipoly& p, caps c)
{
    bipoly out(c);
    for (const auto& [k, v] : p.terms()) {
        out.add_term(k.x, k.y, v);
    }
    return out;
}

inline big_int coeff(const bipoly& p, unsigned i, unsigned j) { return p.coeff(i, j); }

inline bipoly operator+(const bipoly& a, const bipoly& b) { return bp_add(a, b); }
inline bipoly operator-(const bipoly& a, const bipoly& b) { return bp_sub(a, b); }
inline bipoly operator-(const bipoly& a) { return bp_neg(a); }
inline bipoly operator*(const bipoly& a, const bipoly& b) { return bp_mul(a, b); }

/// Univariate polynomial in t with exact integer coefficients.
class unipoly {
public:
    using term_map = std::map<unsigned, big_int>;

    unipoly() = default;

    void add_term(unsigned k, const big_int& coef)
    {
        if (coef == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    big_int coeff(unsigned k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? big_int(0) : it->second;
    }

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    big_int evaluate(const big_int& t) const
    {
        big_int acc = 0;
        for (const auto& [k, v] : terms_) {
            acc += v * boost::multiprecision::pow(t, k);
        }
        return acc;
    }

    friend bool operator==(const unipoly&, const unipoly&) = default;

private:
    term_map terms_;
};

inline unipoly uni_add(const unipoly& a, const unipoly& b)
{
    unipoly out = a;
    for (const auto& [k, v] : b.terms()) {
        out.add_term(k, v);
    }
    return out;
}

inline unipoly uni_mul(const unipoly& a, const unipoly& b)
{
    unipoly out;
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            out.add_term(ka + kb, va * vb);
        }
    }
    return out;
}

/// Sets x = y = t.
inline unipoly specialize_diag(const bipoly& p)
{
    unipoly out;
    for (const auto& [k, v] : p.terms()) {
        out.add_term(k.x + k.y, v);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const bipoly& p)
{
    if (p.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto& [k, v] : p.terms()) {
        if (!first) {
            os << (v < 0 ? " - " : " + ");
        } else if (v < 0) {
            os << '-';
        }
        first = false;
        const big_int mag = v < 0 ? big_int(-v) : v;
        const bool bare = k.x == 0 && k.y == 0;
        if (mag != 1 || bare) {
            os << mag;
        }
        if (k.x > 0) {
            os << 'x';
            if (k.x > 1) {
                os << '^' << k.x;
            }
        }
        if (k.y > 0) {
            os << 'y';
            if (k.y > 1) {
                os << '^' << k.y;
            }
        }
    }
    return os;
}

inline std::ostream& operator<<(std::ostream& os, const unipoly& p)
{
    if (p.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto& [k, v] : p.terms()) {
        if (!first) {
            os << (v < 0 ? " - " : " + ");
        } else if (v < 0) {
            os << '-';
        }
        first = false;
        const big_int mag = v < 0 ? big_int(-v) : v;
        if (mag != 1 || k == 0) {
            os << mag;
        }
        if (k > 0) {
            os << 't';
            if (k > 1) {
                os << '^' << k;
            }
        }
    }
    return os;
}

} // namespace mhodge
