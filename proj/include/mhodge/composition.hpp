#pragma once

/**
 * @file composition.hpp
 * @brief Ordered compositions of the rank and the twist exponent of each
 * summand in the closed Hodge-Poincare formula.
 */

#include <cstdint>
#include <numeric>
#include <sstream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <mhodge/error.hpp>

namespace mhodge {

/// Exact rational in lowest terms with a positive denominator.
using rational = boost::multiprecision::cpp_rational;

inline boost::multiprecision::cpp_int floor_div(const boost::multiprecision::cpp_int& n,
                                                const boost::multiprecision::cpp_int& d)
{
    boost::multiprecision::cpp_int q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) {
        q -= 1;
    }
    return q;
}

inline boost::multiprecision::cpp_int floor(const rational& a)
{
    return floor_div(boost::multiprecision::numerator(a), boost::multiprecision::denominator(a));
}

/// a - floor(a), always in [0, 1).
inline rational frac_part(const rational& a) { return a - rational(floor(a)); }

/// Ordered tuple of positive parts.
struct composition {
    std::vector<unsigned> parts;

    unsigned total() const { return std::accumulate(parts.begin(), parts.end(), 0U); }
    std::size_t length() const noexcept { return parts.size(); }

    friend bool operator==(const composition&, const composition&) = default;
    friend auto operator<=>(const composition&, const composition&) = default;
};

namespace detail {

inline void append_compositions(unsigned remaining, std::vector<unsigned>& prefix,
                                std::vector<composition>& out)
{
    if (remaining == 0) {
        out.push_back(composition{prefix});
        return;
    }
    for (unsigned first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        append_compositions(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All 2^(r-1) compositions of r in lexicographic order.
inline std::vector<composition> compositions(unsigned r)
{
    if (r == 0) {
        throw error(error_kind::invalid_argument, "compositions: rank must be positive");
    }
    std::vector<composition> out;
    out.reserve(std::size_t{1} << (r - 1));
    std::vector<unsigned> prefix;
    detail::append_compositions(r, prefix, out);
    return out;
}

/**
 * Exponent E of the (xy)^E factor attached to a composition (r_1, ..., r_l) of r:
 *
 *   E = sum_{i<j} r_i r_j (g-1) + sum_{i=1}^{l-1} (r_i + r_{i+1}) <-(r_1+...+r_i) d / r>
 *
 * where <.> is the fractional part. Individual terms can be fractional, so the
 * sum is accumulated exactly and only the total is required to be an integer.
 */
inline std::int64_t twist_exponent(const composition& c, std::int64_t g, std::int64_t d,
                                   unsigned r)
{
    if (c.total() != r || c.parts.empty()) {
        throw error(error_kind::invalid_argument, "twist_exponent: not a composition of the rank");
    }
    if (g < 2) {
        throw error(error_kind::genus_too_small, "twist_exponent: genus must be at least 2");
    }
    const auto& p = c.parts;
    rational e = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            e += rational(std::int64_t{p[i]} * p[j] * (g - 1));
        }
    }
    std::int64_t partial = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        partial += p[i];
        const rational shift(boost::multiprecision::cpp_int(-partial * d),
                             boost::multiprecision::cpp_int(r));
        e += rational(std::int64_t{p[i]} + p[i + 1]) * frac_part(shift);
    }
    if (boost::multiprecision::denominator(e) != 1 || e < 0) {
        std::ostringstream os;
        os << "exponent " << e << " for composition (";
        for (std::size_t i = 0; i < p.size(); ++i) {
            os << (i ? "," : "") << p[i];
        }
        os << "), g=" << g << ", d=" << d << ", r=" << r;
        throw error(error_kind::non_integer_exponent, os.str());
    }
    return static_cast<std::int64_t>(boost::multiprecision::numerator(e));
}

} // namespace mhodge
