#pragma once

/**
 * @file bounds.hpp
 * @brief Dimensions, genus thresholds and vanishing windows for M_C(r, L).
 *
 * Every "least integer such that" threshold is found by an upward scan with
 * exact integer arithmetic, never by solving and rounding.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <mhodge/error.hpp>

namespace mhodge {

namespace detail {

inline void require(bool ok, error_kind kind, const std::string& what)
{
    if (!ok) {
        throw error(kind, what);
    }
}

inline std::int64_t binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

inline std::int64_t genus_lhs(std::int64_t r, std::int64_t g) { return 2 * r * g - 2 * (r + g); }

} // namespace detail

/// Degrees [lower, upper] in which cohomology is asserted to vanish; nullopt is infinite.
struct vanishing_window {
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;
    std::string meaning;

    bool contains(std::int64_t i) const
    {
        return (!lower || i >= *lower) && (!upper || i <= *upper);
    }
};

inline std::int64_t moduli_dim(std::int64_t r, std::int64_t g, bool fixed)
{
    detail::require(r >= 1 && g >= 2, error_kind::invalid_argument, "moduli_dim: need r >= 1, g >= 2");
    return fixed ? (r * r - 1) * (g - 1) : r * r * (g - 1) + 1;
}

/// Minimal l >= 0 with l d = 1 mod r.
inline std::int64_t normalization_ell(std::int64_t r, std::int64_t d)
{
    detail::require(r >= 1, error_kind::invalid_argument, "normalization_ell: rank must be positive");
    if (std::gcd(r, d) != 1) {
        throw error(error_kind::non_coprime,
                    "normalization_ell: gcd(" + std::to_string(r) + ", " + std::to_string(d) + ") != 1");
    }
    for (std::int64_t ell = 0;; ++ell) {
        if ((((ell * d - 1) % r) + r) % r == 0) {
            return ell;
        }
    }
}

/// Least g0 >= 2 with 2 r g0 - 2 (r + g0) >= r^2 - 1.
inline std::int64_t min_genus_ff(std::int64_t r)
{
    detail::require(r >= 2, error_kind::invalid_argument, "min_genus_ff: rank must be at least 2");
    std::int64_t g = 2;
    while (detail::genus_lhs(r, g) < r * r - 1) {
        ++g;
    }
    return g;
}

/// Least positive g_j with 2 r g_j - 2 (r + g_j) >= binom(r, j) - 1.
inline std::int64_t min_genus_wedge(std::int64_t r, std::int64_t j)
{
    if (j < 1 || j > r - 1) {
        throw error(error_kind::bad_index, "min_genus_wedge: need 1 <= j <= r-1, got j="
                                               + std::to_string(j) + ", r=" + std::to_string(r));
    }
    const std::int64_t target = detail::binom(r, j) - 1;
    std::int64_t g = 1;
    while (detail::genus_lhs(r, g) < target) {
        ++g;
    }
    return g;
}

/// Le Potier: twisted cohomology of an ample bundle of this rank vanishes for i >= rank.
inline vanishing_window lepotier_window(std::int64_t bundle_rank)
{
    detail::require(bundle_rank >= 1, error_kind::invalid_argument, "lepotier_window: rank must be positive");
    return {bundle_rank, std::nullopt, "H^i = 0 (Le Potier, ample bundle of rank " + std::to_string(bundle_rank) + ")"};
}

/// Sommese for the (r-1)-ample bundle of rank r^2: vanishing for i >= r^2 + (r-1).
inline vanishing_window sommese_window(std::int64_t r)
{
    detail::require(r >= 2, error_kind::invalid_argument, "sommese_window: rank must be at least 2");
    return {r * r + r - 1, std::nullopt, "H^i = 0 (Sommese, (r-1)-ample bundle of rank r^2)"};
}

inline std::int64_t serre_dual_degree(std::int64_t r, std::int64_t g, std::int64_t i)
{
    return (r * r - 1) * (g - 1) - i;
}

/// The literal inequality (r^2-1)(g-1) >= 2(r^2+r-1).
inline bool full_vanishing_condition(std::int64_t r, std::int64_t g)
{
    detail::require(r >= 2 && g >= 2, error_kind::invalid_argument, "full_vanishing_condition: need r >= 2, g >= 2");
    return (r * r - 1) * (g - 1) >= 2 * (r * r + r - 1);
}

/// max over c = 1..floor(a/2) of r0^2 (c^2 + (a-c)^2)(g-1) + 2 - g, r0 = r / a.
inline std::int64_t ss_locus_dim_by_max(std::int64_t r, std::int64_t a, std::int64_t g)
{
    const std::int64_t r0 = r / a;
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t c = 1; c <= a / 2; ++c) {
        best = std::max(best, r0 * r0 * (c * c + (a - c) * (a - c)) * (g - 1) + 2 - g);
    }
    return best;
}

/// Dimension of the strictly semistable locus: (2 r0^2 + r^2 - 2 r r0 - 1)(g-1) + 1.
inline std::int64_t ss_locus_dim(std::int64_t r, std::int64_t a, std::int64_t g)
{
    if (a < 2 || r % a != 0) {
        throw error(error_kind::bad_gcd, "ss_locus_dim: need a >= 2 dividing r, got a="
                                             + std::to_string(a) + ", r=" + std::to_string(r));
    }
    const std::int64_t r0 = r / a;
    const std::int64_t closed = (2 * r0 * r0 + r * r - 2 * r * r0 - 1) * (g - 1) + 1;
    const std::int64_t by_max = ss_locus_dim_by_max(r, a, g);
    if (closed != by_max) {
        std::ostringstream os;
        os << "ss_locus_dim: closed form " << closed << " != maximum over splittings " << by_max;
        throw error(error_kind::internal_inconsistency, os.str());
    }
    return closed;
}

/// dim P(W_x) = (r^2-1)(g-1) + (r-1).
inline std::int64_t hecke_total_dim(std::int64_t r, std::int64_t g) { return (r * r - 1) * (g - 1) + (r - 1); }

/// Codimension of the preimage of the strictly semistable locus under the Hecke map.
inline std::int64_t hecke_codim_bound(std::int64_t r, std::int64_t g)
{
    detail::require(r >= 2 && g >= 2, error_kind::invalid_argument, "hecke_codim_bound: need r >= 2, g >= 2");
    const std::int64_t closed = 2 * (r - 1) * (g - 1) - 1;
    // fibres of the Hecke map have dimension at most r - 1
    const std::int64_t chain = hecke_total_dim(r, g) - (ss_locus_dim(r, r, g) + (r - 1));
    if (closed != chain) {
        std::ostringstream os;
        os << "hecke_codim_bound: closed form " << closed << " != dimension count " << chain;
        throw error(error_kind::internal_inconsistency, os.str());
    }
    return closed;
}

/// 2rg - 2(r+g); the restriction map into the stable locus is injective below this degree.
inline std::int64_t injectivity_bound(std::int64_t r, std::int64_t g)
{
    detail::require(r >= 2 && g >= 2, error_kind::invalid_argument, "injectivity_bound: need r >= 2, g >= 2");
    const std::int64_t value = detail::genus_lhs(r, g);
    if (value != hecke_codim_bound(r, g) - 1) {
        throw error(error_kind::internal_inconsistency, "injectivity_bound != codimension bound - 1");
    }
    // g0 must also be the least genus clearing r^2 - 1 through the codimension route.
    std::int64_t least = 2;
    while (hecke_codim_bound(r, least) - 1 < r * r - 1) {
        ++least;
    }
    if (least != min_genus_ff(r)) {
        throw error(error_kind::internal_inconsistency, "min_genus_ff disagrees with injectivity scan");
    }
    return value;
}

inline bool picard_slope_condition(std::int64_t n, std::int64_t e, std::int64_t r, std::int64_t g)
{
    return r * e + n > r * n * (2 * g - 2);
}

/// Rank r e + n + r n (1 - g) of the generalised Picard bundle.
inline std::int64_t picard_bundle_rank(std::int64_t n, std::int64_t e, std::int64_t r, std::int64_t g)
{
    detail::require(n >= 1 && r >= 2 && g >= 2, error_kind::invalid_argument, "picard_bundle_rank: need n >= 1, r >= 2, g >= 2");
    if (!picard_slope_condition(n, e, r, g)) {
        std::ostringstream os;
        os << "r e + n = " << r * e + n << " <= r n (2g-2) = " << r * n * (2 * g - 2);
        throw error(error_kind::slope_condition_violated, os.str());
    }
    return r * e + n + r * n * (1 - g);
}

inline std::int64_t deformation_dim(std::int64_t n, std::int64_t g) { return n * n * (g - 1) + 1; }

struct bounds_report {
    std::int64_t r = 0;
    std::int64_t g = 0;
    std::int64_t d = 1;
    std::int64_t ell = 0;
    std::int64_t g0 = 0;
    std::map<std::int64_t, std::int64_t> gj;
    std::int64_t lepotier_from = 0;
    std::int64_t sommese_from = 0;
    std::int64_t codim_bound = 0;
    std::int64_t injectivity_bound = 0;
    std::int64_t dim_fixed = 0;
    std::int64_t dim_varying = 0;
    std::int64_t dimK = 0;
    std::int64_t dimQ = 0;
    bool full_vanishing = false;
    // Cases where the exact inequality and the published prose claim disagree.
    std::vector<std::string> discrepancies;
};

inline bounds_report make_bounds_report(std::int64_t r, std::int64_t g, std::int64_t d = 1)
{
    detail::require(r >= 2 && g >= 2, error_kind::invalid_argument, "bounds: need r >= 2, g >= 2");
    bounds_report rep;
    rep.r = r;
    rep.g = g;
    rep.d = d;
    rep.ell = normalization_ell(r, d);
    rep.g0 = min_genus_ff(r);
    for (std::int64_t j = 1; j <= r - 1; ++j) {
        rep.gj[j] = min_genus_wedge(r, j);
    }
    rep.lepotier_from = *lepotier_window(r * r).lower;
    rep.sommese_from = *sommese_window(r).lower;
    rep.codim_bound = hecke_codim_bound(r, g);
    rep.injectivity_bound = injectivity_bound(r, g);
    rep.dim_fixed = moduli_dim(r, g, true);
    rep.dim_varying = moduli_dim(r, g, false);
    // Hecke situation: degree 1 - d = 0 is divisible by r, so a = r and r0 = 1.
    rep.dimK = ss_locus_dim(r, r, g);
    rep.dimQ = hecke_total_dim(r, g);
    rep.full_vanishing = full_vanishing_condition(r, g);
    if (g >= 4 && !rep.full_vanishing) {
        std::ostringstream os;
        os << "(r^2-1)(g-1) = " << (r * r - 1) * (g - 1) << " < 2(r^2+r-1) = " << 2 * (r * r + r - 1)
           << " at r=" << r << ", g=" << g << ", contradicting the claim that the inequality holds for all g >= 4";
        rep.discrepancies.push_back(os.str());
    }
    return rep;
}

} // namespace mhodge
