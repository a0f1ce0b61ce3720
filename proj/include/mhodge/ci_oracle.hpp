#pragma once

/**
 * @file ci_oracle.hpp
 * @brief Hodge numbers of smooth complete intersections in projective space.
 *
 * Independent of the composition-sum evaluator: chi(X, Omega^p_X) is assembled
 * from Euler characteristics of twisted sheaves on P^n (Euler sequence for
 * Omega^j, Koszul resolution for restriction to X, conormal sequence for
 * Omega^p_X). Lefschetz fixes every h^{p,q} off the middle row to delta_{pq},
 * so the middle row follows from the alternating sums.
 */

#include <cstdint>
#include <functional>
#include <vector>

#include <mhodge/error.hpp>
#include <mhodge/hodge.hpp>
#include <mhodge/series.hpp>

namespace mhodge {

namespace detail {

inline big_int binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    big_int out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

// chi(P^n, O(t)) = (t+1)(t+2)...(t+n) / n!, valid for every integer t.
inline big_int chi_projective(unsigned n, std::int64_t t)
{
    big_int num = 1;
    big_int den = 1;
    for (unsigned k = 1; k <= n; ++k) {
        num *= t + k;
        den *= k;
    }
    return num / den;
}

// chi(P^n, Omega^j(t)) from [Omega^j] = sum_i (-1)^i [wedge^{j-i} O(-1)^{n+1}].
inline big_int chi_projective_forms(unsigned n, unsigned j, std::int64_t t)
{
    big_int acc = 0;
    for (unsigned i = 0; i <= j; ++i) {
        const unsigned m = j - i;
        big_int term = binomial(n + 1, m) * chi_projective(n, t - m);
        acc += (i % 2 == 0) ? term : big_int(-term);
    }
    return acc;
}

// chi(X, Omega^j_P(t)|_X) by the Koszul resolution of O_X.
inline big_int chi_restricted_forms(unsigned n, const std::vector<unsigned>& degrees, unsigned j,
                                    std::int64_t t)
{
    big_int acc = 0;
    const std::size_t c = degrees.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
        std::int64_t shift = 0;
        int parity = 0;
        for (std::size_t i = 0; i < c; ++i) {
            if (mask & (std::size_t{1} << i)) {
                shift += degrees[i];
                ++parity;
            }
        }
        big_int term = chi_projective_forms(n, j, t - shift);
        acc += (parity % 2 == 0) ? term : big_int(-term);
    }
    return acc;
}

// Calls f(total twist) once per monomial of Sym^k(O(-d_1) + ... + O(-d_c)).
inline void for_each_sym_twist(const std::vector<unsigned>& degrees, unsigned k,
                               const std::function<void(std::int64_t)>& f)
{
    std::function<void(std::size_t, unsigned, std::int64_t)> rec =
        [&](std::size_t idx, unsigned left, std::int64_t twist) {
            if (idx + 1 == degrees.size()) {
                f(twist + std::int64_t{left} * degrees[idx]);
                return;
            }
            for (unsigned m = 0; m <= left; ++m) {
                rec(idx + 1, left - m, twist + std::int64_t{m} * degrees[idx]);
            }
        };
    if (degrees.empty()) {
        if (k == 0) {
            f(0);
        }
        return;
    }
    rec(0, k, 0);
}

} // namespace detail

/// chi(X, Omega^p_X) for the complete intersection of the given degrees in P^n.
inline big_int ci_chi_forms(const std::vector<unsigned>& degrees, unsigned ambient_dim, unsigned p)
{
    // lambda_t(Omega_P|X) = lambda_t(N^*) lambda_t(Omega_X) and
    // lambda_t(N^*)^{-1} = sum_k (-t)^k Sym^k N^*.
    big_int acc = 0;
    for (unsigned k = 0; k <= p; ++k) {
        detail::for_each_sym_twist(degrees, k, [&](std::int64_t twist) {
            big_int term = detail::chi_restricted_forms(ambient_dim, degrees, p - k, -twist);
            acc += (k % 2 == 0) ? term : big_int(-term);
        });
    }
    return acc;
}

inline hodge_diamond ci_hodge_oracle(const std::vector<unsigned>& degrees, unsigned ambient_dim)
{
    if (ambient_dim < 1 || degrees.size() >= ambient_dim) {
        throw error(error_kind::unsupported_dimension,
                    "complete intersection must have dimension at least 1");
    }
    for (unsigned d : degrees) {
        if (d < 1) {
            throw error(error_kind::unsupported_dimension, "hypersurface degrees must be positive");
        }
    }
    const auto m = static_cast<unsigned>(ambient_dim - degrees.size());
    std::vector<big_int> h(std::size_t{m + 1} * (m + 1));
    auto at = [&](unsigned p, unsigned q) -> big_int& { return h[std::size_t{p} * (m + 1) + q]; };
    for (unsigned p = 0; p <= m; ++p) {
        for (unsigned q = 0; q <= m; ++q) {
            if (p + q != m) {
                at(p, q) = p == q ? 1 : 0;
            }
        }
    }
    for (unsigned p = 0; p <= m; ++p) {
        const unsigned q = m - p;
        // chi(Omega^p) = sum_q (-1)^q h^{p,q}; only the middle entry is unknown.
        big_int rest = 0;
        if (2 * p != m) {
            // the one off-middle nonzero entry in row p is h^{p,p} = 1
            rest = (p % 2 == 0) ? 1 : -1;
        }
        big_int middle = ci_chi_forms(degrees, ambient_dim, p) - rest;
        at(p, q) = (q % 2 == 0) ? middle : big_int(-middle);
    }
    return hodge_diamond(m, std::move(h));
}

} // namespace mhodge
