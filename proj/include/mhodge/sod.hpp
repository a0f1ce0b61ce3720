#pragma once

/**
 * @file sod.hpp
 * @brief Hochschild-homology bookkeeping for the decomposition
 *
 *   D(M) = < Theta^dual, Phi(D(C)) (x) Theta^dual, O, Phi(D(C)), A >.
 *
 * Hochschild homology is additive over semiorthogonal decompositions and, by
 * HKR, HH_k(X) = sum_{q-p=k} h^{p,q}(X). The residual component A therefore has
 * HH_k(A) = HH_k(M) - 2 HH_k(C) - 2 [k = 0], and a negative entry rules the
 * decomposition out. Nothing categorical is verified here.
 */

#include <cstdint>
#include <map>
#include <vector>

#include <mhodge/hodge.hpp>
#include <mhodge/series.hpp>

namespace mhodge {

/// k -> HH_k; entries that vanish are not stored.
using hh_columns = std::map<int, big_int>;

namespace detail {

inline void add_column(hh_columns& cols, int k, const big_int& v)
{
    if (v == 0) {
        return;
    }
    auto [it, inserted] = cols.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) {
            cols.erase(it);
        }
    }
}

} // namespace detail

inline hh_columns hochschild_columns(const bipoly& hp)
{
    hh_columns cols;
    for (const auto& [k, v] : hp.terms()) {
        detail::add_column(cols, static_cast<int>(k.y) - static_cast<int>(k.x), v);
    }
    return cols;
}

inline hh_columns hochschild_columns(const hodge_diamond& dm)
{
    return hochschild_columns(dm.to_polynomial());
}

inline hh_columns curve_hh(std::int64_t g)
{
    if (g < 0) {
        throw error(error_kind::invalid_argument, "curve_hh: genus must be nonnegative");
    }
    hh_columns cols;
    detail::add_column(cols, -1, g);
    detail::add_column(cols, 0, 2);
    detail::add_column(cols, 1, g);
    return cols;
}

inline hh_columns hh_subtract(const hh_columns& a, const hh_columns& b, const big_int& times = 1)
{
    hh_columns out = a;
    for (const auto& [k, v] : b) {
        detail::add_column(out, k, -(v * times));
    }
    return out;
}

inline big_int hh_total(const hh_columns& cols)
{
    big_int t = 0;
    for (const auto& [k, v] : cols) {
        t += v;
    }
    return t;
}

struct sod_residual_report {
    moduli_params params;
    hh_columns moduli;
    hh_columns residual;
    std::vector<int> negative_columns;

    bool nonnegative() const { return negative_columns.empty(); }
};

/// HH of the residual category A: HH(M) - 2 HH(C) - 2 HH(point).
inline sod_residual_report sod_residual(std::int64_t r, std::int64_t d, std::int64_t g)
{
    sod_residual_report rep;
    rep.params = moduli_params{static_cast<unsigned>(r), d, g, true};
    rep.moduli = hochschild_columns(diamond(rep.params));
    rep.residual = hh_subtract(rep.moduli, curve_hh(g), 2);
    rep.residual = hh_subtract(rep.residual, hh_columns{{0, 1}}, 2);
    for (const auto& [k, v] : rep.residual) {
        if (v < 0) {
            rep.negative_columns.push_back(k);
        }
    }
    return rep;
}

/**
 * Hodge-Poincare polynomial of Sym^n C: the z^n coefficient of
 * (1+xz)^g (1+yz)^g / ((1-z)(1-xyz)), i.e. the sum of
 * C(g,a) C(g,b) x^{a+e} y^{b+e} over a + b + e + c = n.
 */
inline bipoly sym_curve_hp(std::int64_t g, unsigned n, caps c)
{
    if (g < 0) {
        throw error(error_kind::invalid_argument, "sym_curve_hp: genus must be nonnegative");
    }
    const auto gu = static_cast<unsigned>(g);
    std::vector<big_int> binom(gu + 1);
    binom[0] = 1;
    for (unsigned k = 1; k <= gu; ++k) {
        binom[k] = binom[k - 1] * (gu - k + 1) / k;
    }
    bipoly out(c);
    for (unsigned a = 0; a <= std::min(gu, n); ++a) {
        for (unsigned b = 0; a + b <= n && b <= gu; ++b) {
            for (unsigned e = 0; a + b + e <= n; ++e) {
                // the remaining n - a - b - e powers of z come from 1/(1-z)
                out.add_term(a + e, b + e, binom[a] * binom[b]);
            }
        }
    }
    return out;
}

struct sym_power_probe_report {
    sod_residual_report residual;
    std::vector<hh_columns> sym_powers; ///< HH(Sym^i C), i = 0..g-1
    hh_columns sym_total;
    hh_columns difference; ///< residual minus sym_total
};

/// For r = 2: residual columns next to the sum of HH(Sym^i C), i <= g - 1. Reports only.
inline sym_power_probe_report sym_power_probe(std::int64_t g)
{
    sym_power_probe_report rep;
    rep.residual = sod_residual(2, 1, g);
    for (std::int64_t i = 0; i <= g - 1; ++i) {
        const auto n = static_cast<unsigned>(i);
        const auto cols = hochschild_columns(sym_curve_hp(g, n, caps{n, n}));
        rep.sym_powers.push_back(cols);
        for (const auto& [k, v] : cols) {
            detail::add_column(rep.sym_total, k, v);
        }
    }
    rep.difference = hh_subtract(rep.residual.residual, rep.sym_total);
    return rep;
}

} // namespace mhodge
