#pragma once

/**
 * @file verify.hpp
 * @brief Named invariant suites run over a (rank, genus) grid.
 */

#include <cstdint>
#include <map>
#include <tuple>
#include <numeric>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <mhodge/bounds.hpp>
#include <mhodge/chern.hpp>
#include <mhodge/hodge.hpp>
#include <mhodge/record.hpp>
#include <mhodge/sod.hpp>

namespace mhodge {

struct grid {
    unsigned r_min = 2;
    unsigned r_max = 4;
    std::int64_t g_min = 2;
    std::int64_t g_max = 6;

    friend bool operator==(const grid&, const grid&) = default;
};

/// Parses "r=2..4,g=2..6"; either axis may be a single value ("r=3").
inline grid parse_grid(const std::string& text, grid base = {})
{
    static const std::regex item(R"(\s*([rg])\s*=\s*(\d+)(?:\.\.(\d+))?\s*)");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::smatch m;
        if (!std::regex_match(part, m, item)) {
            throw error(error_kind::invalid_argument, "bad grid component '" + part + "'");
        }
        const long lo = std::stol(m[2]);
        const long hi = m[3].matched ? std::stol(m[3]) : lo;
        if (lo > hi) {
            throw error(error_kind::invalid_argument, "empty grid range '" + part + "'");
        }
        if (m[1] == "r") {
            if (lo < 1) {
                throw error(error_kind::invalid_argument, "rank range must start at 1 or above");
            }
            base.r_min = static_cast<unsigned>(lo);
            base.r_max = static_cast<unsigned>(hi);
        } else {
            if (lo < 2) {
                throw error(error_kind::genus_too_small, "genus range must start at 2 or above");
            }
            base.g_min = lo;
            base.g_max = hi;
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return base;
}

/// Degrees 1 <= d <= max(1, r-1) coprime to r.
inline std::vector<std::int64_t> coprime_degrees(unsigned r)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= std::max<std::int64_t>(1, r - 1); ++d) {
        if (std::gcd(static_cast<std::int64_t>(r), d) == 1) {
            out.push_back(d);
        }
    }
    return out;
}

struct verify_failure {
    std::string suite;
    unsigned r = 0;
    std::int64_t d = 0;
    std::int64_t g = 0;
    std::string check;
    std::string detail;
};

struct verify_report {
    std::size_t checks = 0;
    std::vector<verify_failure> failures;

    bool passed() const { return failures.empty(); }

    void record(bool ok, verify_failure f)
    {
        ++checks;
        if (!ok) {
            failures.push_back(std::move(f));
        }
    }
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"lemma-hodge", "symmetry", "level", "chern", "sod"};
    return names;
}

namespace detail {

// Diamonds are shared between suites within one run.
class diamond_memo {
public:
    const hodge_diamond& get(const moduli_params& mp)
    {
        const auto key = std::make_tuple(mp.rank, mp.degree, mp.genus, mp.fixed_determinant);
        auto it = memo_.find(key);
        if (it == memo_.end()) {
            it = memo_.emplace(key, diamond(mp)).first;
        }
        return it->second;
    }

private:
    std::map<std::tuple<unsigned, std::int64_t, std::int64_t, bool>, hodge_diamond> memo_;
};

inline void run_lemma_suite(const grid& gr, verify_report& rep)
{
    for (unsigned r = std::max(2U, gr.r_min); r <= gr.r_max; ++r) {
        for (auto g = gr.g_min; g <= gr.g_max; ++g) {
            for (const auto& c : lemma_hodge_numbers_check(r, g).clauses) {
                rep.record(c.pass, {"lemma-hodge", r, 1, g, c.clause, c.detail});
            }
        }
    }
}

inline void run_symmetry_suite(const grid& gr, diamond_memo& memo, verify_report& rep)
{
    for (unsigned r = gr.r_min; r <= gr.r_max; ++r) {
        for (auto d : coprime_degrees(r)) {
            for (auto g = gr.g_min; g <= gr.g_max; ++g) {
                const moduli_params mp{r, d, g, true};
                try {
                    const auto& dm = memo.get(mp);
                    rep.record(true, {});
                    const unsigned n = dm.dimension();
                    bool no_forms = true;
                    for (unsigned p = 1; p <= n; ++p) {
                        no_forms = no_forms && dm.at(p, 0) == 0;
                    }
                    rep.record(no_forms, {"symmetry", r, d, g, "h^{p,0} = 0 for p >= 1", ""});
                    rep.record(dm.at(n, n) == 1, {"symmetry", r, d, g, "h^{N,N} = 1", dm.at(n, n).str()});
                    const auto hp = dm.to_polynomial();
                    rep.record(hp.max_x_degree() == n && hp.max_y_degree() == n,
                               {"symmetry", r, d, g, "max x- and y-degree equal N", ""});
                } catch (const error& e) {
                    rep.record(false, {"symmetry", r, d, g, std::string(to_string(e.kind())), e.what()});
                }
            }
        }
    }
}

inline void run_level_suite(const grid& gr, diamond_memo& memo, verify_report& rep)
{
    for (unsigned r = gr.r_min; r <= gr.r_max; ++r) {
        for (auto d : coprime_degrees(r)) {
            for (auto g = gr.g_min; g <= gr.g_max; ++g) {
                const auto lv = level_check(memo.get(moduli_params{r, d, g, true}));
                std::string detail;
                if (!lv.pass) {
                    const auto& v = lv.violations.front();
                    detail = "h^{" + std::to_string(v.p) + "," + std::to_string(v.q) + "} = " + v.value.str();
                }
                rep.record(lv.pass, {"level", r, d, g, "|p-q| <= floor((p+q)/3)", detail});
            }
        }
    }
}

inline void run_chern_suite(const grid& gr, verify_report& rep)
{
    for (unsigned r = gr.r_min; r <= gr.r_max; ++r) {
        for (auto d : coprime_degrees(r)) {
            for (auto g = gr.g_min; g <= gr.g_max; ++g) {
                const auto ri = static_cast<std::int64_t>(r);
                try {
                    const auto lemma = verify_lemma_equality(ri, d, g);
                    rep.record(lemma.check, {"chern", r, d, g, "r p_*(N_2(W)) = -2 theta + 2 d c_1(W_x)",
                                             to_string(lemma.nu_f)});
                    const auto det = det_cohomology_exponent(ri, d, g);
                    rep.record(det.check, {"chern", r, d, g, "exponent = (1 - l d)/r + l (1 - g)",
                                           det.exponent.str()});
                    // for r = 1 every l is a solution and the minimal one is 0
                    if (d == 1 && r >= 2) {
                        rep.record(det.exponent == rational(1 - g),
                                   {"chern", r, d, g, "exponent = 1 - g for d = 1", det.exponent.str()});
                    }
                } catch (const error& e) {
                    rep.record(false, {"chern", r, d, g, std::string(to_string(e.kind())), e.what()});
                }
            }
        }
    }
}

inline std::string columns_text(const hh_columns& cols)
{
    std::string s = "{";
    for (const auto& [k, v] : cols) {
        s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ": " + v.str();
    }
    return s + "}";
}

inline void run_sod_suite(const grid& gr, verify_report& rep)
{
    for (unsigned r = std::max(2U, gr.r_min); r <= gr.r_max; ++r) {
        const auto g0 = min_genus_ff(r);
        for (auto g = std::max(gr.g_min, g0); g <= gr.g_max; ++g) {
            const auto res = sod_residual(r, 1, g);
            rep.record(res.nonnegative(), {"sod", r, 1, g, "residual columns nonnegative for g >= g0",
                                           columns_text(res.residual)});
        }
    }
    // r = 2, g = 2 admits no such decomposition.
    const auto small = sod_residual(2, 1, 2);
    rep.record(!small.nonnegative(), {"sod", 2, 1, 2, "residual has a negative column", columns_text(small.residual)});
}

} // namespace detail

/// Runs one suite (or "all"); an unknown name is an input error.
inline verify_report run_suite(const std::string& suite, const std::optional<grid>& user_grid = std::nullopt)
{
    const bool all = suite == "all";
    bool known = all;
    for (const auto& n : suite_names()) {
        known = known || n == suite;
    }
    if (!known) {
        throw error(error_kind::invalid_argument, "unknown suite '" + suite + "'");
    }
    const grid gr = user_grid.value_or(grid{});
    const grid chern_grid = user_grid.value_or(grid{1, 6, 2, 6});

    verify_report rep;
    detail::diamond_memo memo;
    if (all || suite == "lemma-hodge") {
        detail::run_lemma_suite(gr, rep);
    }
    if (all || suite == "symmetry") {
        detail::run_symmetry_suite(gr, memo, rep);
    }
    if (all || suite == "level") {
        detail::run_level_suite(gr, memo, rep);
    }
    if (all || suite == "chern") {
        detail::run_chern_suite(chern_grid, rep);
    }
    if (all || suite == "sod") {
        detail::run_sod_suite(gr, rep);
    }
    return rep;
}

inline json to_json(const verify_report& rep, const std::string& suite)
{
    json j;
    j["suite"] = suite;
    j["passed"] = rep.passed();
    j["checks"] = rep.checks;
    j["failures"] = json::array();
    for (const auto& f : rep.failures) {
        j["failures"].push_back(
            {{"suite", f.suite}, {"rank", f.r}, {"degree", f.d}, {"genus", f.g}, {"check", f.check}, {"detail", f.detail}});
    }
    return j;
}

} // namespace mhodge
