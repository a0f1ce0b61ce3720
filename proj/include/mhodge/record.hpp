#pragma once

/**
 * @file record.hpp
 * @brief Result records, their JSON form, text emitters and the on-disk cache.
 *
 * The canonical document is JSON with fixed field names; coefficient values are
 * decimal strings so no integer width is lost. Terms are ordered
 * lexicographically in (p, q). Cache files hold exactly the canonical document.
 */

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include <mhodge/hodge.hpp>
#include <mhodge/series.hpp>
#include <mhodge/version.hpp>

namespace mhodge {

using json = nlohmann::ordered_json;

struct result_record {
    moduli_params params;
    std::string version = MHODGE_VERSION;
    unsigned dimension = 0;
    bipoly polynomial;
    std::map<std::string, bool> checks;
    // Wall-clock time of the evaluation; never part of the canonical document.
    std::optional<double> elapsed_ms;

    friend bool operator==(const result_record&, const result_record&) = default;
};

inline json coefficients_json(const bipoly& p)
{
    json arr = json::array();
    for (const auto& [k, v] : p.terms()) {
        arr.push_back(json::array({k.x, k.y, v.str()}));
    }
    return arr;
}

inline json to_json(const result_record& rec, bool with_timing = false)
{
    json j;
    j["version"] = rec.version;
    j["rank"] = rec.params.rank;
    j["degree"] = rec.params.degree;
    j["genus"] = rec.params.genus;
    j["fixed_determinant"] = rec.params.fixed_determinant;
    j["dimension"] = rec.dimension;
    j["coefficients"] = coefficients_json(rec.polynomial);
    j["checks"] = json::object();
    for (const auto& [name, ok] : rec.checks) {
        j["checks"][name] = ok;
    }
    if (with_timing && rec.elapsed_ms) {
        j["elapsed_ms"] = *rec.elapsed_ms;
    }
    return j;
}

inline result_record record_from_json(const json& j)
{
    result_record rec;
    rec.version = j.at("version").get<std::string>();
    rec.params.rank = j.at("rank").get<unsigned>();
    rec.params.degree = j.at("degree").get<std::int64_t>();
    rec.params.genus = j.at("genus").get<std::int64_t>();
    rec.params.fixed_determinant = j.at("fixed_determinant").get<bool>();
    rec.dimension = j.at("dimension").get<unsigned>();
    rec.polynomial = bipoly(caps{rec.dimension, rec.dimension});
    for (const auto& term : j.at("coefficients")) {
        const auto p = term.at(0).get<unsigned>();
        const auto q = term.at(1).get<unsigned>();
        if (p > rec.dimension || q > rec.dimension) {
            throw error(error_kind::invalid_argument, "coefficient outside the dimension");
        }
        rec.polynomial.add_term(p, q, big_int(term.at(2).get<std::string>()));
    }
    if (j.contains("checks")) {
        for (const auto& [name, ok] : j.at("checks").items()) {
            rec.checks[name] = ok.get<bool>();
        }
    }
    if (j.contains("elapsed_ms")) {
        rec.elapsed_ms = j.at("elapsed_ms").get<double>();
    }
    return rec;
}

inline std::string emit_json(const result_record& rec, bool with_timing = false)
{
    return to_json(rec, with_timing).dump(2) + "\n";
}

inline result_record parse_json(const std::string& text) { return record_from_json(json::parse(text)); }

/// Evaluates HP for the parameters and runs the diamond invariant checks.
inline result_record compute_record(const moduli_params& mp)
{
    const auto start = std::chrono::steady_clock::now();
    result_record rec;
    rec.params = mp;
    rec.dimension = mp.dimension();
    rec.polynomial = hodge_poincare(mp);
    // construction validates symmetry, duality, h^{0,0} = 1 and nonnegativity
    const auto dm = hodge_diamond::from_polynomial(rec.polynomial, rec.dimension);
    rec.checks["hodge_symmetry"] = true;
    rec.checks["serre_duality"] = true;
    if (mp.fixed_determinant) {
        // the Jacobian factor carries h^{1,0} = g, so the bound is for fixed determinant only
        rec.checks["level_bound"] = level_check(dm).pass;
        bool no_holomorphic_forms = true;
        for (unsigned p = 1; p <= rec.dimension; ++p) {
            no_holomorphic_forms = no_holomorphic_forms && dm.at(p, 0) == 0;
        }
        rec.checks["no_holomorphic_forms"] = no_holomorphic_forms;
    }
    rec.checks["top_coefficient_one"] = dm.at(rec.dimension, rec.dimension) == 1;
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

/// (p, q, h^{p,q}) rows including zero entries, lexicographic in (p, q).
inline std::string emit_csv(const hodge_diamond& dm)
{
    std::ostringstream os;
    os << "p,q,h\n";
    for (unsigned p = 0; p <= dm.dimension(); ++p) {
        for (unsigned q = 0; q <= dm.dimension(); ++q) {
            os << p << ',' << q << ',' << dm.at(p, q) << '\n';
        }
    }
    return os.str();
}

/// Hodge diamond laid out as a LaTeX tabular: row i holds h^{p,q} with p + q = 2n - i.
inline std::string emit_latex(const hodge_diamond& dm)
{
    const unsigned n = dm.dimension();
    const unsigned width = 2 * n + 1;
    std::ostringstream os;
    os << "\\begin{tabular}{" << std::string(width, 'c') << "}\n";
    for (unsigned row = 0; row <= 2 * n; ++row) {
        const unsigned total = 2 * n - row;
        std::vector<std::string> cells(width);
        for (unsigned p = 0; p <= n; ++p) {
            if (total < p || total - p > n) {
                continue;
            }
            const unsigned q = total - p;
            // column n + (q - p) centres the diamond
            const int col = static_cast<int>(n) + static_cast<int>(q) - static_cast<int>(p);
            cells[static_cast<std::size_t>(col)] = dm.at(p, q).str();
        }
        for (unsigned c = 0; c < width; ++c) {
            os << (c ? " & " : "  ") << cells[c];
        }
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

/// Cache directory: $MHODGE_CACHE, else $XDG_CACHE_HOME/mhodge, else ~/.cache/mhodge.
inline std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("MHODGE_CACHE"); env && *env) {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "mhodge";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "mhodge";
    }
    return std::filesystem::temp_directory_path() / "mhodge-cache";
}

class result_cache {
public:
    explicit result_cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::filesystem::path path_for(const moduli_params& mp, const std::string& version = MHODGE_VERSION) const
    {
        std::ostringstream name;
        name << "hp-v" << version << "-r" << mp.rank << "-d" << mp.degree << "-g" << mp.genus << '-'
             << (mp.fixed_determinant ? "fixed" : "varying") << ".json";
        return dir_ / name.str();
    }

    /// A missing, unreadable or mismatched entry is a miss.
    std::optional<result_record> load(const moduli_params& mp) const
    {
        std::ifstream in(path_for(mp), std::ios::binary);
        if (!in) {
            return std::nullopt;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            auto rec = parse_json(buf.str());
            if (rec.params == mp && rec.version == MHODGE_VERSION) {
                return rec;
            }
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }

    /// Write to a temporary file in the same directory, then rename over the entry.
    void store(const result_record& rec) const
    {
        std::filesystem::create_directories(dir_);
        const auto target = path_for(rec.params, rec.version);
        std::random_device rd;
        const auto tmp = target.string() + ".tmp" + std::to_string(rd());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw std::runtime_error("cannot write cache entry " + tmp);
            }
            out << emit_json(rec);
        }
        std::filesystem::rename(tmp, target);
    }

private:
    std::filesystem::path dir_;
};

} // namespace mhodge
