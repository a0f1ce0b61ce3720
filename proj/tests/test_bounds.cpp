#include <cstdint>

#include <gtest/gtest.h>

#include <mhodge/bounds.hpp>

using namespace mhodge;

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k)
{
    std::int64_t c = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

// Least genus satisfying 2rg - 2(r+g) >= target, found from the solved form g >= (target + 2r)/(2r - 2).
std::int64_t solved_genus(std::int64_t r, std::int64_t target, std::int64_t floor_g)
{
    const std::int64_t num = target + 2 * r;
    const std::int64_t den = 2 * r - 2;
    return std::max(floor_g, (num + den - 1) / den);
}

} // namespace

TEST(Bounds, ModuliDimension)
{
    EXPECT_EQ(moduli_dim(2, 2, true), 3);
    EXPECT_EQ(moduli_dim(2, 2, false), 5);
    EXPECT_EQ(moduli_dim(3, 4, true), 24);
    EXPECT_THROW((void)moduli_dim(2, 1, true), error);
}

TEST(Bounds, NormalizationEll)
{
    EXPECT_EQ(normalization_ell(5, 2), 3);
    EXPECT_EQ(normalization_ell(2, 1), 1);
    EXPECT_EQ(normalization_ell(1, 7), 0);
    EXPECT_EQ(normalization_ell(7, -1), 6);
    try {
        (void)normalization_ell(4, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::non_coprime);
    }
    for (std::int64_t r = 1; r <= 12; ++r) {
        for (std::int64_t d = -12; d <= 12; ++d) {
            if (std::gcd(r, d) != 1) {
                continue;
            }
            const auto ell = normalization_ell(r, d);
            EXPECT_GE(ell, 0);
            EXPECT_LT(ell, std::max<std::int64_t>(r, 1));
            EXPECT_EQ(((ell * d - 1) % r + r) % r, 0);
        }
    }
}

TEST(Bounds, MinGenusFullyFaithful)
{
    EXPECT_EQ(min_genus_ff(2), 4);
    EXPECT_EQ(min_genus_ff(3), 4);
    EXPECT_EQ(min_genus_ff(4), 4);
    EXPECT_EQ(min_genus_ff(5), 5);
    for (std::int64_t r = 2; r <= 20; ++r) {
        EXPECT_EQ(min_genus_ff(r), solved_genus(r, r * r - 1, 2)) << r;
    }
    EXPECT_THROW((void)min_genus_ff(1), error);
}

TEST(Bounds, MinGenusWedge)
{
    EXPECT_EQ(min_genus_wedge(2, 1), 3);
    EXPECT_EQ(min_genus_wedge(4, 2), 3);
    for (std::int64_t r = 2; r <= 10; ++r) {
        for (std::int64_t j = 1; j <= r - 1; ++j) {
            EXPECT_EQ(min_genus_wedge(r, j), min_genus_wedge(r, r - j)) << r << "," << j;
            EXPECT_EQ(min_genus_wedge(r, j), solved_genus(r, choose(r, j) - 1, 1)) << r << "," << j;
        }
    }
    try {
        (void)min_genus_wedge(3, 3);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::bad_index);
    }
    EXPECT_THROW((void)min_genus_wedge(3, 0), error);
}

TEST(Bounds, VanishingWindows)
{
    const auto lp = lepotier_window(4);
    EXPECT_EQ(lp.lower, 4);
    EXPECT_FALSE(lp.upper.has_value());
    EXPECT_TRUE(lp.contains(4));
    EXPECT_FALSE(lp.contains(3));
    EXPECT_EQ(sommese_window(2).lower, 5);
    EXPECT_EQ(sommese_window(3).lower, 11);
    EXPECT_THROW((void)lepotier_window(0), error);
}

TEST(Bounds, SerreDualDegreeIsInvolution)
{
    for (std::int64_t r = 2; r <= 5; ++r) {
        for (std::int64_t g = 2; g <= 6; ++g) {
            for (std::int64_t i = -3; i <= 40; ++i) {
                EXPECT_EQ(serre_dual_degree(r, g, serre_dual_degree(r, g, i)), i);
            }
        }
    }
    EXPECT_EQ(serre_dual_degree(2, 2, 0), 3);
}

TEST(Bounds, FullVanishingCondition)
{
    EXPECT_TRUE(full_vanishing_condition(3, 4));
    EXPECT_FALSE(full_vanishing_condition(2, 4));
    EXPECT_TRUE(full_vanishing_condition(2, 5));
    for (std::int64_t r = 2; r <= 8; ++r) {
        for (std::int64_t g = 2; g <= 12; ++g) {
            EXPECT_EQ(full_vanishing_condition(r, g), (r * r - 1) * (g - 1) >= 2 * (r * r + r - 1));
            if (full_vanishing_condition(r, g)) {
                EXPECT_TRUE(full_vanishing_condition(r, g + 1));
            }
        }
    }
}

TEST(Bounds, SemistableLocusDimension)
{
    EXPECT_EQ(ss_locus_dim(2, 2, 4), 4);
    EXPECT_EQ(ss_locus_dim(4, 2, 2), 8);
    for (std::int64_t r = 2; r <= 8; ++r) {
        for (std::int64_t g = 2; g <= 10; ++g) {
            EXPECT_EQ(ss_locus_dim(r, r, g), (r - 1) * (r - 1) * (g - 1) + 1);
        }
    }
    try {
        (void)ss_locus_dim(4, 3, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::bad_gcd);
    }
}

TEST(Bounds, SemistableLocusAgreesWithBruteForce)
{
    for (std::int64_t r = 2; r <= 12; ++r) {
        for (std::int64_t a = 2; a <= r; ++a) {
            if (r % a != 0) {
                continue;
            }
            for (std::int64_t g = 2; g <= 10; ++g) {
                // largest dimension over splittings a = c + (a - c) of the graded pieces
                const std::int64_t r0 = r / a;
                std::int64_t best = 0;
                bool first = true;
                for (std::int64_t c = 1; c < a; ++c) {
                    const std::int64_t v = (r0 * c) * (r0 * c) * (g - 1) + 1 + (r0 * (a - c)) * (r0 * (a - c)) * (g - 1)
                                           + 1 - g;
                    best = first ? v : std::max(best, v);
                    first = false;
                }
                EXPECT_EQ(ss_locus_dim(r, a, g), best) << r << "," << a << "," << g;
            }
        }
    }
}

TEST(Bounds, HeckeCodimension)
{
    EXPECT_EQ(hecke_codim_bound(2, 4), 5);
    EXPECT_EQ(hecke_codim_bound(3, 4), 11);
    EXPECT_EQ(hecke_codim_bound(2, 2), 1);
    for (std::int64_t r = 2; r <= 8; ++r) {
        for (std::int64_t g = 2; g <= 10; ++g) {
            const auto codim = hecke_codim_bound(r, g);
            EXPECT_EQ(codim, hecke_total_dim(r, g) - ss_locus_dim(r, r, g) - (r - 1));
            EXPECT_EQ(codim, 2 * (r - 1) * (g - 1) - 1);
            EXPECT_GT(codim, 0);
        }
    }
}

TEST(Bounds, InjectivityBound)
{
    EXPECT_EQ(injectivity_bound(2, 4), 4);
    EXPECT_EQ(injectivity_bound(2, 3), 2);
    for (std::int64_t r = 2; r <= 8; ++r) {
        for (std::int64_t g = 2; g <= 10; ++g) {
            EXPECT_EQ(injectivity_bound(r, g), hecke_codim_bound(r, g) - 1);
            EXPECT_LE(injectivity_bound(r, g), injectivity_bound(r, g + 1));
        }
        const auto g0 = min_genus_ff(r);
        EXPECT_GE(injectivity_bound(r, g0), r * r - 1);
        if (g0 > 2) {
            EXPECT_LT(injectivity_bound(r, g0 - 1), r * r - 1);
        }
    }
}

TEST(Bounds, PicardBundles)
{
    EXPECT_TRUE(picard_slope_condition(1, 5, 2, 2));
    EXPECT_EQ(picard_bundle_rank(1, 5, 2, 2), 9);
    EXPECT_FALSE(picard_slope_condition(1, 1, 2, 2));
    try {
        (void)picard_bundle_rank(1, 1, 2, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::slope_condition_violated);
    }
    for (std::int64_t g = 2; g <= 8; ++g) {
        EXPECT_EQ(deformation_dim(1, g), g);
        EXPECT_EQ(deformation_dim(2, g), moduli_dim(2, g, false));
    }
}

TEST(Bounds, ReportAndDiscrepancy)
{
    const auto rep = make_bounds_report(2, 4);
    EXPECT_EQ(rep.g0, 4);
    EXPECT_EQ(rep.ell, 1);
    EXPECT_EQ(rep.gj.at(1), 3);
    EXPECT_EQ(rep.codim_bound, 5);
    EXPECT_EQ(rep.injectivity_bound, 4);
    EXPECT_EQ(rep.dim_fixed, 9);
    EXPECT_EQ(rep.dim_varying, 13);
    EXPECT_EQ(rep.dimK, 4);
    EXPECT_EQ(rep.dimQ, 10);
    EXPECT_EQ(rep.lepotier_from, 4);
    EXPECT_EQ(rep.sommese_from, 5);
    EXPECT_FALSE(rep.full_vanishing);
    ASSERT_EQ(rep.discrepancies.size(), 1U);

    EXPECT_TRUE(make_bounds_report(3, 4).discrepancies.empty());
    EXPECT_TRUE(make_bounds_report(2, 5).discrepancies.empty());
    // below g = 4 no claim is made
    EXPECT_TRUE(make_bounds_report(2, 3).discrepancies.empty());
}
