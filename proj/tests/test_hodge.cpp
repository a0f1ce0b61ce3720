#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include <mhodge/hodge.hpp>

using namespace mhodge;

namespace {

// Dense oracle for the fixed-determinant formula: coefficients in an (N+1)x(N+1) grid,
// quotients by 1 - m via explicit truncated geometric series.
using dense = std::vector<std::vector<big_int>>;

dense dense_zero(unsigned n) { return dense(n + 1, std::vector<big_int>(n + 1)); }

dense dense_mul(const dense& a, const dense& b)
{
    const unsigned n = static_cast<unsigned>(a.size()) - 1;
    dense out = dense_zero(n);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            if (a[i][j] == 0) {
                continue;
            }
            for (unsigned k = 0; i + k <= n; ++k) {
                for (unsigned l = 0; j + l <= n; ++l) {
                    out[i + k][j + l] += a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

dense dense_binomial(unsigned n, unsigned a, unsigned b, int sign, unsigned power)
{
    // (1 + sign x^a y^b)^power, truncated
    dense out = dense_zero(n);
    big_int c = 1;
    for (unsigned k = 0; k <= power; ++k) {
        if (a * k <= n && b * k <= n) {
            out[a * k][b * k] = (sign < 0 && k % 2) ? big_int(-c) : c;
        }
        c = c * (power - k) / (k + 1);
    }
    return out;
}

dense dense_inverse_one_minus(unsigned n, unsigned k)
{
    dense out = dense_zero(n);
    for (unsigned e = 0; e * k <= n; ++e) {
        out[e * k][e * k] = 1;
    }
    return out;
}

std::int64_t dense_twist(const std::vector<unsigned>& p, std::int64_t g, std::int64_t d, std::int64_t r)
{
    std::int64_t scaled = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            scaled += std::int64_t{p[i]} * p[j] * (g - 1) * r;
        }
    }
    std::int64_t partial = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        partial += p[i];
        scaled += (std::int64_t{p[i]} + p[i + 1]) * (((-partial * d) % r + r) % r);
    }
    return scaled / r;
}

void all_compositions(unsigned r, std::vector<unsigned>& prefix, std::vector<std::vector<unsigned>>& out)
{
    if (r == 0) {
        out.push_back(prefix);
        return;
    }
    for (unsigned k = 1; k <= r; ++k) {
        prefix.push_back(k);
        all_compositions(r - k, prefix, out);
        prefix.pop_back();
    }
}

dense dense_fixed_det(unsigned r, std::int64_t d, std::int64_t g)
{
    const unsigned n = static_cast<unsigned>((r * r - 1) * (g - 1));
    const auto gu = static_cast<unsigned>(g);
    std::vector<std::vector<unsigned>> comps;
    std::vector<unsigned> prefix;
    all_compositions(r, prefix, comps);
    dense total = dense_zero(n);
    for (const auto& c : comps) {
        const std::size_t len = c.size();
        const auto e = static_cast<unsigned>(dense_twist(c, g, d, r));
        if (e > n) {
            continue;
        }
        dense term = dense_zero(n);
        term[e][e] = (len % 2 == 1) ? 1 : -1;
        for (std::size_t s = 1; s < len; ++s) {
            term = dense_mul(term, dense_binomial(n, 1, 0, 1, gu));
            term = dense_mul(term, dense_binomial(n, 0, 1, 1, gu));
            term = dense_mul(term, dense_inverse_one_minus(n, 1));
        }
        for (unsigned part : c) {
            for (unsigned i = 1; i < part; ++i) {
                term = dense_mul(term, dense_binomial(n, i, i + 1, 1, gu));
                term = dense_mul(term, dense_binomial(n, i + 1, i, 1, gu));
                term = dense_mul(term, dense_inverse_one_minus(n, i));
                term = dense_mul(term, dense_inverse_one_minus(n, i + 1));
            }
        }
        for (std::size_t s = 0; s + 1 < len; ++s) {
            term = dense_mul(term, dense_inverse_one_minus(n, c[s] + c[s + 1]));
        }
        for (unsigned i = 0; i <= n; ++i) {
            for (unsigned j = 0; j <= n; ++j) {
                total[i][j] += term[i][j];
            }
        }
    }
    return total;
}

bipoly to_bipoly(const dense& d)
{
    const unsigned n = static_cast<unsigned>(d.size()) - 1;
    bipoly p(caps{n, n});
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            p.add_term(i, j, d[i][j]);
        }
    }
    return p;
}

// Rank 2 Poincare polynomial ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)).
std::vector<big_int> rank_two_poincare(std::int64_t g)
{
    const auto gu = static_cast<unsigned>(g);
    const unsigned deg = 6 * gu + 2;
    std::vector<big_int> num(deg + 1);
    big_int c = 1;
    for (unsigned k = 0; k <= 2 * gu; ++k) {
        num[3 * k] += c;
        num[2 * gu + k] -= c;
        c = c * (2 * gu - k) / (k + 1);
    }
    // divide by 1 - t^2, then by 1 - t^4
    for (unsigned step : {2U, 4U}) {
        std::vector<big_int> q(num.size());
        for (unsigned k = 0; k < num.size(); ++k) {
            q[k] = num[k] + (k >= step ? q[k - step] : big_int(0));
        }
        num = q;
    }
    while (!num.empty() && num.back() == 0) {
        num.pop_back();
    }
    return num;
}

bipoly rank_two_genus_two_hp()
{
    bipoly p(caps{3, 3});
    p.add_term(0, 0, 1);
    p.add_term(1, 1, 1);
    p.add_term(2, 1, 2);
    p.add_term(1, 2, 2);
    p.add_term(2, 2, 1);
    p.add_term(3, 3, 1);
    return p;
}

} // namespace

TEST(HodgePoincare, RankTwoGenusTwo)
{
    EXPECT_EQ(hodge_poincare(moduli_params{2, 1, 2, true}), rank_two_genus_two_hp());
}

TEST(HodgePoincare, RankOneIsPointOrJacobian)
{
    EXPECT_EQ(hodge_poincare(moduli_params{1, 0, 3, true}), bipoly::one(caps{0, 0}));
    const auto jac = hodge_poincare(moduli_params{1, 5, 2, false});
    EXPECT_EQ(jac.coeff(1, 0), 2);
    EXPECT_EQ(jac.coeff(1, 1), 4);
    EXPECT_EQ(jac.coeff(2, 2), 1);
}

TEST(HodgePoincare, MatchesDenseOracle)
{
    for (unsigned r = 2; r <= 3; ++r) {
        for (std::int64_t d = 1; d < r; ++d) {
            for (std::int64_t g = 2; g <= (r == 2 ? 6 : 4); ++g) {
                EXPECT_EQ(hodge_poincare(moduli_params{r, d, g, true}), to_bipoly(dense_fixed_det(r, d, g)))
                    << "r=" << r << " d=" << d << " g=" << g;
            }
        }
    }
}

TEST(HodgePoincare, RankTwoBettiMatchesClosedForm)
{
    for (std::int64_t g = 2; g <= 8; ++g) {
        const auto b = betti(moduli_params{2, 1, g, true});
        const auto expect = rank_two_poincare(g);
        for (unsigned k = 0; k < expect.size() || k <= b.terms().rbegin()->first; ++k) {
            const big_int want = k < expect.size() ? expect[k] : big_int(0);
            EXPECT_EQ(b.coeff(k), want) << "g=" << g << " k=" << k;
        }
    }
}

TEST(HodgePoincare, DegreeDependsOnlyOnResidue)
{
    EXPECT_EQ(hodge_poincare(moduli_params{3, 1, 3, true}), hodge_poincare(moduli_params{3, 4, 3, true}));
    EXPECT_EQ(hodge_poincare(moduli_params{3, 1, 3, true}), hodge_poincare(moduli_params{3, -2, 3, true}));
}

TEST(HodgePoincare, DualDegreeGivesSamePolynomial)
{
    for (std::int64_t g = 2; g <= 4; ++g) {
        EXPECT_EQ(hodge_poincare(moduli_params{3, 1, g, true}), hodge_poincare(moduli_params{3, 2, g, true}));
        EXPECT_EQ(hodge_poincare(moduli_params{4, 1, g, true}), hodge_poincare(moduli_params{4, 3, g, true}));
    }
}

TEST(HodgePoincare, TopDegreeAndLeadingCoefficient)
{
    for (unsigned r = 2; r <= 4; ++r) {
        for (std::int64_t g = 2; g <= 6; ++g) {
            const moduli_params mp{r, 1, g, true};
            const auto hp = hodge_poincare(mp);
            const unsigned n = (r * r - 1) * static_cast<unsigned>(g - 1);
            EXPECT_EQ(hp.max_x_degree(), n);
            EXPECT_EQ(hp.max_y_degree(), n);
            EXPECT_EQ(hp.coeff(n, n), 1);
            EXPECT_EQ(hp.coeff(0, 0), 1);
        }
    }
}

TEST(HodgePoincare, VaryingDeterminantIsJacobianTimesFixed)
{
    for (unsigned r = 2; r <= 3; ++r) {
        for (std::int64_t g = 2; g <= 4; ++g) {
            const auto fixed = hodge_poincare(moduli_params{r, 1, g, true});
            const auto varying = hodge_poincare(moduli_params{r, 1, g, false});
            const unsigned n = r * r * static_cast<unsigned>(g - 1) + 1;
            const caps c{n, n};
            // (1+x)^g (1+y)^g expanded term by term
            bipoly jac(c);
            big_int ca = 1;
            for (unsigned a = 0; a <= g; ++a) {
                big_int cb = 1;
                for (unsigned b = 0; b <= g; ++b) {
                    jac.add_term(a, b, ca * cb);
                    cb = cb * (static_cast<unsigned>(g) - b) / (b + 1);
                }
                ca = ca * (static_cast<unsigned>(g) - a) / (a + 1);
            }
            EXPECT_EQ(varying, recap(fixed, c) * jac);
            EXPECT_EQ(varying.max_total_degree(), 2 * n);
        }
    }
    EXPECT_EQ(hodge_poincare(moduli_params{2, 1, 2, false}).coeff(0, 1), 2);
}

TEST(HodgePoincare, InvalidParameters)
{
    try {
        (void)hodge_poincare(moduli_params{2, 2, 3, true});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::non_coprime);
    }
    try {
        (void)hodge_poincare(moduli_params{2, 1, 1, true});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::genus_too_small);
    }
}

TEST(Diamond, RankTwoGenusTwo)
{
    const auto dm = diamond(moduli_params{2, 1, 2, true});
    EXPECT_EQ(dm.dimension(), 3U);
    EXPECT_EQ(dm.at(1, 1), 1);
    EXPECT_EQ(dm.at(1, 2), 2);
    EXPECT_EQ(dm.at(2, 1), 2);
    EXPECT_EQ(dm.at(3, 0), 0);
    EXPECT_EQ(dm.to_polynomial(), rank_two_genus_two_hp());
}

TEST(Diamond, SymmetryAndDualityOnGrid)
{
    for (unsigned r = 2; r <= 4; ++r) {
        for (std::int64_t d = 1; d < r; ++d) {
            if (std::gcd(std::int64_t{r}, d) != 1) {
                continue;
            }
            for (std::int64_t g = 2; g <= 6; ++g) {
                const auto dm = diamond(moduli_params{r, d, g, true});
                const unsigned n = dm.dimension();
                for (unsigned p = 0; p <= n; ++p) {
                    for (unsigned q = 0; q <= n; ++q) {
                        ASSERT_EQ(dm.at(p, q), dm.at(q, p));
                        ASSERT_EQ(dm.at(p, q), dm.at(n - p, n - q));
                        ASSERT_GE(dm.at(p, q), 0);
                    }
                    if (p > 0) {
                        ASSERT_EQ(dm.at(p, 0), 0) << "r=" << r << " g=" << g << " p=" << p;
                    }
                }
            }
        }
    }
}

TEST(Diamond, ValidationRejectsBrokenInput)
{
    // asymmetric
    EXPECT_THROW(hodge_diamond(1, {1, 1, 0, 1}), error);
    // h^{0,0} != 1
    try {
        hodge_diamond(1, {2, 0, 0, 2});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::unit_violation);
    }
    EXPECT_THROW(hodge_diamond(1, {1, 0, 0}), error);
    EXPECT_NO_THROW(hodge_diamond(1, {1, 1, 1, 1}));
}

TEST(LemmaHodgeNumbers, HoldsOnGrid)
{
    for (unsigned r = 2; r <= 4; ++r) {
        for (std::int64_t g = 2; g <= 6; ++g) {
            const auto rep = lemma_hodge_numbers_check(r, g);
            ASSERT_EQ(rep.clauses.size(), 4U);
            for (const auto& c : rep.clauses) {
                EXPECT_TRUE(c.pass) << "r=" << r << " g=" << g << ": " << c.clause << " (" << c.detail << ")";
            }
            EXPECT_TRUE(rep.all_pass());
        }
    }
}

TEST(LevelBound, HoldsOnGrid)
{
    for (unsigned r = 2; r <= 4; ++r) {
        for (std::int64_t g = 2; g <= 6; ++g) {
            EXPECT_TRUE(level_check(diamond(moduli_params{r, 1, g, true})).pass) << r << "," << g;
        }
    }
}

TEST(LevelBound, FlagsFabricatedViolation)
{
    // a curve-like diamond with h^{1,0} = 1 breaks |p-q| <= floor((p+q)/3)
    const hodge_diamond dm(1, {1, 1, 1, 1});
    const auto rep = level_check(dm);
    EXPECT_FALSE(rep.pass);
    ASSERT_EQ(rep.violations.size(), 2U);
    EXPECT_EQ(rep.violations[0].p, 0U);
    EXPECT_EQ(rep.violations[0].q, 1U);

    // h^{3,0} on a threefold
    std::vector<big_int> h(16);
    h[0] = 1;
    h[3] = 1;
    h[12] = 1;
    h[15] = 1;
    h[5] = 1;
    h[10] = 1;
    EXPECT_FALSE(level_check(hodge_diamond(3, h)).pass);
}

TEST(Betti, RankTwoGenusTwo)
{
    const auto b = betti(moduli_params{2, 1, 2, true});
    EXPECT_EQ(b.coeff(0), 1);
    EXPECT_EQ(b.coeff(2), 1);
    EXPECT_EQ(b.coeff(3), 4);
    EXPECT_EQ(b.coeff(4), 1);
    EXPECT_EQ(b.coeff(6), 1);
    EXPECT_EQ(b.coeff(1), 0);
    EXPECT_EQ(euler(moduli_params{2, 1, 2, true}), 0);
}

TEST(Betti, VaryingDeterminantHasZeroEuler)
{
    EXPECT_EQ(euler(moduli_params{2, 1, 3, false}), 0);
    EXPECT_EQ(euler(moduli_params{3, 1, 2, false}), 0);
}
