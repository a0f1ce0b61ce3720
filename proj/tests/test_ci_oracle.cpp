#include <gtest/gtest.h>

#include <mhodge/ci_oracle.hpp>
#include <mhodge/hodge.hpp>

using namespace mhodge;

namespace {

hodge_diamond make_diamond(unsigned n, std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<big_int> h;
    for (const auto& row : rows) {
        for (int v : row) {
            h.emplace_back(v);
        }
    }
    return hodge_diamond(n, std::move(h));
}

} // namespace

TEST(CiOracle, TwoQuadricsInP5)
{
    const auto expect = make_diamond(3, {{1, 0, 0, 0}, {0, 1, 2, 0}, {0, 2, 1, 0}, {0, 0, 0, 1}});
    EXPECT_EQ(ci_hodge_oracle({2, 2}, 5), expect);
}

TEST(CiOracle, QuadricSurface)
{
    const auto expect = make_diamond(2, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
    EXPECT_EQ(ci_hodge_oracle({2}, 3), expect);
}

TEST(CiOracle, CubicSurfaceAndQuarticK3)
{
    EXPECT_EQ(ci_hodge_oracle({3}, 3).at(1, 1), 7);
    const auto k3 = ci_hodge_oracle({4}, 3);
    EXPECT_EQ(k3.at(2, 0), 1);
    EXPECT_EQ(k3.at(1, 1), 20);
}

TEST(CiOracle, PlaneCurves)
{
    // genus (d-1)(d-2)/2
    for (unsigned d = 1; d <= 6; ++d) {
        EXPECT_EQ(ci_hodge_oracle({d}, 2).at(1, 0), (d - 1) * (d - 2) / 2);
    }
}

TEST(CiOracle, QuinticThreefold)
{
    const auto x = ci_hodge_oracle({5}, 4);
    EXPECT_EQ(x.at(1, 1), 1);
    EXPECT_EQ(x.at(2, 1), 101);
    EXPECT_EQ(x.at(3, 0), 1);
}

TEST(CiOracle, LinearSectionIsProjectiveSpace)
{
    const auto p2 = ci_hodge_oracle({1}, 3);
    EXPECT_EQ(p2, make_diamond(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(CiOracle, UnsupportedInputs)
{
    try {
        (void)ci_hodge_oracle({2, 2}, 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), error_kind::unsupported_dimension);
    }
    EXPECT_THROW((void)ci_hodge_oracle({0}, 3), error);
    EXPECT_THROW((void)ci_hodge_oracle({2}, 0), error);
}

TEST(CiOracle, MatchesModuliOfRankTwoGenusTwo)
{
    EXPECT_EQ(diamond(moduli_params{2, 1, 2, true}), ci_hodge_oracle({2, 2}, 5));
}
