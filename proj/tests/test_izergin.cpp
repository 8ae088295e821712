#include <gtest/gtest.h>

#include "support.hpp"

using namespace gl3hc;
using namespace gl3hc::testing;

namespace {

const KernelContext kQ2(Rational(2));

} // namespace

TEST(Kernel, FAndGBySubstitution)
{
    EXPECT_EQ(f(kQ2, Rational(3), Rational(1)), Rational(11, 4));
    EXPECT_EQ(g(kQ2, Rational(3), Rational(1)), Rational(3, 4));
    EXPECT_THROW(f(kQ2, Rational(3), Rational(3)), PoleError);
    EXPECT_THROW(g(kQ2, Rational(3), Rational(3)), PoleError);
    Gen gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational u = gen.nonzero();
        Rational v = gen.nonzero();
        if (u == v) {
            continue;
        }
        EXPECT_EQ(f(kQ2, u, Rational(0)), Rational(2));
        EXPECT_EQ(g(kQ2, u, v), -g(kQ2, v, u));
        EXPECT_EQ(f(kQ2, u, v), f_oracle(Rational(2), u, v));
    }
}

TEST(Kernel, FProdConventions)
{
    const ParameterSet u{Rational(3), Rational(7)};
    const ParameterSet v{Rational(1)};
    EXPECT_EQ(f_prod(kQ2, ParameterSet{}, v), Rational(1));
    EXPECT_EQ(f_prod(kQ2, v, ParameterSet{}), Rational(1));
    EXPECT_EQ(f_prod(kQ2, ParameterSet{Rational(3)}, v), f(kQ2, Rational(3), Rational(1)));
    EXPECT_EQ(f_prod(kQ2, u, v), f(kQ2, Rational(3), Rational(1)) * f(kQ2, Rational(7), Rational(1)));
    EXPECT_THROW(f_prod(kQ2, u, ParameterSet{Rational(7)}), PoleError);
}

TEST(Kernel, RejectsDegenerateQ)
{
    EXPECT_THROW(KernelContext(Rational(0)), std::invalid_argument);
    EXPECT_THROW(KernelContext(Rational(1)), std::invalid_argument);
    EXPECT_THROW(KernelContext(Rational(-1)), std::invalid_argument);
}

TEST(Izergin, EmptyIsOne)
{
    EXPECT_EQ(izergin(kQ2, ParameterSet{}, ParameterSet{}), Rational(1));
    EXPECT_EQ(izergin_left(kQ2, ParameterSet{}, ParameterSet{}), Rational(1));
    EXPECT_THROW(izergin(kQ2, ParameterSet{Rational(1)}, ParameterSet{}), CardinalityError);
}

TEST(Izergin, SizeOneIsG)
{
    Gen gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = generic({1, 1}, 1000 + trial);
        const KernelContext ctx(s.q);
        const Rational x = s.sets[0][0];
        const Rational y = s.sets[1][0];
        EXPECT_EQ(izergin(ctx, s.sets[0], s.sets[1]), g(ctx, x, y));
        EXPECT_EQ(izergin_left(ctx, s.sets[0], s.sets[1]), x * g(ctx, x, y));
        EXPECT_EQ(izergin_right(ctx, s.sets[0], s.sets[1]), y * g(ctx, x, y));
    }
}

TEST(Izergin, TwoByTwoCofactorOracle)
{
    const Rational q(2);
    const Rational qi(1, 2);
    const ParameterSet x{Rational(1), Rational(2)};
    const ParameterSet y{Rational(3), Rational(5)};
    auto h = [&](const Rational& a, const Rational& b) { return q * a - qi * b; };
    auto entry = [&](std::size_t i, std::size_t j) { return (q - qi) / ((x[i] - y[j]) * h(x[i], y[j])); };
    const Rational det = entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
    Rational pre(1);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            pre *= h(x[i], y[j]);
        }
    }
    pre /= (x[0] - x[1]) * (y[1] - y[0]);
    EXPECT_EQ(izergin(kQ2, x, y), pre * det);
}

TEST(Izergin, MatchesOriginalFormUpToSizeFive)
{
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::uint64_t trial = 0; trial < 10; ++trial) {
            const auto s = generic({n, n}, 77 * n + trial);
            const KernelContext ctx(s.q);
            EXPECT_EQ(izergin(ctx, s.sets[0], s.sets[1]), izergin_original(s.q, s.sets[0], s.sets[1]))
                << "n=" << n << " trial=" << trial;
        }
    }
}

TEST(Izergin, NegativeAndNonIntegralQ)
{
    for (const auto& q : {Rational(-3), Rational(2, 5), Rational(-7, 4)}) {
        const auto s = generic({3, 3}, 5, q);
        const KernelContext ctx(q);
        EXPECT_EQ(izergin(ctx, s.sets[0], s.sets[1]), izergin_original(q, s.sets[0], s.sets[1]));
        EXPECT_EQ(izergin_oracle(q, s.sets[0], s.sets[1]), izergin_original(q, s.sets[0], s.sets[1]));
    }
}

TEST(Izergin, SymmetricInEachSet)
{
    const auto s = generic({4, 4}, 3);
    const KernelContext ctx(s.q);
    auto x = s.sets[0];
    auto y = s.sets[1];
    const Rational base = izergin(ctx, x, y);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(x.begin(), x.end(), rng);
        std::shuffle(y.begin(), y.end(), rng);
        EXPECT_EQ(izergin(ctx, x, y), base);
    }
}

TEST(Izergin, LeftRightDifferenceVanishes)
{
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const auto s = generic({3, 3}, trial);
        const KernelContext ctx(s.q);
        const auto& x = s.sets[0];
        const auto& y = s.sets[1];
        EXPECT_EQ(izergin_left(ctx, x, y) / prod(x) - izergin_right(ctx, x, y) / prod(y), Rational(0));
    }
}

TEST(Izergin, LaurentRingAgreesOnConstants)
{
    const auto s = generic({3, 3}, 9);
    const KernelContext ctx(s.q);
    const auto x = lift<LaurentSeries>(s.sets[0]);
    const auto y = lift<LaurentSeries>(s.sets[1]);
    const LaurentSeries k = izergin(ctx, x, y);
    EXPECT_EQ(k.valuation(), 0);
    EXPECT_EQ(k.coeff(0), izergin(ctx, s.sets[0], s.sets[1]));
}

TEST(Izergin, DeterminantPivotsPastZeros)
{
    std::vector<std::vector<Rational>> m{{0, 1, 2}, {3, 0, 1}, {4, 5, 0}};
    EXPECT_EQ(determinant(m), leibniz(m));
    std::vector<std::vector<Rational>> singular{{1, 2}, {2, 4}};
    EXPECT_EQ(determinant(singular), Rational(0));
}

TEST(Izergin, LemmaSumAtSizeOneOne)
{
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        const auto s = generic({2, 1, 1}, trial);
        const KernelContext ctx(s.q);
        for (auto side : {Side::Left, Side::Right}) {
            const Rational lhs = lemma_partition_sum(ctx, side, s.sets[0], s.sets[1], s.sets[2]);
            EXPECT_EQ(lhs, lemma_closed_form_1(ctx, side, s.sets[0], s.sets[1], s.sets[2]));
            EXPECT_EQ(lhs, lemma_closed_form_2(ctx, side, s.sets[0], s.sets[1], s.sets[2]));
        }
    }
}

// Oracle for the partition sum: bitmask enumeration and a Leibniz-expanded determinant.
TEST(Izergin, LemmaSumAgainstBitmaskOracle)
{
    const auto s = generic({3, 2, 1}, 21);
    const KernelContext ctx(s.q);
    const Rational q = s.q;
    const auto& gamma = s.sets[0];
    const auto& alpha = s.sets[1];
    const auto& beta = s.sets[2];
    Rational expected;
    bitmask_splits(gamma, alpha.size(), [&](const auto& gi, const auto& gii) {
        expected += prod(gi) * izergin_oracle(q, gi, alpha) * prod(gii) * izergin_oracle(q, beta, gii)
                  * fprod_oracle(q, gii, gi);
    });
    EXPECT_EQ(lemma_partition_sum(ctx, Side::Left, gamma, alpha, beta), expected);
}

TEST(Izergin, MultiplePoleAtSizeOneOne)
{
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        const auto s = generic({1, 1, 1}, trial);
        const KernelContext ctx(s.q);
        for (auto side : {Side::Left, Side::Right}) {
            const Rational expected = fprod_oracle(s.q, s.sets[0], s.sets[2]) * fprod_oracle(s.q, s.sets[2], s.sets[1])
                                    * izergin_side(ctx, side, s.sets[0], s.sets[1]);
            EXPECT_EQ(mult_pole_limit(ctx, side, s.sets[0], s.sets[1], s.sets[2], LaurentSeries::kDefaultWindow),
                      expected);
        }
    }
}

TEST(Izergin, PropertyPairsHoldAtRandomPoints)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto s = generic({n, n, 1, 1}, n);
        const KernelContext ctx(s.q);
        const auto& x = s.sets[0];
        const auto& y = s.sets[1];
        const Rational z = s.sets[2][0];
        for (auto side : {Side::Left, Side::Right}) {
            EXPECT_TRUE(k_scal_pair(ctx, side, x, y, Rational(-5, 3)).equal());
            for (const auto& p : k_red_pairs(ctx, side, x, y, z)) {
                EXPECT_TRUE(p.equal());
            }
            EXPECT_TRUE(k_invers_pair(ctx, side, x, y).equal());
            EXPECT_TRUE(k_invers1_pair(ctx, side, x, y).equal());
            EXPECT_TRUE(k_res_pair(ctx, side, x, y, z, LaurentSeries::kDefaultWindow).equal());
            for (const auto& p : k_inf_pairs(ctx, side, x, y, LaurentSeries::kDefaultWindow)) {
                EXPECT_TRUE(p.equal());
            }
        }
    }
}

// The reduction K_{n+1}({x, q^-2 z}|{y, z}) = -q^(-+1) K_n(x|y) against the original form.
TEST(Izergin, ReductionAgainstOracle)
{
    const auto s = generic({2, 2, 1}, 8);
    const Rational q = s.q;
    auto x = s.sets[0];
    auto y = s.sets[1];
    const Rational z = s.sets[2][0];
    x.push_back(z / (q * q));
    y.push_back(z);
    const Rational lhs = prod(x) * izergin_oracle(q, x, y);
    const Rational rhs = -q.inverse() * prod(s.sets[0]) * izergin_oracle(q, s.sets[0], s.sets[1]);
    EXPECT_EQ(lhs, rhs);
    const KernelContext ctx(q);
    EXPECT_EQ(izergin_left(ctx, x, y), rhs);
}

TEST(Izergin, LimitHelpers)
{
    const LaurentSeries pole(-1, {Rational(3), Rational(2)});
    EXPECT_EQ(simple_residue(pole), Rational(3));
    EXPECT_THROW(limit_at_zero(pole), SingularLimitError);
    const LaurentSeries regular(0, {Rational(4), Rational(1)});
    EXPECT_EQ(limit_at_zero(regular), Rational(4));
    EXPECT_EQ(simple_residue(regular), Rational(0));
    const LaurentSeries double_pole(-2, {Rational(1), Rational(0), Rational(0)});
    EXPECT_THROW(simple_residue(double_pole), SingularLimitError);
}
