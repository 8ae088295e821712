#include <gtest/gtest.h>

#include "support.hpp"

using namespace gl3hc;
using namespace gl3hc::testing;

namespace {

Rational k_oracle(Side side, const Rational& q, const ParameterSet& a, const ParameterSet& b)
{
    return (side == Side::Left ? prod(a) : prod(b)) * izergin_oracle(q, a, b);
}

Rational minus_q(const Rational& q, int e)
{
    return (-q).pow(e);
}

// Z through the w = {s, x} partition sum, built from bitmask splits and the
// original-form determinant only.
Rational ws_oracle(Side side, const Rational& q, const ParameterSet& t, const ParameterSet& x, const ParameterSet& s,
                   const ParameterSet& y)
{
    const int sign = side_sign(side);
    const int b = static_cast<int>(s.size());
    const Rational q2 = q * q;
    Rational sum;
    ParameterSet w = s;
    w.insert(w.end(), x.begin(), x.end());
    bitmask_splits(w, s.size(), [&](const ParameterSet& wi, const ParameterSet& wii) {
        ParameterSet shifted;
        for (const auto& v : wi) {
            shifted.push_back(q2 * v);
        }
        sum += k_oracle(opposite(side), q, s, shifted) * k_oracle(side, q, wii, t) * k_oracle(side, q, y, wi)
             * fprod_oracle(q, wi, wii);
    });
    return minus_q(q, -sign * b) * sum;
}

struct Point {
    Rational q;
    ParameterSet t, x, s, y;
};

Point point(std::size_t a, std::size_t b, std::uint64_t seed)
{
    auto smp = generic({a, a, b, b}, seed);
    return {smp.q, smp.sets[0], smp.sets[1], smp.sets[2], smp.sets[3]};
}

} // namespace

TEST(Highest, RepNamesRoundTrip)
{
    for (auto rep : kAllReps) {
        EXPECT_EQ(parse_rep(rep_name(rep)), rep);
    }
    EXPECT_THROW(parse_rep("nope"), std::invalid_argument);
    EXPECT_EQ(parse_side("l"), Side::Left);
    EXPECT_EQ(parse_side("r"), Side::Right);
    EXPECT_THROW(parse_side("x"), std::invalid_argument);
}

TEST(Highest, ClosedFormAtOneOneForEveryRep)
{
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        const auto p = point(1, 1, 500 + trial);
        const KernelContext ctx(p.q);
        const Rational t = p.t[0], x = p.x[0], s = p.s[0], y = p.y[0];
        const Rational left = x * y * g(ctx, x, t) * g(ctx, y, s) * f(ctx, s, x)
                            + x * y * s * g(ctx, x, s) * g(ctx, s, t) * g(ctx, y, x);
        const Rational right = t * s * g(ctx, x, t) * g(ctx, y, s) * f(ctx, s, x)
                             + t * s * x * g(ctx, x, s) * g(ctx, s, t) * g(ctx, y, x);
        for (auto rep : kAllReps) {
            EXPECT_EQ(highest_coefficient(ctx, Side::Left, rep, p.t, p.x, p.s, p.y), left) << rep_name(rep);
            EXPECT_EQ(highest_coefficient(ctx, Side::Right, rep, p.t, p.x, p.s, p.y), right) << rep_name(rep);
        }
        EXPECT_EQ(z11_closed_form(ctx, Side::Left, t, x, s, y), left);
        EXPECT_EQ(z11_closed_form(ctx, Side::Right, t, x, s, y), right);
    }
}

TEST(Highest, DifferenceAtOneOne)
{
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        const auto p = point(1, 1, 900 + trial);
        const KernelContext ctx(p.q);
        const Rational t = p.t[0], x = p.x[0], s = p.s[0], y = p.y[0];
        const Rational expected = (p.q - p.q.inverse()) * g(ctx, s, t) * g(ctx, y, x);
        for (auto rep : kAllReps) {
            EXPECT_EQ(hc_difference_11(ctx, rep, t, x, s, y), expected);
            EXPECT_TRUE(diff_11_pair(ctx, rep, t, x, s, y).equal());
        }
    }
}

TEST(Highest, BoundaryValues)
{
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto pa = point(n, 0, n);
        const auto pb = point(0, n, 10 + n);
        for (auto side : {Side::Left, Side::Right}) {
            for (auto rep : kAllReps) {
                const KernelContext ca(pa.q);
                const KernelContext cb(pb.q);
                EXPECT_EQ(highest_coefficient(ca, side, rep, pa.t, pa.x, pa.s, pa.y), k_oracle(side, pa.q, pa.x, pa.t));
                EXPECT_EQ(highest_coefficient(cb, side, rep, pb.t, pb.x, pb.s, pb.y), k_oracle(side, pb.q, pb.y, pb.s));
            }
        }
    }
}

TEST(Highest, AllRepsMatchIndependentOracle)
{
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 2}, {2, 1}, {2, 2}, {3, 1}, {2, 3}};
    for (const auto& [a, b] : shapes) {
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
            const auto p = point(a, b, 31 * a + 7 * b + trial);
            const KernelContext ctx(p.q);
            for (auto side : {Side::Left, Side::Right}) {
                const Rational expected = ws_oracle(side, p.q, p.t, p.x, p.s, p.y);
                for (auto rep : kAllReps) {
                    EXPECT_EQ(highest_coefficient(ctx, side, rep, p.t, p.x, p.s, p.y), expected)
                        << "a=" << a << " b=" << b << " rep=" << rep_name(rep) << " side=" << side_char(side);
                }
            }
        }
    }
}

TEST(Highest, DefaultQueryUsesWs)
{
    const auto p = point(2, 1, 3);
    const HCQuery query{Side::Right, {}, p.t, p.x, p.s, p.y, p.q};
    EXPECT_EQ(query.rep, Rep::WS);
    EXPECT_EQ(hc(query), ws_oracle(Side::Right, p.q, p.t, p.x, p.s, p.y));
}

TEST(Highest, CardinalityMismatchIsRejected)
{
    const KernelContext ctx(Rational(3));
    const ParameterSet one{Rational(2)};
    const ParameterSet two{Rational(5), Rational(7)};
    EXPECT_THROW(highest_coefficient(ctx, Side::Left, Rep::WS, one, two, one, one), CardinalityError);
    EXPECT_THROW(highest_coefficient(ctx, Side::Left, Rep::TX, one, one, one, two), CardinalityError);
}

TEST(Highest, PoleIsReportedNotAbsorbed)
{
    const KernelContext ctx(Rational(3));
    const ParameterSet t{Rational(2)};
    EXPECT_THROW(highest_coefficient(ctx, Side::Left, Rep::WS, t, t, ParameterSet{}, ParameterSet{}), PoleError);
}

TEST(Highest, SymmetryChecksOnSmallShapes)
{
    for (std::size_t a = 0; a <= 2; ++a) {
        for (std::size_t b = 0; b <= 2; ++b) {
            const auto p = point(a, b, 40 + 3 * a + b);
            for (auto side : {Side::Left, Side::Right}) {
                const HCQuery query{side, Rep::WS, p.t, p.x, p.s, p.y, p.q};
                for (auto v : {SymmetryVariant::Z_SCAL, SymmetryVariant::Z_INVERS, SymmetryVariant::Z_INVERS1}) {
                    EXPECT_TRUE(hc_symmetry_check(v, query, Rational(-7, 2)).equal());
                }
                std::array<std::vector<std::size_t>, 4> reversed;
                for (std::size_t i = 0; i < 4; ++i) {
                    const std::size_t n = i < 2 ? a : b;
                    for (std::size_t k = 0; k < n; ++k) {
                        reversed[i].push_back(n - 1 - k);
                    }
                }
                EXPECT_TRUE(hc_permutation_pair(query, reversed).equal());
                for (const auto& pair : hc_inf_pairs(query, LaurentSeries::kDefaultWindow)) {
                    EXPECT_TRUE(pair.equal());
                }
            }
        }
    }
}

// At (a, b) = (1, 0) both sides reduce to K^(l,r)_1(x|t).
TEST(Highest, ZInversAtOneZeroReducesToK)
{
    const auto p = point(1, 0, 4);
    for (auto side : {Side::Left, Side::Right}) {
        const HCQuery query{side, Rep::WS, p.t, p.x, p.s, p.y, p.q};
        const auto z = hc_symmetry_check(SymmetryVariant::Z_INVERS, query, Rational(1));
        EXPECT_EQ(z.lhs, k_oracle(side, p.q, p.x, p.t));
        EXPECT_EQ(z.rhs, k_oracle(side, p.q, p.x, p.t));
    }
}

TEST(Highest, ZeroVanishing)
{
    auto p = point(2, 2, 12);
    const KernelContext ctx(p.q);
    auto y0 = p.y;
    y0[1] = Rational(0);
    EXPECT_EQ(highest_coefficient(ctx, Side::Left, Rep::WS, p.t, p.x, p.s, y0), Rational(0));
    auto t0 = p.t;
    t0[0] = Rational(0);
    EXPECT_EQ(highest_coefficient(ctx, Side::Right, Rep::WS, t0, p.x, p.s, p.y), Rational(0));
    EXPECT_NE(highest_coefficient(ctx, Side::Right, Rep::WS, p.t, p.x, p.s, y0), Rational(0));
}

TEST(Highest, ResidueLimitReductionSpotChecks)
{
    const auto p = point(1, 1, 77);
    for (auto side : {Side::Left, Side::Right}) {
        const HCQuery q{side, Rep::WS, p.t, p.x, p.s, p.y, p.q};
        for (auto v : {ResidueVariant::S_TO_Y, ResidueVariant::T_TO_X, ResidueVariant::S_TO_T,
                       ResidueVariant::Y_TO_X}) {
            EXPECT_TRUE(hc_residue_pair(v, q, LaurentSeries::kDefaultWindow).equal());
        }
    }
    // #z = 0 leaves Z unchanged
    const HCQuery q{Side::Left, Rep::WS, p.t, p.x, p.s, p.y, p.q};
    for (auto v : {MultipleLimitVariant::RED1, MultipleLimitVariant::RED2}) {
        const auto pair = hc_multiple_limit_pair(v, q, {}, LaurentSeries::kDefaultWindow);
        EXPECT_TRUE(pair.equal());
        EXPECT_EQ(pair.lhs, hc(q));
    }
    for (auto v : {ReductionVariant::DEC1, ReductionVariant::DEC2}) {
        const auto pair = hc_reduction_pair(v, q, {});
        EXPECT_TRUE(pair.equal());
        EXPECT_EQ(pair.lhs, hc(q));
    }
}

TEST(Highest, Dec2PcAtOneOneAgainstClosedForm)
{
    const auto smp = generic({1, 1, 1}, 15);
    const KernelContext ctx(smp.q);
    const Rational x = smp.sets[0][0];
    const Rational y = smp.sets[1][0];
    const Rational z = smp.sets[2][0];
    for (auto side : {Side::Left, Side::Right}) {
        const HCQuery core{side, Rep::WS, {}, {x}, {}, {y}, smp.q};
        const auto pair = hc_reduction_pair(ReductionVariant::DEC2_PC, core, {z});
        EXPECT_EQ(pair.lhs, z11_closed_form(ctx, side, smp.q * smp.q * z, x, z, y));
        EXPECT_TRUE(pair.equal());
    }
}

TEST(Highest, TwinSumSpotChecks)
{
    const auto smp = generic({2, 1, 1, 1, 1, 1}, 23);
    for (auto side : {Side::Left, Side::Right}) {
        // a = 2, b = 1: t(2), s(1), y(1), xi(1)
        const HCQuery ge{side, Rep::WS, smp.sets[0], {}, smp.sets[1], smp.sets[2], smp.q};
        EXPECT_TRUE(hc_twin_sum_pair(1, ge, smp.sets[3]).equal());
        EXPECT_TRUE(hc_twin_sum_pair(2, ge, smp.sets[3]).equal());
        // a = 1, b = 2: t(1), x(1), y(2), xi(1)
        const HCQuery le{side, Rep::WS, smp.sets[1], smp.sets[2], {}, {smp.sets[3][0], smp.sets[4][0]}, smp.q};
        EXPECT_TRUE(hc_twin_sum_pair(3, le, smp.sets[5]).equal());
        EXPECT_TRUE(hc_twin_sum_pair(4, le, smp.sets[5]).equal());
    }
}

TEST(Highest, DoublePartitionSumAtPZeroIsOneTerm)
{
    const auto p = point(1, 1, 8);
    for (auto side : {Side::Left, Side::Right}) {
        const HCQuery core{side, Rep::WS, p.t, p.x, p.s, {}, p.q};
        const auto pair = hc_prop51_pair(core, p.y, {});
        EXPECT_TRUE(pair.equal());
        const HCQuery full{side, Rep::WS, p.t, p.x, p.s, p.y, p.q};
        EXPECT_EQ(pair.rhs, hc(full));
    }
}

TEST(Highest, LaurentRingAgreesOnConstants)
{
    const auto p = point(2, 1, 61);
    const KernelContext ctx(p.q);
    const auto value = highest_coefficient(ctx, Side::Left, Rep::TY, lift<LaurentSeries>(p.t), lift<LaurentSeries>(p.x),
                                           lift<LaurentSeries>(p.s), lift<LaurentSeries>(p.y));
    EXPECT_EQ(value.coeff(0), highest_coefficient(ctx, Side::Left, Rep::TY, p.t, p.x, p.s, p.y));
}
