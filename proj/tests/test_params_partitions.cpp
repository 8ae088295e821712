#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace gl3hc;

TEST(Params, Qshift)
{
    const ParameterSet s{Rational(1), Rational(2)};
    EXPECT_EQ(qshift(s, 2, Rational(2)), (ParameterSet{Rational(4), Rational(8)}));
    EXPECT_TRUE(qshift(ParameterSet{}, -2, Rational(3)).empty());
    const ParameterSet odd{Rational(3, 7), Rational(-5, 2)};
    EXPECT_EQ(qshift(qshift(odd, 2, Rational(5, 3)), -2, Rational(5, 3)), odd);
}

TEST(Params, ComplementUsesZeroBasedIndices)
{
    const ParameterSet s{Rational(5), Rational(7), Rational(9)};
    const auto [in, out] = complement(s, {1});
    EXPECT_EQ(in, (ParameterSet{Rational(7)}));
    EXPECT_EQ(out, (ParameterSet{Rational(5), Rational(9)}));

    const auto [none, all] = complement(ParameterSet{Rational(5)}, {});
    EXPECT_TRUE(none.empty());
    EXPECT_EQ(all, (ParameterSet{Rational(5)}));

    EXPECT_THROW(complement(ParameterSet{Rational(5), Rational(7)}, {2}), std::out_of_range);
}

TEST(Params, ParseAndFormatSets)
{
    EXPECT_EQ(parse_set("1/2,3,7/5"), (ParameterSet{Rational(1, 2), Rational(3), Rational(7, 5)}));
    EXPECT_TRUE(parse_set("").empty());
    EXPECT_TRUE(parse_set("  ").empty());
    EXPECT_THROW(parse_set("1,,2"), ParseError);
    EXPECT_EQ(format_set(parse_set("2/4, -3")), "1/2,-3");
}

TEST(Params, SamplerIsDeterministicAndGeneric)
{
    Config cfg;
    cfg.seed = 7;
    const auto a = sample_generic({1, 1, 1, 1}, cfg);
    const auto b = sample_generic({1, 1, 1, 1}, cfg);
    ASSERT_EQ(a.sets.size(), 4U);
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(a.sets, b.sets);
    std::vector<Rational> all;
    for (const auto& s : a.sets) {
        ASSERT_EQ(s.size(), 1U);
        EXPECT_GT(s[0], Rational(0));
        all.push_back(s[0]);
    }
    EXPECT_TRUE(is_generic(all, a.q));
    EXPECT_NE(a.q, Rational(0));
    EXPECT_NE(a.q, Rational(1));
    EXPECT_NE(a.q, Rational(-1));

    // collision predicate: no two of q^k * P coincide for k in {-4, ..., 4} even
    std::set<Rational> seen;
    for (const auto& v : all) {
        for (int k = -4; k <= 4; k += 2) {
            EXPECT_TRUE(seen.insert(v * a.q.pow(k)).second);
        }
    }
}

TEST(Params, SamplerEmptyShapes)
{
    Config cfg;
    const auto s = sample_generic({0, 0, 0, 0}, cfg);
    ASSERT_EQ(s.sets.size(), 4U);
    for (const auto& set : s.sets) {
        EXPECT_TRUE(set.empty());
    }
    validate_q(s.q);
}

TEST(Params, SamplerExhaustsOnPigeonhole)
{
    Config cfg;
    cfg.max_abs = 1;
    EXPECT_THROW(sample_generic({9, 9, 9, 9}, cfg), SamplerExhausted);
}

TEST(Params, PinnedQIsRespected)
{
    Config cfg;
    cfg.q = Rational(3, 2);
    EXPECT_EQ(sample_generic({2, 2}, cfg).q, Rational(3, 2));
    EXPECT_THROW(validate_q(Rational(-1)), std::invalid_argument);
}

TEST(Params, CaseSeedSeparatesKeys)
{
    const auto base = case_seed(42, "K_RED/l", {2}, 0);
    EXPECT_EQ(base, case_seed(42, "K_RED/l", {2}, 0));
    EXPECT_NE(base, case_seed(42, "K_RED/r", {2}, 0));
    EXPECT_NE(base, case_seed(42, "K_RED/l", {3}, 0));
    EXPECT_NE(base, case_seed(42, "K_RED/l", {2}, 1));
    EXPECT_NE(base, case_seed(43, "K_RED/l", {2}, 0));
}

TEST(Partitions, BinomialSplitOfThree)
{
    const std::vector<char> s{'a', 'b', 'c'};
    std::vector<std::pair<std::string, std::string>> got;
    for (PartitionStream ps(3, {1, 2}); !ps.done(); ps.advance()) {
        std::string first;
        std::string second;
        for (auto i : ps.current()[0]) {
            first += s[i];
        }
        for (auto i : ps.current()[1]) {
            second += s[i];
        }
        got.emplace_back(first, second);
    }
    const std::vector<std::pair<std::string, std::string>> expected{{"a", "bc"}, {"b", "ac"}, {"c", "ab"}};
    EXPECT_EQ(got, expected);
}

TEST(Partitions, EmptySetHasOnePartition)
{
    int count = 0;
    for (PartitionStream ps(0, {0, 0}); !ps.done(); ps.advance()) {
        ++count;
        EXPECT_TRUE(ps.current()[0].empty());
        EXPECT_TRUE(ps.current()[1].empty());
    }
    EXPECT_EQ(count, 1);
}

TEST(Partitions, SignatureMismatch)
{
    EXPECT_THROW(PartitionStream(2, {2, 1}), CardinalityError);
    EXPECT_THROW(TwoSetPartitionStream(2, {1, 1}, 1, {0, 0}), CardinalityError);
    ParameterSet s{Rational(1)};
    EXPECT_THROW(for_each_split(s, 2, [](const ParameterSet&, const ParameterSet&) {}), CardinalityError);
}

// Every signature of |S| <= 8 into up to three blocks yields exactly the
// multinomial number of distinct, disjoint, covering partitions.
TEST(Partitions, CountMatchesMultinomial)
{
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t k1 = 0; k1 <= n; ++k1) {
            for (std::size_t k2 = 0; k1 + k2 <= n; ++k2) {
                const std::vector<std::size_t> sig{k1, k2, n - k1 - k2};
                std::set<IndexPartition> seen;
                for (PartitionStream ps(n, sig); !ps.done(); ps.advance()) {
                    const auto& parts = ps.current();
                    std::vector<std::size_t> flat;
                    for (std::size_t b = 0; b < parts.size(); ++b) {
                        ASSERT_EQ(parts[b].size(), sig[b]);
                        ASSERT_TRUE(std::is_sorted(parts[b].begin(), parts[b].end()));
                        flat.insert(flat.end(), parts[b].begin(), parts[b].end());
                    }
                    std::sort(flat.begin(), flat.end());
                    std::vector<std::size_t> iota(n);
                    std::iota(iota.begin(), iota.end(), std::size_t{0});
                    ASSERT_EQ(flat, iota);
                    EXPECT_TRUE(seen.insert(parts).second);
                }
                EXPECT_EQ(seen.size(), multinomial(sig)) << "n=" << n << " sig=" << k1 << "," << k2;
            }
        }
    }
}

TEST(Partitions, TwoSetProductCount)
{
    int count = 0;
    for (TwoSetPartitionStream ts(2, {1, 1}, 1, {1, 0}); !ts.done(); ts.advance()) {
        ++count;
    }
    EXPECT_EQ(count, 2);
    count = 0;
    for (TwoSetPartitionStream ts(0, {0, 0}, 0, {0, 0}); !ts.done(); ts.advance()) {
        ++count;
    }
    EXPECT_EQ(count, 1);
    count = 0;
    for (TwoSetPartitionStream ts(4, {2, 2}, 3, {1, 2}); !ts.done(); ts.advance()) {
        ++count;
    }
    EXPECT_EQ(count, 6 * 3);
}

// Relabelling the two blocks of equal size permutes the stream but yields the
// same set of unordered splits.
TEST(Partitions, SwappingEqualBlocksPermutesTheStream)
{
    std::set<std::set<std::vector<std::size_t>>> a;
    std::set<std::set<std::vector<std::size_t>>> b;
    std::vector<IndexPartition> order;
    for (PartitionStream ps(6, {3, 3}); !ps.done(); ps.advance()) {
        a.insert({ps.current()[0], ps.current()[1]});
        order.push_back({ps.current()[1], ps.current()[0]});
    }
    for (const auto& p : order) {
        b.insert({p[0], p[1]});
    }
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 10U);
}

TEST(Partitions, ForEachSplitMatchesBitmaskEnumeration)
{
    const ParameterSet s{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
    for (std::size_t k = 0; k <= s.size(); ++k) {
        std::multiset<std::pair<ParameterSet, ParameterSet>> lib;
        std::multiset<std::pair<ParameterSet, ParameterSet>> ref;
        for_each_split(s, k, [&](const ParameterSet& i, const ParameterSet& ii) { lib.emplace(i, ii); });
        gl3hc::testing::bitmask_splits(s, k, [&](const auto& i, const auto& ii) { ref.emplace(i, ii); });
        EXPECT_EQ(lib, ref);
        EXPECT_EQ(lib.size(), binomial(s.size(), k));
    }
}

TEST(Partitions, Multinomial)
{
    EXPECT_EQ(multinomial({}), 1U);
    EXPECT_EQ(multinomial({0, 0}), 1U);
    EXPECT_EQ(multinomial({1, 2}), 3U);
    EXPECT_EQ(multinomial({2, 2, 2}), 90U);
    EXPECT_EQ(binomial(8, 4), 70U);
    EXPECT_EQ(binomial(3, 5), 0U);
}
