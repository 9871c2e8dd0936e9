#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zelred/classical_limit.hpp"

using namespace zelred;

namespace {

std::int64_t total_mass(const Decomposition& d) {
    std::int64_t n = 0;
    for (const auto& [p, mult] : d) n += mult * hook_dimension(p);
    return n;
}

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Classical, PartitionHelpers) {
    EXPECT_TRUE(is_partition({3, 1, 1}));
    EXPECT_FALSE(is_partition({1, 2}));
    EXPECT_FALSE(is_partition({2, 0}));
    EXPECT_EQ(conjugate({3, 1}), (Partition{2, 1, 1}));
    EXPECT_EQ(partition_str({2, 1, 1}), "(2,1,1)");
    EXPECT_EQ(partitions(4).size(), 5u);
    EXPECT_EQ(partitions(4).front(), (Partition{4}));
    EXPECT_EQ(partitions(4).back(), (Partition{1, 1, 1, 1}));
}

TEST(Classical, HookDimensionExamples) {
    EXPECT_EQ(hook_dimension({5}), 1);
    EXPECT_EQ(hook_dimension({2, 1}), 2);
    EXPECT_EQ(hook_dimension({2, 2}), 2);
    EXPECT_EQ(hook_dimension({3, 2, 1}), 16);
}

TEST(Classical, HookDimensionCountsTableaux) {
    for (int d = 1; d <= 9; ++d) {
        std::int64_t squares = 0;
        for (const auto& p : partitions(d)) {
            ASSERT_EQ(hook_dimension(p), oracle::standard_tableaux(p)) << partition_str(p);
            squares += hook_dimension(p) * hook_dimension(p);
        }
        ASSERT_EQ(squares, factorial(d));
    }
}

TEST(Classical, BorelInduction) {
    EXPECT_EQ(borel_induction_decomposition(1), (Decomposition{{{1}, 1}}));
    EXPECT_EQ(borel_induction_decomposition(3), (Decomposition{{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}));
    const auto five = borel_induction_decomposition(5);
    EXPECT_EQ(five.size(), 7u);
    std::int64_t squares = 0;
    for (const auto& [p, mult] : five) squares += mult * mult;
    EXPECT_EQ(squares, 120);
}

TEST(Classical, RegimeGate) {
    EXPECT_NO_THROW(borel_induction_decomposition(4, Regime{11, 5}));
    EXPECT_THROW(borel_induction_decomposition(5, Regime{11, 5}), RegimeError);
    EXPECT_THROW(borel_induction_decomposition(2, Regime{3, 5}), RegimeError);
}

TEST(Classical, NumberedBoxRule) {
    EXPECT_EQ(induct_diagrams({1, 1}, {1}), (Decomposition{{{2, 1}, 1}, {{1, 1, 1}, 1}}));
    EXPECT_EQ(induct_diagrams({2}, {2}), (Decomposition{{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}}));
    EXPECT_EQ(induct_diagrams({}, {3, 1}), (Decomposition{{{3, 1}, 1}}));
    EXPECT_EQ(induct_diagrams({2, 1}, {2, 1}).at({3, 2, 1}), 2);
}

TEST(Classical, EllipticPatterns) {
    EXPECT_EQ(elliptic_reduction_classical(parse_pattern("<3")), (Decomposition{{{1, 1, 1, 1}, 1}}));
    EXPECT_EQ(elliptic_reduction_classical(parse_pattern(">1,<2")), (Decomposition{{{2, 1, 1}, 1}}));
    EXPECT_EQ(elliptic_reduction_classical(parse_pattern("<1,>1,<1")), (Decomposition{{{2, 2}, 1}, {{2, 1, 1}, 1}}));
    EXPECT_THROW(elliptic_reduction_classical(parse_pattern(">1,<1,>1")), UnsupportedPattern);
    EXPECT_THROW(parse_pattern("<1,?2"), UnsupportedPattern);
}

TEST(Classical, TwoArrowPatternsAreSingleHooks) {
    for (int s = 1; s <= 6; ++s) {
        for (int i = 0; i < s; ++i) {
            for (bool left_first : {true, false}) {
                std::vector<ArrowRun> pattern{{left_first, i}, {!left_first, s - 1 - i}};
                const auto dec = elliptic_reduction_classical(pattern);
                ASSERT_EQ(dec.size(), 1u);
                ASSERT_EQ(dec.begin()->second, 1);
                const Partition& p = dec.begin()->first;
                ASSERT_EQ(partition_size(p), s);
                ASSERT_TRUE(p.size() == 1 || p[1] <= 1) << partition_str(p);
            }
        }
    }
}

TEST(Classical, CharacterTableSmall) {
    const auto t2 = character_oracle(2);
    EXPECT_EQ(t2.value({2}, {2}), 1);
    EXPECT_EQ(t2.value({1, 1}, {2}), -1);
    const auto t3 = character_oracle(3);
    EXPECT_EQ(t3.value({3}, {1, 1, 1}), 1);
    EXPECT_EQ(t3.value({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(t3.value({1, 1, 1}, {1, 1, 1}), 1);
    EXPECT_EQ(t3.value({2, 1}, {3}), -1);
    EXPECT_THROW(character_oracle(8), std::invalid_argument);
}

TEST(Classical, CharacterTableMatchesFrobeniusFormula) {
    for (int d = 1; d <= 7; ++d) {
        const auto table = character_oracle(d);
        for (const auto& lambda : oracle::partitions(d))
            for (const auto& mu : oracle::partitions(d)) {
                ASSERT_EQ(table.value(lambda, mu), oracle::frobenius_character(lambda, mu))
                    << partition_str(lambda) << " on " << partition_str(mu);
            }
        for (const auto& mu : oracle::partitions(d)) ASSERT_EQ(centralizer_order(mu), oracle::centralizer(mu));
    }
}

TEST(Classical, ColumnOrthogonality) {
    const auto t = character_oracle(5);
    for (std::size_t a = 0; a < t.classes.size(); ++a)
        for (std::size_t b = 0; b < t.classes.size(); ++b) {
            std::int64_t sum = 0;
            for (std::size_t r = 0; r < t.irreducibles.size(); ++r) sum += t.values[r][a] * t.values[r][b];
            EXPECT_EQ(sum, a == b ? t.centralizer[a] : 0);
        }
}

TEST(Classical, NumberedBoxRuleMatchesOracleExhaustively) {
    for (int n = 0; n <= 6; ++n)
        for (int n1 = 0; n1 <= n; ++n1)
            for (const auto& a : partitions(n1))
                for (const auto& b : partitions(n - n1)) {
                    const auto dec = induct_diagrams(a, b);
                    for (const auto& target : partitions(n)) {
                        const auto it = dec.find(target);
                        const std::int64_t got = it == dec.end() ? 0 : it->second;
                        ASSERT_EQ(got, oracle_induction_multiplicity(a, b, target));
                        if (n1 > 0 && n1 < n) ASSERT_EQ(got, oracle::induction_multiplicity(a, b, target));
                    }
                }
}

TEST(ClassicalProperty, InductionMassAndCommutativity) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n1 = size(rng), n2 = size(rng);
        const auto a = oracle::random_partition(rng, n1);
        const auto b = oracle::random_partition(rng, n2);
        const auto ab = induct_diagrams(a, b);
        ASSERT_EQ(ab, induct_diagrams(b, a));
        ASSERT_EQ(total_mass(ab), binomial(n1 + n2, n1) * hook_dimension(a) * hook_dimension(b));
        for (const auto& [p, mult] : ab) {
            ASSERT_GT(mult, 0);
            ASSERT_EQ(partition_size(p), n1 + n2);
        }
        ASSERT_EQ(induct_diagrams(conjugate(a), conjugate(b)).size(), ab.size());
    }
}

TEST(ClassicalProperty, BorelMatchesIteratedBoxes) {
    for (int d = 1; d <= 7; ++d) {
        Decomposition acc{{{1}, 1}};
        for (int k = 2; k <= d; ++k) {
            Decomposition next;
            for (const auto& [p, mult] : acc)
                for (const auto& [q, m2] : induct_diagrams(p, {1})) next[q] += mult * m2;
            acc = next;
        }
        ASSERT_EQ(acc, borel_induction_decomposition(d)) << d;
    }
}

TEST(Classical, GrothendieckConversion) {
    const auto e = to_groth(Decomposition{{{2, 1}, 2}});
    EXPECT_EQ(e.coefficient("(2,1)"), 2);
    EXPECT_EQ(decomposition_json(Decomposition{{{2, 1}, 2}}), R"([{"partition": [2, 1], "mult": 2}])");
    EXPECT_EQ(sub(add(Decomposition{{{1}, 1}}, Decomposition{{{1}, 2}}), Decomposition{{{1}, 3}}), Decomposition{});
}
