#include "amicable/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "amicable/errors.hpp"
#include "amicable/factor.hpp"

using namespace amicable;

TEST(BruteAliquot, Examples)
{
    EXPECT_EQ(oracle::brute_aliquot(1), 0u);
    EXPECT_EQ(oracle::brute_aliquot(28), 28u);
    EXPECT_EQ(oracle::brute_aliquot(16), 15u);
}

TEST(BruteDivisorCount, Examples)
{
    EXPECT_EQ(oracle::brute_divisor_count(1), 0u);
    EXPECT_EQ(oracle::brute_divisor_count(81), 4u);
    EXPECT_EQ(oracle::brute_divisor_count(360), 23u);
}

TEST(Oracle, RangeErrors)
{
    EXPECT_THROW(oracle::brute_aliquot(0), RangeError);
    EXPECT_THROW(oracle::brute_aliquot(oracle::kOracleBound + 1), RangeError);
    EXPECT_THROW(oracle::brute_divisor_count(0), RangeError);
    EXPECT_NO_THROW(oracle::brute_divisor_count(oracle::kOracleBound));
}

TEST(Oracle, PairsBelowTenThousand)
{
    using P = std::pair<std::uint64_t, std::uint64_t>;
    EXPECT_EQ(oracle::brute_amicable_pairs(10'000),
              (std::vector<P>{{220, 284}, {1184, 1210}, {2620, 2924}, {5020, 5564}, {6232, 6368}}));
    EXPECT_TRUE(oracle::brute_amicable_pairs(10).empty());
}

TEST(Oracle, AgreesWithEngineOnRandomLargeInputs)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> dist(100'000, 1'000'000'000);
    for (int i = 0; i < 10'000; ++i) {
        const auto n = dist(rng);
        ASSERT_EQ(oracle::brute_aliquot(n), aliquot_sum(n)) << n;
        ASSERT_EQ(oracle::brute_divisor_count(n), proper_divisor_count(factorize(n))) << n;
    }
}
