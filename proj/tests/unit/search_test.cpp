#include "amicable/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "amicable/factor.hpp"
#include "amicable/oracle.hpp"

using namespace amicable;

namespace {

std::vector<u64> drain(CandidateStream s)
{
    std::vector<u64> out;
    while (const auto c = s.next()) {
        out.push_back(*c);
    }
    return out;
}

bool odd_square(u64 c)
{
    return c % 2 == 1 && is_square_number(c);
}

bool even_with_square_odd_part(u64 c)
{
    if (c % 2 != 0) {
        return false;
    }
    while (c % 2 == 0) {
        c /= 2;
    }
    return is_square_number(c);
}

Checkpoint without_timing(Checkpoint cp)
{
    cp.wall_microseconds = 0;
    return cp;
}

}  // namespace

TEST(SearchShard, Validation)
{
    EXPECT_NO_THROW((SearchShard{0, 1, 2}.validate()));
    EXPECT_THROW((SearchShard{1, 1, 100}.validate()), ConfigError);
    EXPECT_THROW((SearchShard{0, 0, 100}.validate()), ConfigError);
    EXPECT_THROW((SearchShard{0, 1, 1}.validate()), ConfigError);
    EXPECT_THROW((SearchShard{0, 1, kArithmeticBound + 1}.validate()), RangeError);
}

TEST(OddSquareCandidates, Examples)
{
    EXPECT_EQ(enumerate_odd_square_candidates({0, 1, 100}), (std::vector<u64>{1, 9, 25, 49, 81}));

    auto s0 = enumerate_odd_square_candidates({0, 2, 100});
    auto s1 = enumerate_odd_square_candidates({1, 2, 100});
    EXPECT_FALSE(s0.empty());
    EXPECT_FALSE(s1.empty());
    std::vector<u64> merged;
    std::merge(s0.begin(), s0.end(), s1.begin(), s1.end(), std::back_inserter(merged));
    EXPECT_EQ(merged, (std::vector<u64>{1, 9, 25, 49, 81}));

    EXPECT_EQ(enumerate_odd_square_candidates({0, 1, 100'000'000}).size(), 5000u);
}

TEST(EvenCandidates, Examples)
{
    EXPECT_EQ(enumerate_even_candidates({0, 1, 50}), (std::vector<u64>{2, 4, 8, 16, 18, 32, 36, 50}));
    EXPECT_EQ(enumerate_even_candidates({0, 1, 2}), (std::vector<u64>{2}));
    const auto big = enumerate_even_candidates({0, 1, 100'000'000});
    EXPECT_EQ(big.size(), 12071u);
    EXPECT_LT(big.size(), 20'000u);
}

TEST(Candidates, SoundAndCompleteAgainstBruteFilter)
{
    for (const u64 limit : {u64{2}, u64{3}, u64{17}, u64{1000}, u64{100'000}}) {
        std::vector<u64> odd_expected;
        std::vector<u64> even_expected;
        for (u64 c = 1; c <= limit; ++c) {
            if (odd_square(c)) {
                odd_expected.push_back(c);
            }
            if (even_with_square_odd_part(c)) {
                even_expected.push_back(c);
            }
        }
        const SearchShard shard{0, 1, limit};
        EXPECT_EQ(enumerate_odd_square_candidates(shard), odd_expected) << limit;
        EXPECT_EQ(enumerate_even_candidates(shard), even_expected) << limit;

        for (const u64 c : enumerate_even_candidates(shard)) {
            ASSERT_TRUE(is_perfect_square(split_even(c).odd_part));
        }
        for (const u64 c : enumerate_odd_square_candidates(shard)) {
            ASSERT_TRUE(is_perfect_square(factorize(c)));
        }
    }
}

TEST(Candidates, ShardsPartitionTheStream)
{
    for (const u64 limit : {u64{100}, u64{4097}, u64{100'000}}) {
        const auto whole = drain(CandidateStream({0, 1, limit}));
        ASSERT_TRUE(std::is_sorted(whole.begin(), whole.end()));
        ASSERT_EQ(std::adjacent_find(whole.begin(), whole.end()), whole.end());
        for (u64 count = 1; count <= 8; ++count) {
            std::multiset<u64> seen;
            for (u64 i = 0; i < count; ++i) {
                const auto part = drain(CandidateStream({i, count, limit}));
                ASSERT_TRUE(std::is_sorted(part.begin(), part.end()));
                seen.insert(part.begin(), part.end());
            }
            ASSERT_EQ(std::vector<u64>(seen.begin(), seen.end()), whole) << limit << " / " << count;
        }
    }
}

TEST(Candidates, ResumePointSkipsCoveredValues)
{
    const SearchShard shard{1, 3, 100'000};
    const auto whole = drain(CandidateStream(shard));
    for (std::size_t cut = 0; cut < whole.size(); cut += 17) {
        const auto rest = drain(CandidateStream(shard, whole[cut]));
        ASSERT_EQ(rest, std::vector<u64>(whole.begin() + static_cast<std::ptrdiff_t>(cut) + 1, whole.end()));
    }
}

TEST(CheckCandidate, Examples)
{
    const auto nine = check_candidate(9);
    EXPECT_EQ(nine.status, CandidateCheck::Status::rejected);
    EXPECT_EQ(nine.partner, 4u);
    EXPECT_FALSE(nine.verdict);

    const auto friendly = check_candidate(220);
    EXPECT_EQ(friendly.status, CandidateCheck::Status::rejected);
    EXPECT_EQ(friendly.partner, 284u);

    const auto two = check_candidate(2);
    EXPECT_EQ(two.status, CandidateCheck::Status::rejected);
    EXPECT_EQ(two.partner, 1u);

    EXPECT_THROW(check_candidate(1), DomainError);
}

TEST(CheckCandidate, OverflowBecomesUnresolved)
{
    // A multiple of lcm(1..31) just below the bound: sigma exceeds 2^64.
    const u64 abundant = 4'611'671'865'210'009'600ull;
    ASSERT_LE(abundant, kArithmeticBound);
    EXPECT_EQ(check_candidate(abundant).status, CandidateCheck::Status::unresolved);

    // 9 * 2^58: partner (2^59 - 1) * 13 - 9 * 2^58 is odd but above 2^62.
    const u64 c = u64{9} << 58;
    const auto r = check_candidate(c);
    EXPECT_EQ(r.status, CandidateCheck::Status::unresolved);
    ASSERT_TRUE(r.partner);
    EXPECT_EQ(*r.partner, ((u64{1} << 59) - 1) * 13 - c);
    EXPECT_GT(*r.partner, kArithmeticBound);
}

TEST(EvaluatePair, SymmetricAndDetectsNonPairs)
{
    const auto v = evaluate_pair(2, 1);
    EXPECT_EQ(v.m, 2u);
    EXPECT_EQ(v.n, 1u);
    EXPECT_EQ(v.s_m, 1u);
    EXPECT_EQ(v.s_n, 0u);
    EXPECT_FALSE(v.is_amicable);
    EXPECT_EQ(evaluate_pair(1, 2), v);
    EXPECT_THROW(evaluate_pair(220, 284), DomainError);
}

TEST(ConstrainedSearch, SmallLimitFindsNothing)
{
    const auto cp = run_constrained_search({0, 1, 100});
    EXPECT_TRUE(cp.complete);
    EXPECT_TRUE(cp.pairs_found.empty());
    // Every candidate except 1, which check_candidate does not accept.
    EXPECT_EQ(cp.candidates_examined, drain(CandidateStream({0, 1, 100})).size() - 1);
}

TEST(ConstrainedSearch, ShardsSumToSingleRun)
{
    const auto single = run_constrained_search({0, 1, 100});
    const auto a = run_constrained_search({0, 2, 100});
    const auto b = run_constrained_search({1, 2, 100});
    EXPECT_EQ(a.candidates_examined + b.candidates_examined, single.candidates_examined);
    EXPECT_EQ(without_timing(merge_shards({a, b})), without_timing(single));
    EXPECT_EQ(without_timing(merge_shards({b, a})), without_timing(single));
}

TEST(ConstrainedSearch, ResumeMatchesUninterrupted)
{
    const SearchShard shard{0, 1, 1'000'000};
    const auto full = run_constrained_search(shard);

    SearchOptions stop;
    stop.stop_after = 123;
    auto partial = run_constrained_search(shard, std::nullopt, stop);
    EXPECT_FALSE(partial.complete);
    EXPECT_EQ(partial.candidates_examined, 123u);
    while (!partial.complete) {
        partial = run_constrained_search(shard, partial, stop);
    }
    EXPECT_EQ(without_timing(partial), without_timing(full));
}

TEST(ConstrainedSearch, CheckpointCallbackCadence)
{
    std::vector<u64> seen;
    SearchOptions opts;
    opts.checkpoint_every = 100;
    opts.on_checkpoint = [&](const Checkpoint& cp) { seen.push_back(cp.candidates_examined); };
    const auto cp = run_constrained_search({0, 1, 1'000'000}, std::nullopt, opts);
    ASSERT_FALSE(seen.empty());
    EXPECT_EQ(seen.front(), 100u);
    EXPECT_EQ(seen.size(), cp.candidates_examined / 100);
}

TEST(ConstrainedSearch, RejectsMismatchedCheckpoint)
{
    const auto cp = run_constrained_search({0, 2, 100});
    EXPECT_THROW(run_constrained_search({1, 2, 100}, cp), ConfigError);
    EXPECT_THROW(run_constrained_search({0, 2, 200}, cp), ConfigError);
    auto scan = run_exhaustive_scan(100);
    scan.shard = {0, 2, 100};
    EXPECT_THROW(run_constrained_search({0, 2, 100}, scan), ConfigError);
}

TEST(ExhaustiveScan, Examples)
{
    const auto ten = run_exhaustive_scan(10);
    EXPECT_TRUE(ten.pairs_found.empty());
    EXPECT_EQ(ten.candidates_examined, 9u);

    const auto three_hundred = run_exhaustive_scan(300);
    EXPECT_EQ(three_hundred.pairs_found, (std::vector<AmicablePair>{{220, 284}}));

    const auto tenk = run_exhaustive_scan(10'000);
    std::vector<std::pair<u64, u64>> got;
    for (const auto& p : tenk.pairs_found) {
        EXPECT_EQ(classify(p), ParityClass::even_even);
        got.emplace_back(p.smaller, p.larger);
    }
    EXPECT_EQ(got, oracle::brute_amicable_pairs(10'000));
    EXPECT_EQ(got.size(), 5u);
}

TEST(ExhaustiveScan, CapacityIsEnforced)
{
    EXPECT_THROW(run_exhaustive_scan(1001, 1000), RangeError);
    EXPECT_NO_THROW(run_exhaustive_scan(1000, 1000));
}

TEST(ExhaustiveScan, KnownOddOddPairIsClassified)
{
    // Smallest odd-odd amicable pair.
    const AmicablePair p{12'285, 14'595};
    EXPECT_EQ(classify(p), ParityClass::odd_odd);
    const auto scan = run_exhaustive_scan(15'000);
    EXPECT_NE(std::find(scan.pairs_found.begin(), scan.pairs_found.end(), p), scan.pairs_found.end());
    EXPECT_EQ(classify(AmicablePair{2, 1}), ParityClass::mixed);
}

TEST(ExhaustiveScan, MixedSubsetMatchesConstrainedSearch)
{
    const u64 limit = 200'000;
    const auto scan = run_exhaustive_scan(limit);
    const auto constrained = run_constrained_search({0, 1, limit});
    std::vector<AmicablePair> mixed;
    for (const auto& p : scan.pairs_found) {
        if (classify(p) == ParityClass::mixed) {
            mixed.push_back(p);
        }
    }
    std::vector<AmicablePair> constrained_in_range;
    for (const auto& p : constrained.pairs_found) {
        if (p.larger <= limit) {
            constrained_in_range.push_back(p);
        }
    }
    EXPECT_EQ(mixed, constrained_in_range);
    EXPECT_TRUE(mixed.empty());
}

TEST(PseudoPairs, ConstrainedEnumeratorsReachEveryAdmissibleMember)
{
    // Numbers passing the necessary conditions (but not amicable) must all be
    // in the sharded search space. The conditions split per member, so each
    // side is checked against a fixed admissible partner.
    const u64 limit = 50'000;
    std::set<u64> reachable;
    for (u64 i = 0; i < 3; ++i) {
        const auto part = drain(CandidateStream({i, 3, limit}));
        reachable.insert(part.begin(), part.end());
    }
    std::size_t checked = 0;
    for (u64 c = 2; c <= limit; ++c) {
        const bool admissible = c % 2 == 0 ? mixed_parity_conditions(c, 9).admissible
                                           : mixed_parity_conditions(18, c).admissible;
        if (admissible) {
            ++checked;
            ASSERT_TRUE(reachable.count(c)) << c;
        }
    }
    EXPECT_GT(checked, 100u);
}

TEST(PairVerdict, AmicabilityIsSymmetricUnderSwap)
{
    // No mixed-parity pair is known, so exercise the symmetry on every
    // verdict the constrained search can form and on the (2, 1) edge.
    for (u64 c = 2; c <= 5000; ++c) {
        const u64 s = aliquot_sum(c);
        if (s == 0 || s % 2 == c % 2) {
            continue;
        }
        const auto forward = evaluate_pair(c, s);
        const auto backward = evaluate_pair(s, c);
        ASSERT_EQ(forward.is_amicable, backward.is_amicable);
        ASSERT_EQ(forward, backward);
        ASSERT_EQ(forward.is_amicable, forward.s_m == forward.n && forward.s_n == forward.m && forward.m != forward.n);
    }
}
