#include "amicable/search.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "amicable/aliquot_sieve.hpp"
#include "amicable/factor.hpp"

namespace amicable {

namespace {

using Clock = std::chrono::steady_clock;

/// Smallest odd q with multiplier * q^2 > start_after.
u128 first_odd_root_above(u64 start_after, unsigned shift)
{
    u128 q = u128{isqrt(start_after >> shift)} + 1;
    if (q % 2 == 0) {
        ++q;
    }
    return q;
}

/// Advances odd q to the first generator index i = (q-1)/2 with
/// (i + offset) % count == index.
u128 align_to_shard(u128 q, u64 offset, const SearchShard& shard)
{
    const u128 i = (q - 1) / 2;
    const u128 count = shard.shard_count;
    const u128 residue = (i + offset) % count;
    const u128 shift = (shard.shard_index + count - residue) % count;
    return 2 * (i + shift) + 1;
}

u64 elapsed_us(Clock::time_point since)
{
    return static_cast<u64>(
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - since).count());
}

}  // namespace

void SearchShard::validate() const
{
    if (shard_count == 0 || shard_index >= shard_count) {
        throw ConfigError("shard index " + std::to_string(shard_index) + " is not below shard count " +
                          std::to_string(shard_count));
    }
    if (limit < 2) {
        throw ConfigError("search limit must be >= 2, got " + std::to_string(limit));
    }
    require_in_bound(limit, "search limit");
}

PairVerdict evaluate_pair(u64 a, u64 b)
{
    if (a % 2 == b % 2) {
        throw DomainError("evaluate_pair: " + std::to_string(a) + " and " + std::to_string(b) +
                          " have the same parity");
    }
    PairVerdict v;
    v.m = a % 2 == 0 ? a : b;
    v.n = a % 2 == 0 ? b : a;
    v.s_m = aliquot_sum(v.m);
    v.s_n = aliquot_sum(v.n);
    v.is_amicable = v.s_m == v.n && v.s_n == v.m && v.m != v.n;
    v.conditions = mixed_parity_conditions(v.m, v.n);
    return v;
}

ParityClass classify(const AmicablePair& pair) noexcept
{
    const bool a_even = pair.smaller % 2 == 0;
    const bool b_even = pair.larger % 2 == 0;
    if (a_even != b_even) {
        return ParityClass::mixed;
    }
    return a_even ? ParityClass::even_even : ParityClass::odd_odd;
}

std::string_view to_string(ParityClass c) noexcept
{
    switch (c) {
    case ParityClass::even_even: return "even-even";
    case ParityClass::odd_odd: return "odd-odd";
    case ParityClass::mixed: return "mixed";
    }
    return "?";
}

std::string_view to_string(SearchMode m) noexcept
{
    return m == SearchMode::constrained ? "constrained" : "exhaustive";
}

OddSquareStream::OddSquareStream(const SearchShard& shard, u64 start_after)
    : limit_(shard.limit), step_(shard.shard_count)
{
    shard.validate();
    const u128 q = align_to_shard(first_odd_root_above(start_after, 0), 0, shard);
    // Anything past 2^32 squares beyond every admissible limit.
    q_ = q > (u128{1} << 32) ? (u64{1} << 32) + 1 : static_cast<u64>(q);
}

std::optional<u64> OddSquareStream::next()
{
    const u128 square = u128{q_} * q_;
    if (square > limit_) {
        return std::nullopt;
    }
    const u128 following = u128{q_} + 2 * u128{step_};
    q_ = following > (u128{1} << 32) ? (u64{1} << 32) + 1 : static_cast<u64>(following);
    return static_cast<u64>(square);
}

EvenCandidateStream::EvenCandidateStream(const SearchShard& shard, u64 start_after)
    : limit_(shard.limit), step_(shard.shard_count)
{
    shard.validate();
    for (unsigned a = 1; a < 63 && (u64{1} << a) <= limit_; ++a) {
        const u128 q = align_to_shard(first_odd_root_above(start_after, a), a, shard);
        if (q <= (u128{1} << 32)) {
            push(a, static_cast<u64>(q));
        }
    }
}

void EvenCandidateStream::push(unsigned a, u64 q)
{
    const u128 value = (u128{q} * q) << a;
    if (value <= limit_) {
        heads_.push({static_cast<u64>(value), a, q});
    }
}

std::optional<u64> EvenCandidateStream::next()
{
    if (heads_.empty()) {
        return std::nullopt;
    }
    const Head top = heads_.top();
    heads_.pop();
    const u128 following = u128{top.q} + 2 * u128{step_};
    if (following <= (u128{1} << 32)) {
        push(top.a, static_cast<u64>(following));
    }
    return top.value;
}

CandidateStream::CandidateStream(const SearchShard& shard, u64 start_after)
    : odd_(shard, start_after), even_(shard, start_after)
{
    odd_head_ = odd_.next();
    even_head_ = even_.next();
}

std::optional<u64> CandidateStream::next()
{
    if (!odd_head_ && !even_head_) {
        return std::nullopt;
    }
    if (!even_head_ || (odd_head_ && *odd_head_ < *even_head_)) {
        return std::exchange(odd_head_, odd_.next());
    }
    return std::exchange(even_head_, even_.next());
}

std::vector<u64> enumerate_odd_square_candidates(const SearchShard& shard)
{
    std::vector<u64> out;
    OddSquareStream stream(shard);
    while (const auto c = stream.next()) {
        out.push_back(*c);
    }
    return out;
}

std::vector<u64> enumerate_even_candidates(const SearchShard& shard)
{
    std::vector<u64> out;
    EvenCandidateStream stream(shard);
    while (const auto c = stream.next()) {
        out.push_back(*c);
    }
    return out;
}

CandidateCheck check_candidate(u64 c)
{
    if (c < 2) {
        throw DomainError("check_candidate: candidate must be >= 2");
    }
    CandidateCheck result;
    u64 partner = 0;
    try {
        partner = aliquot_sum(c);
    } catch (const OverflowError&) {
        result.status = CandidateCheck::Status::unresolved;
        return result;
    }
    result.partner = partner;
    if (partner % 2 == c % 2 || partner < 2) {
        return result;
    }
    if (partner > kArithmeticBound) {
        result.status = CandidateCheck::Status::unresolved;
        return result;
    }
    u64 back = 0;
    try {
        back = aliquot_sum(partner);
    } catch (const OverflowError&) {
        result.status = CandidateCheck::Status::unresolved;
        return result;
    }
    if (back != c) {
        return result;
    }
    result.status = CandidateCheck::Status::pair;
    result.verdict = evaluate_pair(c, partner);
    return result;
}

Checkpoint run_constrained_search(const SearchShard& shard,
                                  const std::optional<Checkpoint>& resume_from,
                                  const SearchOptions& options)
{
    shard.validate();
    Checkpoint cp;
    if (resume_from) {
        if (resume_from->mode != SearchMode::constrained) {
            throw ConfigError("checkpoint was written by an exhaustive scan, not a constrained search");
        }
        if (!(resume_from->shard == shard)) {
            throw ConfigError("checkpoint shard (" + std::to_string(resume_from->shard.shard_index) + "/" +
                              std::to_string(resume_from->shard.shard_count) + ", limit " +
                              std::to_string(resume_from->shard.limit) + ") does not match requested shard");
        }
        cp = *resume_from;
        if (cp.complete) {
            return cp;
        }
    } else {
        cp.mode = SearchMode::constrained;
        cp.shard = shard;
    }

    const auto started = Clock::now();
    const u64 wall_before = cp.wall_microseconds;
    auto last_flush = started;
    u64 since_flush = 0;
    u64 this_run = 0;

    // 1 is an odd square but has no proper divisors to pair with.
    CandidateStream stream(shard, std::max<u64>(cp.last_completed_candidate, 1));
    while (true) {
        if (options.stop_after && this_run >= *options.stop_after) {
            cp.wall_microseconds = wall_before + elapsed_us(started);
            return cp;
        }
        const auto c = stream.next();
        if (!c) {
            break;
        }
        const CandidateCheck check = check_candidate(*c);
        ++cp.candidates_examined;
        ++this_run;
        if (check.status == CandidateCheck::Status::unresolved) {
            ++cp.unresolved;
        } else if (check.status == CandidateCheck::Status::pair && *c < *check.partner) {
            // The larger member reports the same pair; keep it once.
            cp.pairs_found.push_back({*c, *check.partner});
        }
        cp.last_completed_candidate = *c;

        if (options.on_checkpoint) {
            ++since_flush;
            const auto now = Clock::now();
            if (since_flush >= options.checkpoint_every || now - last_flush >= options.checkpoint_interval) {
                cp.wall_microseconds = wall_before + elapsed_us(started);
                options.on_checkpoint(cp);
                since_flush = 0;
                last_flush = now;
            }
        }
    }
    cp.complete = true;
    cp.wall_microseconds = wall_before + elapsed_us(started);
    return cp;
}

Checkpoint run_exhaustive_scan(u64 limit, u64 capacity)
{
    constexpr u64 kStorageCap = 0xFFFF'FFFEull;
    capacity = std::min(capacity, kStorageCap);
    if (limit > capacity) {
        throw RangeError("exhaustive scan limit " + std::to_string(limit) + " exceeds sieve capacity " +
                         std::to_string(capacity));
    }
    const auto started = Clock::now();
    Checkpoint cp;
    cp.mode = SearchMode::exhaustive;
    cp.shard = {0, 1, std::max<u64>(limit, 2)};
    cp.complete = true;
    if (limit < 2) {
        cp.last_completed_candidate = limit;
        return cp;
    }

    // s(n) clipped to 0 when it leaves [1, limit]; only in-range partners matter.
    std::vector<std::uint32_t> sums(limit + 1, 0);
    for_each_aliquot_segment(limit, [&](u64 first, std::span<const u64> s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            sums[first + i] = s[i] <= limit ? static_cast<std::uint32_t>(s[i]) : 0;
        }
    });
    for (u64 a = 2; a <= limit; ++a) {
        const u64 b = sums[a];
        if (a < b && sums[b] == a) {
            cp.pairs_found.push_back({a, b});
        }
    }
    cp.last_completed_candidate = limit;
    cp.candidates_examined = limit - 1;
    cp.wall_microseconds = elapsed_us(started);
    return cp;
}

Checkpoint merge_shards(const std::vector<Checkpoint>& shards)
{
    if (shards.empty()) {
        throw ConfigError("merge_shards: no shards given");
    }
    Checkpoint merged;
    merged.mode = shards.front().mode;
    merged.shard = {0, 1, shards.front().shard.limit};
    merged.complete = true;
    std::vector<bool> seen(shards.front().shard.shard_count, false);
    for (const auto& s : shards) {
        if (s.mode != merged.mode || s.shard.limit != merged.shard.limit ||
            s.shard.shard_count != shards.front().shard.shard_count) {
            throw ConfigError("merge_shards: shards come from different searches");
        }
        if (seen[s.shard.shard_index]) {
            throw ConfigError("merge_shards: shard " + std::to_string(s.shard.shard_index) + " given twice");
        }
        seen[s.shard.shard_index] = true;
        merged.complete = merged.complete && s.complete;
        merged.last_completed_candidate = std::max(merged.last_completed_candidate, s.last_completed_candidate);
        merged.candidates_examined += s.candidates_examined;
        merged.unresolved += s.unresolved;
        merged.wall_microseconds += s.wall_microseconds;
        merged.pairs_found.insert(merged.pairs_found.end(), s.pairs_found.begin(), s.pairs_found.end());
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ConfigError("merge_shards: not every shard is present");
    }
    std::sort(merged.pairs_found.begin(), merged.pairs_found.end());
    return merged;
}

}  // namespace amicable
