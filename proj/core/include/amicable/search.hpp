#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string_view>
#include <vector>

#include "amicable/int_math.hpp"
#include "amicable/parity.hpp"

namespace amicable {

/// One slice of the candidate space. Candidates are assigned to shards by
/// their generator index, never by value, so shards need no coordination.
struct SearchShard {
    u64 shard_index = 0;
    u64 shard_count = 1;
    u64 limit = 2;  // inclusive bound on the smaller pair member

    /// Throws ConfigError if shard_index >= shard_count or limit < 2, and
    /// RangeError if limit exceeds the arithmetic bound.
    void validate() const;

    friend bool operator==(const SearchShard&, const SearchShard&) = default;
};

/// Full evaluation of a mixed-parity pair (m even, n odd).
struct PairVerdict {
    u64 m = 0;
    u64 n = 0;
    u64 s_m = 0;
    u64 s_n = 0;
    bool is_amicable = false;
    MixedParityVerdict conditions;

    friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

/// Evaluates (a, b) in either order; one must be even and the other odd.
PairVerdict evaluate_pair(u64 a, u64 b);

/// An amicable pair as stored in checkpoints, smaller member first.
struct AmicablePair {
    u64 smaller = 0;
    u64 larger = 0;

    friend auto operator<=>(const AmicablePair&, const AmicablePair&) = default;
};

enum class ParityClass { even_even, odd_odd, mixed };

ParityClass classify(const AmicablePair& pair) noexcept;
std::string_view to_string(ParityClass c) noexcept;

enum class SearchMode { constrained, exhaustive };

std::string_view to_string(SearchMode m) noexcept;

/// Progress of one shard. A checkpoint with `complete` set is a final result.
struct Checkpoint {
    SearchMode mode = SearchMode::constrained;
    SearchShard shard;
    bool complete = false;
    u64 last_completed_candidate = 0;
    u64 candidates_examined = 0;
    u64 unresolved = 0;
    std::vector<AmicablePair> pairs_found;
    u64 wall_microseconds = 0;

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// Odd squares q^2 <= limit, increasing, restricted to the shard owning
/// generator index (q - 1) / 2. Only candidates above `start_after` are produced.
class OddSquareStream {
public:
    explicit OddSquareStream(const SearchShard& shard, u64 start_after = 0);

    std::optional<u64> next();

private:
    u64 limit_;
    u64 step_;  // in units of q
    u64 q_;
};

/// Numbers 2^a * q^2 <= limit with a >= 1 and q odd (q = 1 included),
/// increasing. The representation is unique, so no value repeats. Sharding key
/// is the flattened generator index (q - 1) / 2 + a.
class EvenCandidateStream {
public:
    explicit EvenCandidateStream(const SearchShard& shard, u64 start_after = 0);

    std::optional<u64> next();

private:
    struct Head {
        u64 value;
        unsigned a;
        u64 q;
        friend bool operator>(const Head& x, const Head& y) { return x.value > y.value; }
    };

    void push(unsigned a, u64 q);

    u64 limit_;
    u64 step_;
    std::priority_queue<Head, std::vector<Head>, std::greater<>> heads_;
};

/// Both candidate families of a shard merged into one increasing stream.
class CandidateStream {
public:
    explicit CandidateStream(const SearchShard& shard, u64 start_after = 0);

    std::optional<u64> next();

private:
    OddSquareStream odd_;
    EvenCandidateStream even_;
    std::optional<u64> odd_head_;
    std::optional<u64> even_head_;
};

std::vector<u64> enumerate_odd_square_candidates(const SearchShard& shard);
std::vector<u64> enumerate_even_candidates(const SearchShard& shard);

struct CandidateCheck {
    enum class Status { rejected, pair, unresolved };

    Status status = Status::rejected;
    /// aliquot sum of the candidate, when it could be computed.
    std::optional<u64> partner;
    std::optional<PairVerdict> verdict;
};

/// Follows c -> s(c) -> s(s(c)) and reports a pair only if s(c) has the
/// opposite parity to c and maps back to it. Any result beyond the arithmetic
/// bound makes the candidate unresolved instead of raising.
CandidateCheck check_candidate(u64 c);

struct SearchOptions {
    /// Called with the in-progress checkpoint every `checkpoint_every`
    /// candidates or `checkpoint_interval`, whichever comes first.
    std::function<void(const Checkpoint&)> on_checkpoint;
    u64 checkpoint_every = u64{1} << 16;
    std::chrono::milliseconds checkpoint_interval{10'000};
    /// Stop (leaving the checkpoint incomplete) after this many candidates in
    /// this invocation. Used to simulate interruption.
    std::optional<u64> stop_after;
};

/// Runs check_candidate over every candidate of the shard above the resume
/// point. Throws ConfigError if `resume_from` belongs to a different shard or mode.
Checkpoint run_constrained_search(const SearchShard& shard,
                                  const std::optional<Checkpoint>& resume_from = std::nullopt,
                                  const SearchOptions& options = {});

/// Default upper limit for run_exhaustive_scan.
inline constexpr u64 kDefaultScanCapacity = 100'000'000;

/// Computes s(n) for every n in [2, limit] with the batch sieve and records
/// every amicable pair whose members are both <= limit. RangeError if limit
/// exceeds `capacity` (itself capped below 2^32).
Checkpoint run_exhaustive_scan(u64 limit, u64 capacity = kDefaultScanCapacity);

/// Combines per-shard results of the same constrained search into the
/// checkpoint a single-shard run would have produced (timing summed).
Checkpoint merge_shards(const std::vector<Checkpoint>& shards);

}  // namespace amicable
