#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "amicable/search.hpp"
#include "records.hpp"
#include "verify_suite.hpp"

namespace amicable::cli {

enum class Command { verify, search, scan, report };

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // property or consistency failure
    kExitUsage = 2,
    kExitIo = 3,
};

inline constexpr u64 kDefaultSearchLimit = 100'000'000;
inline constexpr u64 kDefaultVerifyLimit = 1'000'000;
inline constexpr u64 kDefaultScanLimit = 1'000'000;

struct RunConfig {
    Command command = Command::search;
    u64 limit = kDefaultSearchLimit;
    /// Absent with shard_count > 1 means "run every shard concurrently".
    std::optional<u64> shard_index;
    u64 shard_count = 1;
    std::optional<std::filesystem::path> checkpoint_path;
    std::optional<std::filesystem::path> output_path;
    OutputFormat output_format = OutputFormat::jsonl;
    /// Stop each shard after this many candidates (simulated interruption).
    std::optional<u64> stop_after;
};

/// Test seams; production callers use the defaults.
struct Hooks {
    VerifyHooks verify;
    /// Replaces the constrained search that `scan` cross-checks against.
    std::function<Checkpoint(const SearchShard&)> scan_cross_check;
};

/// Checkpoint file owned by shard `index` of `count` in all-shards mode.
std::filesystem::path shard_checkpoint_path(const std::filesystem::path& base, u64 index, u64 count);

/// Runs one command. Records go to `out` (or to config.output_path when set),
/// diagnostics to `err`. Returns one of the ExitCode values.
int run(const RunConfig& config, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace amicable::cli
