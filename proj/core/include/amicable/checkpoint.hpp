#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "amicable/search.hpp"

namespace amicable {

inline constexpr int kCheckpointFormatVersion = 1;

/// Canonical text form of a checkpoint. One `key = value` per line in a fixed
/// order, then one `pair = <smaller> <larger>` line per found pair:
///
///   # amicable search checkpoint
///   format_version = 1
///   mode = constrained
///   shard_index = 0
///   shard_count = 1
///   limit = 100000000
///   complete = true
///   last_completed_candidate = 99980001
///   candidates_examined = 17034
///   unresolved = 0
///   wall_microseconds = 812345
///   pair_count = 0
std::string serialize_checkpoint(const Checkpoint& cp);

/// Inverse of serialize_checkpoint. Only canonical documents are accepted
/// (fixed key order, no leading zeros, trailing newline), so parsing and
/// re-serializing reproduces the input byte for byte. FormatError otherwise.
Checkpoint parse_checkpoint(std::string_view text);

/// Writes to `<path>.tmp`, syncs, then renames over `path`; a reader never
/// sees a partial file. Throws std::filesystem::filesystem_error naming the path.
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);

Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace amicable
