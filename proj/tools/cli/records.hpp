#pragma once

#include <mutex>
#include <ostream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "amicable/search.hpp"

namespace amicable::cli {

enum class OutputFormat { human, jsonl };

/// Single writer for every record a command emits. Each record is one line:
/// a JSON object carrying `record_type` in jsonl mode, or a `key=value` line
/// led by the record type in human mode. Safe to share between threads.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

    void write(const nlohmann::ordered_json& record);

    OutputFormat format() const noexcept { return format_; }

private:
    std::ostream& out_;
    OutputFormat format_;
    std::mutex mu_;
};

nlohmann::ordered_json pair_record(std::string_view command, const PairVerdict& v);
nlohmann::ordered_json scan_pair_record(std::string_view command, const AmicablePair& p);
nlohmann::ordered_json search_summary_record(std::string_view command, const Checkpoint& cp);
nlohmann::ordered_json timing_record(std::string_view command, u64 wall_microseconds);

/// Human rendering of a record: `<record_type> key=value key=value ...`,
/// nested objects flattened with dots.
std::string render_human(const nlohmann::ordered_json& record);

}  // namespace amicable::cli
