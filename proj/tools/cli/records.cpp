#include "records.hpp"

#include <cstdio>
#include <sstream>

namespace amicable::cli {

namespace {

void flatten(std::ostringstream& out, const std::string& prefix, const nlohmann::ordered_json& value)
{
    for (const auto& [key, v] : value.items()) {
        if (key == "record_type") {
            continue;
        }
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (v.is_object()) {
            flatten(out, name, v);
        } else if (v.is_string()) {
            out << ' ' << name << '=' << v.get<std::string>();
        } else if (v.is_boolean()) {
            out << ' ' << name << '=' << (v.get<bool>() ? "yes" : "no");
        } else {
            out << ' ' << name << '=' << v.dump();
        }
    }
}

}  // namespace

void RecordWriter::write(const nlohmann::ordered_json& record)
{
    const std::string line = format_ == OutputFormat::jsonl ? record.dump() : render_human(record);
    std::lock_guard lock(mu_);
    out_ << line << '\n';
    out_.flush();
}

std::string render_human(const nlohmann::ordered_json& record)
{
    std::ostringstream out;
    out << record.value("record_type", std::string("record"));
    flatten(out, "", record);
    return out.str();
}

nlohmann::ordered_json pair_record(std::string_view command, const PairVerdict& v)
{
    nlohmann::ordered_json r;
    r["record_type"] = "pair";
    r["command"] = command;
    r["m"] = v.m;
    r["n"] = v.n;
    r["s_m"] = v.s_m;
    r["s_n"] = v.s_n;
    r["is_amicable"] = v.is_amicable;
    r["parity"] = "mixed";
    r["conditions"] = {
        {"n_is_perfect_square", v.conditions.n_is_perfect_square},
        {"m_has_odd_prime_factor", v.conditions.m_has_odd_prime_factor},
        {"m_odd_part_is_square", v.conditions.m_odd_part_is_square},
        {"admissible", v.conditions.admissible},
    };
    return r;
}

nlohmann::ordered_json scan_pair_record(std::string_view command, const AmicablePair& p)
{
    nlohmann::ordered_json r;
    r["record_type"] = "pair";
    r["command"] = command;
    r["smaller"] = p.smaller;
    r["larger"] = p.larger;
    r["parity"] = to_string(classify(p));
    return r;
}

nlohmann::ordered_json search_summary_record(std::string_view command, const Checkpoint& cp)
{
    nlohmann::ordered_json r;
    r["record_type"] = "summary";
    r["command"] = command;
    r["mode"] = to_string(cp.mode);
    r["limit"] = cp.shard.limit;
    r["shard_index"] = cp.shard.shard_index;
    r["shard_count"] = cp.shard.shard_count;
    r["complete"] = cp.complete;
    r["last_completed_candidate"] = cp.last_completed_candidate;
    r["candidates_examined"] = cp.candidates_examined;
    r["unresolved"] = cp.unresolved;
    r["pairs_found"] = cp.pairs_found.size();
    if (cp.mode == SearchMode::constrained && cp.candidates_examined > 0) {
        // Candidates an exhaustive pass over [2, limit] would have examined, per candidate checked.
        r["reduction_factor"] = static_cast<double>(cp.shard.limit - 1) / static_cast<double>(cp.candidates_examined);
    }
    return r;
}

nlohmann::ordered_json timing_record(std::string_view command, u64 wall_microseconds)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(wall_microseconds) / 1e6);
    nlohmann::ordered_json r;
    r["record_type"] = "timing";
    r["command"] = command;
    r["wall_seconds"] = std::stod(buf);
    return r;
}

}  // namespace amicable::cli
