#include "app.hpp"

#include <chrono>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include "amicable/checkpoint.hpp"

namespace amicable::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::string_view command_name(Command c)
{
    switch (c) {
    case Command::verify: return "verify";
    case Command::search: return "search";
    case Command::scan: return "scan";
    case Command::report: return "report";
    }
    return "?";
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit_pairs(RecordWriter& w, std::string_view command, const Checkpoint& cp)
{
    for (const auto& p : cp.pairs_found) {
        if (cp.mode == SearchMode::constrained) {
            w.write(pair_record(command, evaluate_pair(p.smaller, p.larger)));
        } else {
            w.write(scan_pair_record(command, p));
        }
    }
}

Checkpoint run_one_shard(const SearchShard& shard, const std::optional<std::filesystem::path>& ckpt,
                         std::optional<u64> stop_after)
{
    std::optional<Checkpoint> resume;
    SearchOptions opts;
    opts.stop_after = stop_after;
    if (ckpt) {
        if (std::filesystem::exists(*ckpt)) {
            try {
                resume = load_checkpoint(*ckpt);
            } catch (const FormatError& e) {
                throw std::filesystem::filesystem_error(std::string("malformed checkpoint: ") + e.what(), *ckpt,
                                                        std::make_error_code(std::errc::invalid_argument));
            }
        } else {
            // Fail on an unwritable path before doing any work.
            Checkpoint fresh;
            fresh.shard = shard;
            save_checkpoint(*ckpt, fresh);
        }
        opts.on_checkpoint = [&](const Checkpoint& cp) { save_checkpoint(*ckpt, cp); };
    }
    Checkpoint cp = run_constrained_search(shard, resume, opts);
    if (ckpt) {
        save_checkpoint(*ckpt, cp);
    }
    return cp;
}

int cmd_verify(const RunConfig& config, RecordWriter& w, std::ostream& err, const Hooks& hooks)
{
    if (config.limit > kVerifyMaxLimit) {
        throw UsageError("verify --limit " + std::to_string(config.limit) + " exceeds the suite maximum of " +
                         std::to_string(kVerifyMaxLimit));
    }
    const auto started = Clock::now();
    const auto results = run_verify_suite(config.limit, hooks.verify);
    std::size_t failed = 0;
    for (const auto& r : results) {
        nlohmann::ordered_json rec;
        rec["record_type"] = "property";
        rec["command"] = "verify";
        rec["name"] = r.name;
        rec["passed"] = r.passed;
        rec["checked"] = r.checked;
        if (r.counterexample) {
            rec["counterexample"] = *r.counterexample;
            err << "property " << r.name << " FAILED: " << *r.counterexample << '\n';
            ++failed;
        }
        w.write(rec);
    }
    nlohmann::ordered_json summary;
    summary["record_type"] = "summary";
    summary["command"] = "verify";
    summary["limit"] = config.limit;
    summary["properties"] = results.size();
    summary["failed"] = failed;
    w.write(summary);
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started).count();
    w.write(timing_record("verify", static_cast<u64>(us)));
    return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_search(const RunConfig& config, RecordWriter& w)
{
    if (config.limit > kArithmeticBound) {
        throw UsageError("search --limit " + std::to_string(config.limit) +
                         " exceeds the arithmetic bound 2^62 = " + std::to_string(kArithmeticBound));
    }
    Checkpoint result;
    if (config.shard_index || config.shard_count == 1) {
        const SearchShard shard{config.shard_index.value_or(0), config.shard_count, config.limit};
        shard.validate();
        result = run_one_shard(shard, config.checkpoint_path, config.stop_after);
    } else {
        // All-shards mode: one worker per shard, each with its own checkpoint file.
        const u64 count = config.shard_count;
        for (u64 i = 0; i < count; ++i) {
            SearchShard{i, count, config.limit}.validate();
        }
        std::vector<Checkpoint> parts(count);
        std::vector<std::exception_ptr> errors(count);
        std::vector<std::thread> workers;
        for (u64 i = 0; i < count; ++i) {
            workers.emplace_back([&, i] {
                try {
                    std::optional<std::filesystem::path> ckpt;
                    if (config.checkpoint_path) {
                        ckpt = shard_checkpoint_path(*config.checkpoint_path, i, count);
                    }
                    parts[i] = run_one_shard({i, count, config.limit}, ckpt, config.stop_after);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
        for (auto& t : workers) {
            t.join();
        }
        for (const auto& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
        result = merge_shards(parts);
    }
    emit_pairs(w, "search", result);
    w.write(search_summary_record("search", result));
    w.write(timing_record("search", result.wall_microseconds));
    return kExitOk;
}

int cmd_scan(const RunConfig& config, RecordWriter& w, std::ostream& err, const Hooks& hooks)
{
    if (config.limit > kDefaultScanCapacity) {
        throw UsageError("scan --limit " + std::to_string(config.limit) + " exceeds the sieve capacity " +
                         std::to_string(kDefaultScanCapacity));
    }
    const auto started = Clock::now();
    const Checkpoint scan = run_exhaustive_scan(config.limit);

    std::vector<AmicablePair> mixed_scan;
    u64 even_even = 0;
    u64 odd_odd = 0;
    for (const auto& p : scan.pairs_found) {
        switch (classify(p)) {
        case ParityClass::even_even: ++even_even; break;
        case ParityClass::odd_odd: ++odd_odd; break;
        case ParityClass::mixed: mixed_scan.push_back(p); break;
        }
    }

    std::vector<AmicablePair> mixed_search;
    if (config.limit >= 2) {
        const SearchShard shard{0, 1, config.limit};
        const Checkpoint constrained =
            hooks.scan_cross_check ? hooks.scan_cross_check(shard) : run_constrained_search(shard);
        for (const auto& p : constrained.pairs_found) {
            if (p.larger <= config.limit) {
                mixed_search.push_back(p);
            }
        }
    }
    const bool consistent = mixed_scan == mixed_search;

    emit_pairs(w, "scan", scan);
    nlohmann::ordered_json check;
    check["record_type"] = "consistency";
    check["command"] = "scan";
    check["mixed_in_scan"] = mixed_scan.size();
    check["mixed_in_constrained_search"] = mixed_search.size();
    check["consistent"] = consistent;
    w.write(check);

    nlohmann::ordered_json summary;
    summary["record_type"] = "summary";
    summary["command"] = "scan";
    summary["mode"] = "exhaustive";
    summary["limit"] = config.limit;
    summary["candidates_examined"] = scan.candidates_examined;
    summary["pairs_found"] = scan.pairs_found.size();
    summary["even_even"] = even_even;
    summary["odd_odd"] = odd_odd;
    summary["mixed"] = mixed_scan.size();
    w.write(summary);
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started).count();
    w.write(timing_record("scan", static_cast<u64>(us)));

    if (!consistent) {
        err << "CONSISTENCY: exhaustive scan found " << mixed_scan.size()
            << " mixed-parity pairs but the constrained search found " << mixed_search.size() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_report(const RunConfig& config, RecordWriter& w)
{
    if (!config.checkpoint_path) {
        throw UsageError("report requires --checkpoint <path>");
    }
    Checkpoint cp;
    try {
        cp = load_checkpoint(*config.checkpoint_path);
    } catch (const FormatError& e) {
        throw std::filesystem::filesystem_error(std::string("malformed checkpoint: ") + e.what(),
                                                *config.checkpoint_path,
                                                std::make_error_code(std::errc::invalid_argument));
    }
    emit_pairs(w, "report", cp);
    w.write(search_summary_record("report", cp));
    w.write(timing_record("report", cp.wall_microseconds));
    return kExitOk;
}

}  // namespace

std::filesystem::path shard_checkpoint_path(const std::filesystem::path& base, u64 index, u64 count)
{
    auto p = base;
    p += ".shard-" + std::to_string(index) + "-of-" + std::to_string(count);
    return p;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err, const Hooks& hooks)
{
    std::ofstream file;
    if (config.output_path) {
        file.open(*config.output_path, std::ios::out | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output file " << config.output_path->string() << '\n';
            return kExitIo;
        }
    }
    RecordWriter writer(config.output_path ? static_cast<std::ostream&>(file) : out, config.output_format);

    try {
        switch (config.command) {
        case Command::verify: return cmd_verify(config, writer, err, hooks);
        case Command::search: return cmd_search(config, writer);
        case Command::scan: return cmd_scan(config, writer, err, hooks);
        case Command::report: return cmd_report(config, writer);
        }
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << command_name(config.command) << ": " << e.what() << '\n';
        return kExitIo;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << command_name(config.command) << " failed: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace amicable::cli
