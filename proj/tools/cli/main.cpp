#include <iostream>

#include <CLI11.hpp>

#include "app.hpp"

namespace {

using amicable::cli::Command;
using amicable::cli::OutputFormat;
using amicable::cli::RunConfig;

void add_format(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option_function<std::string>(
           "--format",
           [&cfg](const std::string& f) { cfg.output_format = f == "human" ? OutputFormat::human : OutputFormat::jsonl; },
           "Record format (default: jsonl)")
        ->check(CLI::IsMember({"human", "jsonl"}))
        ->type_name("human|jsonl");
}

void add_common(CLI::App* sub, RunConfig& cfg, std::optional<amicable::u64>& shard_index, bool with_shards)
{
    sub->add_option("--limit", cfg.limit, "Inclusive upper bound")->check(CLI::PositiveNumber);
    if (with_shards) {
        sub->add_option("--shard-index", shard_index, "Run only this shard (default: all shards)");
        sub->add_option("--shard-count", cfg.shard_count, "Number of shards")->check(CLI::PositiveNumber);
        sub->add_option("--stop-after", cfg.stop_after, "Stop each shard after N candidates")
            ->group("");  // hidden; simulates an interrupted run
    }
    sub->add_option("--output", cfg.output_path, "Write records to this file instead of stdout");
    add_format(sub, cfg);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mixed-parity amicable pair toolkit: theorem verification, pruned search, exhaustive scan"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<amicable::u64> shard_index;

    auto* verify = app.add_subcommand("verify", "Check the parity theorem and its formulas over [1, limit]");
    add_common(verify, cfg, shard_index, false);

    auto* search = app.add_subcommand("search", "Theorem-pruned search for mixed-parity amicable pairs");
    add_common(search, cfg, shard_index, true);
    search->add_option("--checkpoint", cfg.checkpoint_path, "Resume from / persist progress to this file");

    auto* scan = app.add_subcommand("scan", "Exhaustive sieve scan, cross-checked against the pruned search");
    add_common(scan, cfg, shard_index, false);

    auto* report = app.add_subcommand("report", "Print the records stored in a checkpoint file");
    report->add_option("--checkpoint", cfg.checkpoint_path, "Checkpoint to read")->required();
    report->add_option("--output", cfg.output_path, "Write records to this file instead of stdout");
    add_format(report, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : amicable::cli::kExitUsage;
    }

    if (verify->parsed()) {
        cfg.command = Command::verify;
        if (verify->count("--limit") == 0) {
            cfg.limit = amicable::cli::kDefaultVerifyLimit;
        }
    } else if (search->parsed()) {
        cfg.command = Command::search;
    } else if (scan->parsed()) {
        cfg.command = Command::scan;
        if (scan->count("--limit") == 0) {
            cfg.limit = amicable::cli::kDefaultScanLimit;
        }
    } else {
        cfg.command = Command::report;
    }
    cfg.shard_index = shard_index;
    return amicable::cli::run(cfg, std::cout, std::cerr);
}
