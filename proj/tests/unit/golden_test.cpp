#include "app.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace amicable;
using namespace amicable::cli;

namespace {

const std::filesystem::path kGoldenDir = AMICABLE_GOLDEN_DIR;

// Timing records carry wall-clock values; everything else is deterministic.
std::string without_timing(const std::string& text)
{
    std::istringstream in(text);
    std::string kept;
    for (std::string line; std::getline(in, line);) {
        if (line.find("\"record_type\":\"timing\"") == std::string::npos && line.rfind("timing ", 0) != 0) {
            kept += line + '\n';
        }
    }
    return kept;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_golden(const RunConfig& cfg, const std::string& name)
{
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(run(cfg, out, err), kExitOk) << err.str();
    const std::string got = without_timing(out.str());
    const auto path = kGoldenDir / name;
    if (std::getenv("AMICABLE_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path) << got;
    }
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(got, slurp(path)) << "golden mismatch: " << path;
}

RunConfig config(Command c, u64 limit, OutputFormat f = OutputFormat::jsonl)
{
    RunConfig cfg;
    cfg.command = c;
    cfg.limit = limit;
    cfg.output_format = f;
    return cfg;
}

}  // namespace

TEST(Golden, Verify)
{
    check_golden(config(Command::verify, 10'000), "verify.jsonl");
}

TEST(Golden, Search)
{
    check_golden(config(Command::search, 100'000'000), "search.jsonl");
}

TEST(Golden, SearchShard)
{
    auto cfg = config(Command::search, 1'000'000);
    cfg.shard_index = 1;
    cfg.shard_count = 3;
    check_golden(cfg, "search_shard.jsonl");
}

TEST(Golden, Scan)
{
    check_golden(config(Command::scan, 100'000), "scan.jsonl");
}

TEST(Golden, ScanHuman)
{
    check_golden(config(Command::scan, 100'000, OutputFormat::human), "scan.txt");
}

TEST(Golden, ReportConstrained)
{
    auto cfg = config(Command::report, 1);
    cfg.checkpoint_path = kGoldenDir / "report_constrained.ckpt";
    check_golden(cfg, "report_constrained.jsonl");
}

TEST(Golden, ReportExhaustive)
{
    auto cfg = config(Command::report, 1);
    cfg.checkpoint_path = kGoldenDir / "report_exhaustive.ckpt";
    check_golden(cfg, "report_exhaustive.jsonl");
}
