#include "amicable/checkpoint.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <unistd.h>

namespace amicable {

namespace {

constexpr std::string_view kHeader = "# amicable search checkpoint";

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::string_view line()
    {
        if (pos_ >= text_.size()) {
            fail("unexpected end of document");
        }
        const auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) {
            fail("missing trailing newline");
        }
        const auto out = text_.substr(pos_, end - pos_);
        pos_ = end + 1;
        ++line_no_;
        return out;
    }

    std::string_view value(std::string_view key)
    {
        const auto l = line();
        if (l.size() < key.size() + 3 || l.substr(0, key.size()) != key ||
            l.substr(key.size(), 3) != " = ") {
            fail("expected key '" + std::string(key) + "'");
        }
        return l.substr(key.size() + 3);
    }

    u64 number(std::string_view key) { return parse_u64(value(key)); }

    u64 parse_u64(std::string_view s)
    {
        u64 v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || (s.size() > 1 && s[0] == '0')) {
            fail("'" + std::string(s) + "' is not a canonical unsigned integer");
        }
        return v;
    }

    bool at_end() const noexcept { return pos_ == text_.size(); }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw FormatError("checkpoint line " + std::to_string(line_no_) + ": " + why);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

}  // namespace

std::string serialize_checkpoint(const Checkpoint& cp)
{
    std::ostringstream out;
    out << kHeader << '\n'
        << "format_version = " << kCheckpointFormatVersion << '\n'
        << "mode = " << to_string(cp.mode) << '\n'
        << "shard_index = " << cp.shard.shard_index << '\n'
        << "shard_count = " << cp.shard.shard_count << '\n'
        << "limit = " << cp.shard.limit << '\n'
        << "complete = " << (cp.complete ? "true" : "false") << '\n'
        << "last_completed_candidate = " << cp.last_completed_candidate << '\n'
        << "candidates_examined = " << cp.candidates_examined << '\n'
        << "unresolved = " << cp.unresolved << '\n'
        << "wall_microseconds = " << cp.wall_microseconds << '\n'
        << "pair_count = " << cp.pairs_found.size() << '\n';
    for (const auto& p : cp.pairs_found) {
        out << "pair = " << p.smaller << ' ' << p.larger << '\n';
    }
    return out.str();
}

Checkpoint parse_checkpoint(std::string_view text)
{
    LineReader in(text);
    if (in.line() != kHeader) {
        in.fail("missing checkpoint header");
    }
    if (in.number("format_version") != kCheckpointFormatVersion) {
        in.fail("unsupported format_version");
    }
    Checkpoint cp;
    const auto mode = in.value("mode");
    if (mode == "constrained") {
        cp.mode = SearchMode::constrained;
    } else if (mode == "exhaustive") {
        cp.mode = SearchMode::exhaustive;
    } else {
        in.fail("unknown mode '" + std::string(mode) + "'");
    }
    cp.shard.shard_index = in.number("shard_index");
    cp.shard.shard_count = in.number("shard_count");
    cp.shard.limit = in.number("limit");
    const auto complete = in.value("complete");
    if (complete != "true" && complete != "false") {
        in.fail("complete must be true or false");
    }
    cp.complete = complete == "true";
    cp.last_completed_candidate = in.number("last_completed_candidate");
    cp.candidates_examined = in.number("candidates_examined");
    cp.unresolved = in.number("unresolved");
    cp.wall_microseconds = in.number("wall_microseconds");
    const u64 pair_count = in.number("pair_count");
    for (u64 i = 0; i < pair_count; ++i) {
        const auto v = in.value("pair");
        const auto space = v.find(' ');
        if (space == std::string_view::npos) {
            in.fail("pair needs two members");
        }
        const u64 a = in.parse_u64(v.substr(0, space));
        const u64 b = in.parse_u64(v.substr(space + 1));
        if (a >= b) {
            in.fail("pair members must be in increasing order");
        }
        cp.pairs_found.push_back({a, b});
    }
    if (!in.at_end()) {
        in.fail("trailing content after last pair");
    }
    try {
        cp.shard.validate();
    } catch (const std::exception& e) {
        in.fail(e.what());
    }
    if (cp.last_completed_candidate > cp.shard.limit) {
        in.fail("last_completed_candidate exceeds limit");
    }
    return cp;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& cp)
{
    const std::string body = serialize_checkpoint(cp);
    auto tmp = path;
    tmp += ".tmp";
    auto io_error = [&](const std::filesystem::path& p) {
        return std::filesystem::filesystem_error("cannot write checkpoint", p,
                                                 std::error_code(errno, std::generic_category()));
    };

    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) {
        throw io_error(tmp);
    }
    const bool ok = std::fwrite(body.data(), 1, body.size(), f) == body.size() && std::fflush(f) == 0 &&
                    ::fsync(::fileno(f)) == 0;
    const int saved_errno = errno;
    std::fclose(f);
    if (!ok) {
        errno = saved_errno;
        throw io_error(tmp);
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::filesystem::filesystem_error("cannot read checkpoint", path,
                                                std::make_error_code(std::errc::no_such_file_or_directory));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_checkpoint(buf.str());
}

}  // namespace amicable
