#include "prox/corpus_index.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include <fmt/format.h>

#include "prox/error.hpp"

namespace prox {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(fmt::format("line {}: {}", line, what)), line_(line)
{
}

namespace {

bool is_space(char c) noexcept
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Byte length of the UTF-8 sequence introduced by `lead`; malformed lead
// bytes count as a single byte.
std::size_t utf8_length(unsigned char lead) noexcept
{
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
}

std::string ascii_lower(std::string_view s)
{
    std::string out(s);
    for (auto& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

constexpr std::uint64_t fnv_offset = 14695981039346656037ULL;
constexpr std::uint64_t fnv_prime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value) noexcept
{
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xFF;
        h *= fnv_prime;
    }
}

void fnv_mix(std::uint64_t& h, std::string_view s) noexcept
{
    fnv_mix(h, s.size());
    for (unsigned char c : s) {
        h ^= c;
        h *= fnv_prime;
    }
}

struct PlacedRun {
    std::size_t start;
    std::size_t ctr;
    std::size_t origin;  // line number while parsing, 0 otherwise
};

// Runs of all keywords must tile [0, token_count) exactly. Returns an error
// message and the offending origin, or an empty message.
std::pair<std::string, std::size_t> check_tiling(std::vector<PlacedRun> runs,
                                                 std::size_t token_count)
{
    std::sort(runs.begin(), runs.end(),
              [](const PlacedRun& a, const PlacedRun& b) { return a.start < b.start; });
    std::size_t next = 0;
    for (const auto& run : runs) {
        if (run.start < next) {
            return {fmt::format("run {}:{} overlaps another run", run.start, run.ctr), run.origin};
        }
        if (run.start > next) {
            return {fmt::format("positions {}..{} are not covered by any run", next, run.start - 1),
                    run.origin};
        }
        next = run.start + run.ctr;
    }
    if (next != token_count) {
        return {fmt::format("runs cover {} positions but token_count is {}", next, token_count),
                runs.empty() ? 0 : runs.back().origin};
    }
    return {};
}

}  // namespace

TokenSeq tokenize(std::string_view text, TokenizeOptions options)
{
    TokenSeq tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t end = i;
        if (options.mode == TokenMode::chars) {
            end = std::min(text.size(), i + utf8_length(static_cast<unsigned char>(text[i])));
        } else {
            while (end < text.size() && !is_space(text[end])) {
                ++end;
            }
        }
        auto token = text.substr(i, end - i);
        tokens.push_back(options.lowercase ? ascii_lower(token) : std::string(token));
        i = end;
    }
    return tokens;
}

PositionalIndex::PositionalIndex(KeywordLists lists, std::size_t token_count)
    : lists_(std::move(lists)), token_count_(token_count)
{
    std::vector<PlacedRun> placed;
    fingerprint_ = fnv_offset;
    fnv_mix(fingerprint_, token_count_);
    for (const auto& [keyword, runs] : lists_) {
        if (keyword.empty()) {
            throw Error("index keyword must be non-empty");
        }
        if (std::any_of(keyword.begin(), keyword.end(), is_space)) {
            throw Error("index keyword contains whitespace: " + keyword);
        }
        if (runs.empty()) {
            throw Error("keyword without runs: " + keyword);
        }
        fnv_mix(fingerprint_, keyword);
        for (std::size_t i = 0; i < runs.size(); ++i) {
            const auto& run = runs[i];
            if (run.ctr < 1) {
                throw Error(fmt::format("{}: run at {} has ctr 0", keyword, run.start));
            }
            if (i > 0 && run.start <= runs[i - 1].last() + 1) {
                throw Error(fmt::format("{}: run at {} is not strictly after the previous run",
                                        keyword, run.start));
            }
            total_occurrences_ += run.ctr;
            alpha_ += run.ctr - 1;
            placed.push_back({run.start, run.ctr, 0});
            fnv_mix(fingerprint_, run.start);
            fnv_mix(fingerprint_, run.ctr);
        }
    }
    if (auto [message, origin] = check_tiling(std::move(placed), token_count_); !message.empty()) {
        throw Error(message);
    }
}

std::span<const RunEntry> PositionalIndex::runs(std::string_view keyword) const
{
    auto it = lists_.find(keyword);
    if (it == lists_.end()) {
        return {};
    }
    return it->second;
}

bool PositionalIndex::contains(std::string_view keyword) const
{
    return lists_.find(keyword) != lists_.end();
}

PositionalIndex build_index(const TokenSeq& tokens)
{
    KeywordLists lists;
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t j = i + 1;
        while (j < tokens.size() && tokens[j] == tokens[i]) {
            ++j;
        }
        lists[tokens[i]].push_back({i, j - i});
        i = j;
    }
    return PositionalIndex(std::move(lists), tokens.size());
}

TokenSeq decompress(const PositionalIndex& index)
{
    TokenSeq tokens(index.token_count());
    for (const auto& [keyword, runs] : index.lists()) {
        for (const auto& run : runs) {
            std::fill_n(tokens.begin() + static_cast<std::ptrdiff_t>(run.start), run.ctr, keyword);
        }
    }
    return tokens;
}

std::size_t compute_alpha(const PositionalIndex& index)
{
    std::size_t alpha = 0;
    for (const auto& [keyword, runs] : index.lists()) {
        for (const auto& run : runs) {
            alpha += run.ctr - 1;
        }
    }
    return alpha;
}

double compute_wsim(const PositionalIndex& index)
{
    if (index.token_count() == 0) {
        throw EmptyIndexError();
    }
    return static_cast<double>(compute_alpha(index)) / static_cast<double>(index.token_count());
}

void save_index(const PositionalIndex& index, std::ostream& out)
{
    out << "PROXIDX 1 " << index.token_count() << ' ' << index.keyword_count() << '\n';
    for (const auto& [keyword, runs] : index.lists()) {
        out << keyword << '\t';
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << runs[i].start << ':' << runs[i].ctr;
        }
        out << '\n';
    }
}

void save_index(const PositionalIndex& index, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open for writing: " + path);
    }
    save_index(index, out);
    if (!out) {
        throw Error("write failed: " + path);
    }
}

namespace {

bool parse_number(std::string_view text, std::size_t& value)
{
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t from = 0;
    while (true) {
        auto at = text.find(sep, from);
        parts.push_back(text.substr(from, at - from));
        if (at == std::string_view::npos) {
            break;
        }
        from = at + 1;
    }
    return parts;
}

}  // namespace

PositionalIndex load_index(std::istream& in)
{
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw ParseError(1, "missing PROXIDX header");
    }
    auto header = split(line, ' ');
    std::size_t version = 0;
    std::size_t token_count = 0;
    std::size_t keyword_count = 0;
    if (header.size() != 4 || header[0] != "PROXIDX" || !parse_number(header[1], version) ||
        !parse_number(header[2], token_count) || !parse_number(header[3], keyword_count)) {
        throw ParseError(1, "malformed header, expected 'PROXIDX 1 <token_count> <keyword_count>'");
    }
    if (version != 1) {
        throw ParseError(1, fmt::format("unsupported index version {}", version));
    }

    KeywordLists lists;
    std::vector<PlacedRun> placed;
    std::string previous_keyword;
    for (std::size_t k = 0; k < keyword_count; ++k) {
        ++line_no;
        if (!std::getline(in, line)) {
            throw ParseError(line_no, fmt::format("expected {} keyword lines, found {}",
                                                  keyword_count, k));
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw ParseError(line_no, "expected '<keyword>\\t<start>:<ctr>,...'");
        }
        std::string keyword = line.substr(0, tab);
        if (std::any_of(keyword.begin(), keyword.end(), is_space)) {
            throw ParseError(line_no, "keyword contains whitespace");
        }
        if (k > 0 && keyword <= previous_keyword) {
            throw ParseError(line_no, "keywords must be unique and in ascending byte order");
        }
        RunList runs;
        for (auto entry : split(std::string_view(line).substr(tab + 1), ',')) {
            auto colon = entry.find(':');
            RunEntry run;
            if (colon == std::string_view::npos || !parse_number(entry.substr(0, colon), run.start) ||
                !parse_number(entry.substr(colon + 1), run.ctr)) {
                throw ParseError(line_no, fmt::format("malformed run entry '{}'", entry));
            }
            if (run.ctr < 1) {
                throw ParseError(line_no, fmt::format("run at {} has ctr 0", run.start));
            }
            if (!runs.empty() && run.start <= runs.back().start) {
                throw ParseError(line_no, fmt::format("run starts not strictly ascending at {}",
                                                      run.start));
            }
            if (!runs.empty() && run.start <= runs.back().last() + 1) {
                throw ParseError(line_no, fmt::format("run at {} overlaps or touches the previous run",
                                                      run.start));
            }
            if (run.ctr > token_count || run.start > token_count - run.ctr) {
                throw ParseError(line_no, fmt::format("run {}:{} exceeds token_count {}",
                                                      run.start, run.ctr, token_count));
            }
            runs.push_back(run);
            placed.push_back({run.start, run.ctr, line_no});
        }
        previous_keyword = keyword;
        lists.emplace(std::move(keyword), std::move(runs));
    }
    if (std::getline(in, line)) {
        throw ParseError(line_no + 1, "unexpected content after the last keyword line");
    }
    if (auto [message, origin] = check_tiling(std::move(placed), token_count); !message.empty()) {
        throw ParseError(origin == 0 ? 1 : origin, message);
    }
    return PositionalIndex(std::move(lists), token_count);
}

PositionalIndex load_index(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open index: " + path);
    }
    return load_index(in);
}

}  // namespace prox
