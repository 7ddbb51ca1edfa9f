#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prox {

using TokenSeq = std::vector<std::string>;

enum class TokenMode { chars, words };

struct TokenizeOptions {
    TokenMode mode = TokenMode::chars;
    bool lowercase = false;
};

/// Splits `text` into tokens. In chars mode every non-whitespace UTF-8 code
/// point is one token; in words mode tokens are maximal non-whitespace runs.
TokenSeq tokenize(std::string_view text, TokenizeOptions options = {});

/// A tandem run of one keyword occupying positions [start, start + ctr - 1].
struct RunEntry {
    std::size_t start = 0;
    std::size_t ctr = 1;

    std::size_t last() const noexcept { return start + ctr - 1; }
    friend bool operator==(const RunEntry&, const RunEntry&) = default;
};

using RunList = std::vector<RunEntry>;
using KeywordLists = std::map<std::string, RunList, std::less<>>;

/// Run-length compressed positional inverted index of a single document.
///
/// Every token position belongs to exactly one run of exactly one keyword,
/// so the lists tile [0, token_count). Immutable once constructed.
class PositionalIndex {
public:
    PositionalIndex() = default;

    /// Validates the tiling and the per-list ordering; throws prox::Error.
    PositionalIndex(KeywordLists lists, std::size_t token_count);

    /// Empty span when the keyword does not occur.
    std::span<const RunEntry> runs(std::string_view keyword) const;
    bool contains(std::string_view keyword) const;

    const KeywordLists& lists() const noexcept { return lists_; }
    std::size_t token_count() const noexcept { return token_count_; }
    std::size_t total_occurrences() const noexcept { return total_occurrences_; }
    std::size_t alpha() const noexcept { return alpha_; }
    std::size_t keyword_count() const noexcept { return lists_.size(); }

    /// Content hash; equal indexes hash equal.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    friend bool operator==(const PositionalIndex& a, const PositionalIndex& b)
    {
        return a.token_count_ == b.token_count_ && a.lists_ == b.lists_;
    }

private:
    KeywordLists lists_;
    std::size_t token_count_ = 0;
    std::size_t total_occurrences_ = 0;
    std::size_t alpha_ = 0;
    std::uint64_t fingerprint_ = 0;
};

PositionalIndex build_index(const TokenSeq& tokens);

/// Expands the runs back into the token sequence.
TokenSeq decompress(const PositionalIndex& index);

/// Sum of (ctr - 1) over all runs.
std::size_t compute_alpha(const PositionalIndex& index);

/// alpha / token_count. Throws EmptyIndexError for an empty document.
double compute_wsim(const PositionalIndex& index);

// PROXIDX text format:
//   PROXIDX 1 <token_count> <keyword_count>
//   <keyword>\t<start>:<ctr>,<start>:<ctr>,...
// Keywords appear in byte order; LF line endings.
void save_index(const PositionalIndex& index, std::ostream& out);
void save_index(const PositionalIndex& index, const std::string& path);
PositionalIndex load_index(std::istream& in);
PositionalIndex load_index(const std::string& path);

}  // namespace prox
