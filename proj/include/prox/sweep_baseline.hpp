#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "prox/corpus_index.hpp"
#include "prox/query.hpp"
#include "prox/search_stats.hpp"

namespace prox {

/// Closed token range [start, end].
struct Interval {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - start + 1; }
    bool contains(const Interval& other) const noexcept
    {
        return start <= other.start && other.end <= end;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Smaller size first, then smaller start.
inline bool smaller_range(const Interval& a, const Interval& b) noexcept
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.start < b.start;
}

struct SweepResult {
    std::vector<Interval> criticals;
    std::optional<Interval> minimal;
    SearchStats stats;
    /// Identifies the (index, query) pair the result was computed from.
    std::uint64_t source = 0;
};

std::uint64_t search_source_id(const PositionalIndex& index, const Query& query) noexcept;

/// True iff at least `threshold` query keywords occur at least f_i times in
/// `window`. Runs are expanded to their raw occurrences.
bool is_candidate(const Interval& window, const PositionalIndex& index, const Query& query);

/// Classic plane sweep over the uncompressed occurrence lists. Honors
/// per-keyword frequencies and thresholds below k'. Criticals are ordered by
/// start. An unsatisfiable query yields an empty result, not an error.
SweepResult plane_sweep(const PositionalIndex& index, const Query& query);

}  // namespace prox
