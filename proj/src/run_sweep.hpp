#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prox/search_stats.hpp"
#include "prox/sweep_baseline.hpp"

namespace prox::detail {

/// One run of a query keyword, possibly clipped to a search window.
struct RunElement {
    std::size_t first;
    std::size_t last;
    std::size_t keyword;  // index into the query

    std::size_t ctr() const noexcept { return last - first + 1; }
};

/// Unit-frequency sweep over run elements sorted by `first`. Appends the
/// critical ranges in left-to-right order and accumulates the counters:
/// one comparison per pointer test, and (ctr - 1) skipped tests in gamma for
/// each run the right pointer enters.
void sweep_runs(std::span<const RunElement> elements, std::size_t keyword_count,
                std::size_t threshold, std::vector<Interval>& criticals, SearchStats& stats);

/// Runs of every query keyword overlapping [lo, hi], clipped to it and
/// sorted by position.
std::vector<RunElement> collect_runs(const PositionalIndex& index, const Query& query,
                                     std::size_t lo, std::size_t hi);

inline void close_stats(SearchStats& stats, std::size_t emitted) noexcept
{
    stats.beta = stats.comparisons + stats.gamma;
    stats.c_n = stats.beta - stats.gamma;
    stats.ranges_emitted = emitted;
}

}  // namespace prox::detail
