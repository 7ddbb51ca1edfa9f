#include "prox/wpsr.hpp"

#include <algorithm>

#include "prox/error.hpp"
#include "run_sweep.hpp"

namespace prox {
namespace detail {

void sweep_runs(std::span<const RunElement> elements, std::size_t keyword_count,
                std::size_t threshold, std::vector<Interval>& criticals, SearchStats& stats)
{
    std::vector<std::size_t> counts(keyword_count, 0);
    std::size_t present = 0;
    std::size_t l = 0;
    for (std::size_t r = 0; r < elements.size(); ++r) {
        const auto& right = elements[r];
        ++stats.comparisons;
        stats.gamma += right.ctr() - 1;
        if (++counts[right.keyword] == 1) {
            ++present;
        }
        if (present < threshold) {
            continue;
        }
        while (true) {
            ++stats.comparisons;
            const auto lk = elements[l].keyword;
            if (counts[lk] == 1 && present == threshold) {
                break;
            }
            if (--counts[lk] == 0) {
                --present;
            }
            ++l;
        }
        ++stats.ranges_examined;
        if (counts[right.keyword] == 1 && present == threshold) {
            // Snap to the run endpoints facing each other; a lone run is
            // represented by its first position.
            const auto start = l == r ? right.first : elements[l].last;
            criticals.push_back({start, right.first});
        }
    }
}

std::vector<RunElement> collect_runs(const PositionalIndex& index, const Query& query,
                                     std::size_t lo, std::size_t hi)
{
    std::vector<RunElement> elements;
    for (std::size_t i = 0; i < query.size(); ++i) {
        auto runs = index.runs(query.keywords()[i]);
        auto it = std::partition_point(runs.begin(), runs.end(),
                                       [&](const RunEntry& run) { return run.last() < lo; });
        for (; it != runs.end() && it->start <= hi; ++it) {
            elements.push_back({std::max(it->start, lo), std::min(it->last(), hi), i});
        }
    }
    std::sort(elements.begin(), elements.end(),
              [](const RunElement& a, const RunElement& b) { return a.first < b.first; });
    return elements;
}

}  // namespace detail

SweepResult wpsr_sweep(const PositionalIndex& index, const Query& query)
{
    if (!query.unit_frequencies()) {
        throw UnsupportedFrequencyError();
    }
    SweepResult result;
    result.source = search_source_id(index, query);
    if (index.token_count() == 0) {
        return result;
    }
    auto elements = detail::collect_runs(index, query, 0, index.token_count() - 1);
    detail::sweep_runs(elements, query.size(), query.threshold(), result.criticals, result.stats);
    for (const auto& range : result.criticals) {
        if (!result.minimal || smaller_range(range, *result.minimal)) {
            result.minimal = range;
        }
    }
    detail::close_stats(result.stats, result.criticals.size());
    return result;
}

std::vector<Interval> collapse_run_duplicates(std::span<const Interval> intervals,
                                              const PositionalIndex& index)
{
    auto run_start_at = [&index](std::size_t pos) {
        for (const auto& [keyword, runs] : index.lists()) {
            auto it = std::partition_point(runs.begin(), runs.end(),
                                           [&](const RunEntry& run) { return run.last() < pos; });
            if (it != runs.end() && it->start <= pos) {
                return it->start;
            }
        }
        return pos;
    };
    std::vector<Interval> out;
    out.reserve(intervals.size());
    for (const auto& range : intervals) {
        if (range.size() == 1) {
            auto start = run_start_at(range.start);
            out.push_back({start, start});
        } else {
            out.push_back(range);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace prox
