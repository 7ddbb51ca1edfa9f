#include "prox/mwpsr.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "prox/error.hpp"
#include "run_sweep.hpp"

namespace prox {

namespace {

constexpr auto unbounded_gap = std::numeric_limits<std::size_t>::max();

std::size_t min_gap(std::span<const RunEntry> runs)
{
    std::size_t best = unbounded_gap;
    for (std::size_t i = 1; i < runs.size(); ++i) {
        best = std::min(best, runs[i].start - runs[i - 1].start);
    }
    return best;
}

std::string describe_gap(std::size_t gap)
{
    return gap == unbounded_gap ? std::string("inf") : std::to_string(gap);
}

}  // namespace

MinKeywordSelection select_min_keyword(const PositionalIndex& index, const Query& query)
{
    struct Candidate {
        std::size_t entries;
        std::size_t gap;
    };
    std::vector<Candidate> candidates;
    std::string trace;
    for (std::size_t i = 0; i < query.size(); ++i) {
        const auto& keyword = query.keywords()[i];
        auto runs = index.runs(keyword);
        if (runs.empty()) {
            throw KeywordNotFoundError(keyword);
        }
        candidates.push_back({runs.size(), min_gap(runs)});
        trace += fmt::format("{}{}: {} entries, min gap {}", i == 0 ? "" : "; ", keyword,
                             runs.size(), describe_gap(candidates.back().gap));
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        const auto& b = candidates[best];
        if (c.entries < b.entries || (c.entries == b.entries && c.gap > b.gap)) {
            best = i;
        }
    }

    const auto& winner = candidates[best];
    std::string decided_by = candidates.size() == 1 ? "only keyword" : "entry count";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i == best || candidates[i].entries != winner.entries) {
            continue;
        }
        if (candidates[i].gap == winner.gap) {
            decided_by = "query order";
            break;
        }
        decided_by = "distance factor";
    }

    const auto& keyword = query.keywords()[best];
    auto runs = index.runs(keyword);
    MinKeywordSelection selection;
    selection.keyword = keyword;
    selection.occurrences.assign(runs.begin(), runs.end());
    selection.rationale = fmt::format("{} -> {} ({})", trace, keyword, decided_by);
    return selection;
}

DistanceFactors distance_factors(const MinKeywordSelection& selection)
{
    DistanceFactors factors;
    const auto& occ = selection.occurrences;
    for (std::size_t i = 1; i < occ.size(); ++i) {
        factors.gaps.push_back(occ[i].start - occ[i - 1].start);
    }
    return factors;
}

std::vector<PartialRange> partial_ranges(const MinKeywordSelection& selection,
                                         const PositionalIndex& index, std::size_t query_size)
{
    std::vector<PartialRange> ranges;
    if (index.token_count() == 0 || query_size == 0) {
        return ranges;
    }
    const std::size_t radius = query_size - 1;
    const std::size_t last_pos = index.token_count() - 1;
    for (const auto& run : selection.occurrences) {
        const std::size_t lo = run.start >= radius ? run.start - radius : 0;
        const std::size_t hi = std::min(last_pos, run.last() + radius);
        if (!ranges.empty() && lo <= ranges.back().interval.end) {
            auto& merged = ranges.back();
            merged.interval.end = std::max(merged.interval.end, hi);
            merged.anchors.push_back(run.start);
        } else {
            ranges.push_back({{lo, hi}, {run.start}});
        }
    }
    return ranges;
}

MwpsrTrace mwpsr_search_traced(const PositionalIndex& index, const Query& query)
{
    if (!query.unit_frequencies()) {
        throw UnsupportedFrequencyError();
    }
    if (!query.requires_all()) {
        throw InvalidQueryError("windowed search requires every query keyword (k = k')");
    }
    MwpsrTrace trace;
    trace.selection = select_min_keyword(index, query);
    trace.ranges = partial_ranges(trace.selection, index, query.size());

    auto& result = trace.result;
    result.source = search_source_id(index, query);
    for (const auto& range : trace.ranges) {
        auto elements = detail::collect_runs(index, query, range.interval.start, range.interval.end);
        detail::sweep_runs(elements, query.size(), query.threshold(), result.criticals,
                           result.stats);
    }
    std::sort(result.criticals.begin(), result.criticals.end(), smaller_range);
    if (!result.criticals.empty()) {
        result.minimal = result.criticals.front();
    }
    detail::close_stats(result.stats, result.criticals.size());
    return trace;
}

SweepResult mwpsr_search(const PositionalIndex& index, const Query& query)
{
    return mwpsr_search_traced(index, query).result;
}

}  // namespace prox
