#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prox/corpus_index.hpp"
#include "prox/query.hpp"
#include "prox/sweep_baseline.hpp"

namespace prox {

struct MinKeywordSelection {
    std::string keyword;
    std::vector<RunEntry> occurrences;
    /// Human-readable record of how ties were broken.
    std::string rationale;
};

/// Gaps between consecutive run starts of one keyword.
struct DistanceFactors {
    std::vector<std::size_t> gaps;
};

struct PartialRange {
    Interval interval;
    /// Starts of the minimum-keyword runs inside `interval`.
    std::vector<std::size_t> anchors;
};

/// Fewest runs wins; ties go to the larger minimum gap (a keyword with a
/// single run has an unbounded gap), then to the earlier query position.
/// Throws KeywordNotFoundError if any query keyword is absent.
MinKeywordSelection select_min_keyword(const PositionalIndex& index, const Query& query);

DistanceFactors distance_factors(const MinKeywordSelection& selection);

/// One window of radius (query_size - 1) around each minimum-keyword run,
/// clamped to the document; overlapping windows are merged.
std::vector<PartialRange> partial_ranges(const MinKeywordSelection& selection,
                                         const PositionalIndex& index,
                                         std::size_t query_size);

struct MwpsrTrace {
    SweepResult result;
    MinKeywordSelection selection;
    std::vector<PartialRange> ranges;
};

/// Run-aware sweep restricted to the partial ranges. Criticals come out
/// smallest first (size, then start). Requires f_i = 1 and k = k'.
SweepResult mwpsr_search(const PositionalIndex& index, const Query& query);
MwpsrTrace mwpsr_search_traced(const PositionalIndex& index, const Query& query);

}  // namespace prox
