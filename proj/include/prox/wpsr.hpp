#pragma once

#include <span>
#include <vector>

#include "prox/corpus_index.hpp"
#include "prox/query.hpp"
#include "prox/sweep_baseline.hpp"

namespace prox {

/// Plane sweep over the run-compressed lists. Each run is tested once; a
/// range touching a run ends at the run endpoint nearest the other keywords.
///
/// Single-position criticals inside one run are reported once, at the run
/// start. Throws UnsupportedFrequencyError when any f_i > 1.
SweepResult wpsr_sweep(const PositionalIndex& index, const Query& query);

/// Maps every size-1 interval to the start of the run that contains it and
/// drops the duplicates this creates. Other intervals pass through. The
/// result is sorted by start.
std::vector<Interval> collapse_run_duplicates(std::span<const Interval> intervals,
                                              const PositionalIndex& index);

}  // namespace prox
