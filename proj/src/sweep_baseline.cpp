#include "prox/sweep_baseline.hpp"

#include <algorithm>

namespace prox {

std::uint64_t search_source_id(const PositionalIndex& index, const Query& query) noexcept
{
    std::uint64_t h = index.fingerprint();
    h ^= query.fingerprint() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

namespace {

std::size_t occurrences_in(std::span<const RunEntry> runs, const Interval& window)
{
    auto it = std::partition_point(runs.begin(), runs.end(),
                                   [&](const RunEntry& r) { return r.last() < window.start; });
    std::size_t count = 0;
    for (; it != runs.end() && it->start <= window.end; ++it) {
        count += std::min(it->last(), window.end) - std::max(it->start, window.start) + 1;
    }
    return count;
}

struct Occurrence {
    std::size_t pos;
    std::size_t keyword;  // index into the query
};

}  // namespace

bool is_candidate(const Interval& window, const PositionalIndex& index, const Query& query)
{
    std::size_t satisfied = 0;
    for (std::size_t i = 0; i < query.size(); ++i) {
        if (occurrences_in(index.runs(query.keywords()[i]), window) >= query.freq()[i]) {
            ++satisfied;
        }
    }
    return satisfied >= query.threshold();
}

SweepResult plane_sweep(const PositionalIndex& index, const Query& query)
{
    SweepResult result;
    result.source = search_source_id(index, query);

    std::vector<Occurrence> occ;
    for (std::size_t i = 0; i < query.size(); ++i) {
        for (const auto& run : index.runs(query.keywords()[i])) {
            for (std::size_t p = run.start; p <= run.last(); ++p) {
                occ.push_back({p, i});
            }
        }
    }
    std::sort(occ.begin(), occ.end(),
              [](const Occurrence& a, const Occurrence& b) { return a.pos < b.pos; });

    const auto& freq = query.freq();
    const std::size_t k = query.threshold();
    std::vector<std::size_t> counts(query.size(), 0);
    std::size_t satisfied = 0;
    auto& stats = result.stats;

    std::size_t l = 0;
    for (std::size_t r = 0; r < occ.size(); ++r) {
        ++stats.comparisons;
        const auto kw = occ[r].keyword;
        if (++counts[kw] == freq[kw]) {
            ++satisfied;
        }
        if (satisfied < k) {
            continue;
        }
        // Advance the left pointer while the range stays a candidate.
        while (true) {
            ++stats.comparisons;
            const auto lk = occ[l].keyword;
            const bool keeps = counts[lk] != freq[lk] || satisfied > k;
            if (!keeps) {
                break;
            }
            if (counts[lk]-- == freq[lk]) {
                --satisfied;
            }
            ++l;
        }
        ++stats.ranges_examined;
        // Left-minimal; critical iff dropping the right end breaks candidacy.
        if (counts[kw] == freq[kw] && satisfied == k) {
            result.criticals.push_back({occ[l].pos, occ[r].pos});
        }
    }

    for (const auto& range : result.criticals) {
        if (!result.minimal || smaller_range(range, *result.minimal)) {
            result.minimal = range;
        }
    }
    stats.beta = stats.comparisons;
    stats.c_n = stats.beta - stats.gamma;
    stats.ranges_emitted = result.criticals.size();
    return result;
}

}  // namespace prox
