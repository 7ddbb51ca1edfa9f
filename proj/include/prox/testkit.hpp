#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "prox/corpus_index.hpp"
#include "prox/query.hpp"
#include "prox/sweep_baseline.hpp"

namespace prox::testkit {

/// Exhaustive O(n^2) enumeration of critical ranges straight from the token
/// sequence. Shares no code with the sweeps. Sorted by start.
std::vector<Interval> brute_force_critical_ranges(const TokenSeq& tokens, const Query& query);

/// Deterministic 64-bit generator (splitmix64). Portable across standard
/// libraries, unlike std::uniform_*_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;
    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;
    /// Uniform in [0, 1).
    double unit() noexcept;

private:
    std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

inline constexpr double wsim_tolerance = 0.02;

/// `size` single-letter tokens over {A, B, ...}. Each token repeats its
/// predecessor with probability `wsim_target`, otherwise it is drawn
/// uniformly from the other letters. Draws are retried until the achieved
/// W_sim is within wsim_tolerance of the target; throws ConfigError if the
/// arguments are out of range or the retries run out.
TokenSeq generate_corpus(std::uint64_t seed, std::size_t size, std::size_t alphabet_size,
                         double wsim_target);

}  // namespace prox::testkit
