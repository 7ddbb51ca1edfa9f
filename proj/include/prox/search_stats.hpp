#pragma once

#include <cstddef>

namespace prox {

/// Comparison counters for one search.
///
/// comparisons : position tests actually executed by the sweep pointers.
/// beta        : tests an uncompressed sweep would run over the searched region.
/// gamma       : tests skipped through run counters.
/// c_n         : beta - gamma; equals `comparisons` for every search here.
///
/// Each executed test increments exactly one counter, so the availability
/// factor of a position is implicit in whether it was ever tested.
struct SearchStats {
    std::size_t comparisons = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::size_t c_n = 0;
    std::size_t ranges_examined = 0;
    std::size_t ranges_emitted = 0;

    SearchStats& operator+=(const SearchStats& other) noexcept
    {
        comparisons += other.comparisons;
        beta += other.beta;
        gamma += other.gamma;
        c_n += other.c_n;
        ranges_examined += other.ranges_examined;
        ranges_emitted += other.ranges_emitted;
        return *this;
    }

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

}  // namespace prox
