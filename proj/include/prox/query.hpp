#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace prox {

/// A proximity query: k' distinct keywords, a required count per keyword and
/// the number of distinct keywords (k <= k') a range has to satisfy.
///
/// Keyword order carries no proximity meaning; it is kept only so that tie
/// breaks are reproducible.
class Query {
public:
    /// All frequencies 1, threshold k = k'.
    explicit Query(std::vector<std::string> keywords);

    /// Throws InvalidQueryError on an empty or duplicated keyword list, a
    /// frequency below one, a size mismatch, or a threshold outside [1, k'].
    Query(std::vector<std::string> keywords, std::vector<std::size_t> freq, std::size_t threshold);

    const std::vector<std::string>& keywords() const noexcept { return keywords_; }
    const std::vector<std::size_t>& freq() const noexcept { return freq_; }
    std::size_t threshold() const noexcept { return threshold_; }
    std::size_t size() const noexcept { return keywords_.size(); }

    bool unit_frequencies() const noexcept;
    bool requires_all() const noexcept { return threshold_ == keywords_.size(); }

    std::uint64_t fingerprint() const noexcept;

    friend bool operator==(const Query&, const Query&) = default;

private:
    std::vector<std::string> keywords_;
    std::vector<std::size_t> freq_;
    std::size_t threshold_ = 0;
};

}  // namespace prox
