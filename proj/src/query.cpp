#include "prox/query.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "prox/error.hpp"

namespace prox {

Query::Query(std::vector<std::string> keywords)
    : Query(keywords, std::vector<std::size_t>(keywords.size(), 1), keywords.size())
{
}

Query::Query(std::vector<std::string> keywords, std::vector<std::size_t> freq,
             std::size_t threshold)
    : keywords_(std::move(keywords)), freq_(std::move(freq)), threshold_(threshold)
{
    if (keywords_.empty()) {
        throw InvalidQueryError("query has no keywords");
    }
    if (freq_.size() != keywords_.size()) {
        throw InvalidQueryError(fmt::format("{} frequencies given for {} keywords", freq_.size(),
                                            keywords_.size()));
    }
    std::set<std::string> seen;
    for (const auto& keyword : keywords_) {
        if (keyword.empty()) {
            throw InvalidQueryError("empty query keyword");
        }
        if (!seen.insert(keyword).second) {
            throw InvalidQueryError("duplicate query keyword: " + keyword);
        }
    }
    if (std::any_of(freq_.begin(), freq_.end(), [](std::size_t f) { return f < 1; })) {
        throw InvalidQueryError("keyword frequencies must be at least 1");
    }
    if (threshold_ < 1 || threshold_ > keywords_.size()) {
        throw InvalidQueryError(fmt::format("threshold {} outside [1, {}]", threshold_,
                                            keywords_.size()));
    }
}

bool Query::unit_frequencies() const noexcept
{
    return std::all_of(freq_.begin(), freq_.end(), [](std::size_t f) { return f == 1; });
}

std::uint64_t Query::fingerprint() const noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (std::size_t i = 0; i < keywords_.size(); ++i) {
        mix(std::hash<std::string>{}(keywords_[i]));
        mix(freq_[i]);
    }
    mix(threshold_);
    return h;
}

}  // namespace prox
