#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "prox/corpus_index.hpp"
#include "prox/query.hpp"
#include "prox/sweep_baseline.hpp"
#include "prox/testkit.hpp"

namespace prox::test {

inline TokenSeq chars(std::string_view text)
{
    return tokenize(text, {TokenMode::chars, false});
}

inline PositionalIndex index_of(std::string_view text)
{
    return build_index(chars(text));
}

inline std::vector<std::size_t> starts(std::span<const RunEntry> runs)
{
    std::vector<std::size_t> out;
    for (const auto& r : runs) {
        out.push_back(r.start);
    }
    return out;
}

inline std::vector<Interval> sorted(std::vector<Interval> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

inline std::string slice(const TokenSeq& tokens, const Interval& range)
{
    std::string out;
    for (auto p = range.start; p <= range.end; ++p) {
        out += tokens[p];
    }
    return out;
}

struct Instance {
    TokenSeq tokens;
    Query query;
};

struct InstanceShape {
    std::size_t max_size = 200;
    std::size_t max_alphabet = 8;
    std::size_t max_query = 4;
    std::size_t max_freq = 2;
    bool random_threshold = true;
    /// Draw query keywords only from letters present in the document.
    bool present_only = false;
};

/// Random document with clustered repeats plus a random query over its
/// alphabet.
inline Instance random_instance(testkit::Rng& rng, const InstanceShape& shape = {})
{
    const std::size_t alphabet = 2 + rng.below(shape.max_alphabet - 1);
    const std::size_t n = 1 + rng.below(shape.max_size);
    const double repeat = rng.unit() * 0.8;
    TokenSeq tokens;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && rng.unit() < repeat) {
            tokens.push_back(tokens.back());
        } else {
            tokens.emplace_back(1, static_cast<char>('A' + rng.below(alphabet)));
        }
    }

    std::vector<std::string> pool;
    if (shape.present_only) {
        pool = tokens;
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    } else {
        for (std::size_t c = 0; c < alphabet; ++c) {
            pool.emplace_back(1, static_cast<char>('A' + c));
        }
    }
    const std::size_t k_prime = 1 + rng.below(std::min(shape.max_query, pool.size()));
    for (std::size_t i = 0; i < k_prime; ++i) {
        std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    }
    pool.resize(k_prime);

    std::vector<std::size_t> freq(k_prime);
    for (auto& f : freq) {
        f = 1 + rng.below(shape.max_freq);
    }
    const std::size_t threshold = shape.random_threshold ? 1 + rng.below(k_prime) : k_prime;
    return {std::move(tokens), Query(pool, freq, threshold)};
}

}  // namespace prox::test
