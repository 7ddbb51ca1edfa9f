#include "prox/testkit.hpp"

#include <cmath>

#include <fmt/format.h>

#include "prox/error.hpp"

namespace prox::testkit {

std::vector<Interval> brute_force_critical_ranges(const TokenSeq& tokens, const Query& query)
{
    const std::size_t n = tokens.size();
    const auto& keywords = query.keywords();
    const auto& freq = query.freq();

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(n, none);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t i = 0; i < keywords.size(); ++i) {
            if (tokens[p] == keywords[i]) {
                id[p] = i;
            }
        }
    }

    // cand[l * n + r]: does [l, r] satisfy the query?
    std::vector<char> cand(n * n, 0);
    for (std::size_t l = 0; l < n; ++l) {
        std::vector<std::size_t> counts(keywords.size(), 0);
        std::size_t satisfied = 0;
        for (std::size_t r = l; r < n; ++r) {
            if (id[r] != none && ++counts[id[r]] == freq[id[r]]) {
                ++satisfied;
            }
            cand[l * n + r] = satisfied >= query.threshold();
        }
    }
    auto is_cand = [&](std::size_t l, std::size_t r) { return l <= r && cand[l * n + r]; };

    std::vector<Interval> out;
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t r = l; r < n; ++r) {
            if (!is_cand(l, r)) {
                continue;
            }
            const bool left_shrinks = is_cand(l + 1, r);
            const bool right_shrinks = r > l && is_cand(l, r - 1);
            if (!left_shrinks && !right_shrinks) {
                out.push_back({l, r});
            }
        }
    }
    return out;
}

std::uint64_t Rng::next() noexcept
{
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept
{
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const auto r = next();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

double Rng::unit() noexcept
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept
{
    Rng rng(a ^ (b * 0xD6E8FEB86659FD93ULL));
    rng.next();
    return rng.next();
}

namespace {

constexpr int max_attempts = 1000;

}  // namespace

TokenSeq generate_corpus(std::uint64_t seed, std::size_t size, std::size_t alphabet_size,
                         double wsim_target)
{
    if (size == 0) {
        throw ConfigError("corpus size must be at least 1");
    }
    if (alphabet_size < 2 || alphabet_size > 26) {
        throw ConfigError(fmt::format("alphabet size {} outside [2, 26]", alphabet_size));
    }
    const double max_wsim = 1.0 - 1.0 / static_cast<double>(size);
    if (!(wsim_target >= 0.0) || wsim_target > max_wsim + 1e-12) {
        throw ConfigError(fmt::format("W_sim target {} outside [0, {}] for size {}", wsim_target,
                                      max_wsim, size));
    }

    std::vector<std::size_t> letters(size);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::size_t repeats = 0;
        letters[0] = rng.below(alphabet_size);
        for (std::size_t i = 1; i < size; ++i) {
            if (rng.unit() < wsim_target) {
                letters[i] = letters[i - 1];
                ++repeats;
            } else {
                auto c = rng.below(alphabet_size - 1);
                letters[i] = c >= letters[i - 1] ? c + 1 : c;
            }
        }
        const double achieved = static_cast<double>(repeats) / static_cast<double>(size);
        if (std::abs(achieved - wsim_target) <= wsim_tolerance) {
            TokenSeq tokens;
            tokens.reserve(size);
            for (auto c : letters) {
                tokens.emplace_back(1, static_cast<char>('A' + c));
            }
            return tokens;
        }
    }
    throw ConfigError(fmt::format("could not reach W_sim {} +/- {} at size {} after {} attempts",
                                  wsim_target, wsim_tolerance, size, max_attempts));
}

}  // namespace prox::testkit
