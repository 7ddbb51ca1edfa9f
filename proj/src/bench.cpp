#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "prox/error.hpp"
#include "prox/metrics.hpp"
#include "prox/testkit.hpp"

namespace prox {

namespace {

struct Cell {
    std::size_t size;
    double wsim;
    std::uint64_t seed;
};

std::string cell_name(const Cell& cell)
{
    return fmt::format("n={} wsim={} seed={}", cell.size, cell.wsim, cell.seed);
}

void validate(const BenchConfig& config)
{
    if (config.sizes.empty()) {
        throw ConfigError("bench grid has no sizes");
    }
    if (config.wsim_levels.empty()) {
        throw ConfigError("bench grid has no W_sim levels");
    }
    if (config.algos.empty()) {
        throw ConfigError("bench grid has no algorithms");
    }
    if (config.seed_count == 0) {
        throw ConfigError("bench needs at least one seed");
    }
    if (config.query_size == 0) {
        throw ConfigError("query size must be at least 1");
    }
    if (config.alphabet_size < 2 || config.alphabet_size > 26) {
        throw ConfigError(fmt::format("alphabet size {} outside [2, 26]", config.alphabet_size));
    }
    if (config.query_size > config.alphabet_size) {
        throw ConfigError(fmt::format("query size {} exceeds alphabet size {}", config.query_size,
                                      config.alphabet_size));
    }
    for (auto size : config.sizes) {
        if (size == 0) {
            throw ConfigError("bench size 0 is not allowed");
        }
    }
    for (auto wsim : config.wsim_levels) {
        if (!(wsim >= 0.0 && wsim < 1.0)) {
            throw ConfigError(fmt::format("W_sim level {} outside [0, 1)", wsim));
        }
    }
}

std::vector<BenchRecord> run_cell(const BenchConfig& config, const Cell& cell)
{
    const auto corpus_seed =
        testkit::mix_seed(testkit::mix_seed(cell.seed, cell.size), std::bit_cast<std::uint64_t>(cell.wsim));
    TokenSeq tokens;
    try {
        tokens = testkit::generate_corpus(corpus_seed, cell.size, config.alphabet_size, cell.wsim);
    } catch (const Error& e) {
        throw ConfigError(fmt::format("cell {}: {}", cell_name(cell), e.what()));
    }
    const auto index = build_index(tokens);
    const double wsim_actual = compute_wsim(index);

    std::vector<std::string> present;
    for (const auto& [keyword, runs] : index.lists()) {
        present.push_back(keyword);
    }
    if (present.size() < config.query_size) {
        throw ConfigError(fmt::format("cell {}: corpus has {} distinct keywords, query needs {}",
                                      cell_name(cell), present.size(), config.query_size));
    }
    testkit::Rng rng(testkit::mix_seed(corpus_seed, 0x51));
    for (std::size_t i = 0; i < config.query_size; ++i) {
        auto j = i + rng.below(present.size() - i);
        std::swap(present[i], present[j]);
    }
    present.resize(config.query_size);
    const Query query(present);

    std::vector<BenchRecord> records;
    for (auto algo : config.algos) {
        const auto begin = std::chrono::steady_clock::now();
        const auto result = run_algorithm(algo, index, query);
        const auto elapsed = std::chrono::steady_clock::now() - begin;

        BenchRecord record;
        record.algo = algo;
        record.n = cell.size;
        record.k = config.query_size;
        record.wsim_target = cell.wsim;
        record.wsim_actual = wsim_actual;
        record.seed = cell.seed;
        record.comparisons = result.stats.comparisons;
        record.beta = result.stats.beta;
        record.gamma = result.stats.gamma;
        record.c_n = result.stats.c_n;
        record.ranges_emitted = result.stats.ranges_emitted;
        record.elapsed_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
        records.push_back(record);
    }
    return records;
}

std::string csv_field(std::string_view value)
{
    if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(value);
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config)
{
    validate(config);

    std::vector<Cell> cells;
    for (auto size : config.sizes) {
        for (auto wsim : config.wsim_levels) {
            for (std::size_t s = 0; s < config.seed_count; ++s) {
                cells.push_back({size, wsim, config.seed + s});
            }
        }
    }

    std::vector<std::vector<BenchRecord>> per_cell(cells.size());
    std::vector<std::exception_ptr> failures(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < cells.size(); i = next++) {
            try {
                per_cell[i] = run_cell(config, cells[i]);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const auto jobs = std::clamp<std::size_t>(config.jobs, 1, cells.size());
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }

    std::vector<BenchRecord> records;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (failures[i]) {
            std::rethrow_exception(failures[i]);
        }
        records.insert(records.end(), per_cell[i].begin(), per_cell[i].end());
    }
    return records;
}

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out)
{
    out << bench_csv_header << '\n';
    for (const auto& r : records) {
        out << fmt::format("{},{},{},{},{:.6f},{},{},{},{},{},{},{}\n", csv_field(to_string(r.algo)),
                           r.n, r.k, r.wsim_target, r.wsim_actual, r.seed, r.comparisons, r.beta,
                           r.gamma, r.c_n, r.ranges_emitted, r.elapsed_ns);
    }
}

}  // namespace prox
