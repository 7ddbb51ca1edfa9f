#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prox/corpus_index.hpp"
#include "prox/query.hpp"
#include "prox/sweep_baseline.hpp"

namespace prox {

/// Share of the plane sweep's critical ranges that `windowed` also returned.
/// Throws prox::Error if the two results come from different inputs.
double compute_rd(const SweepResult& windowed, const SweepResult& plane);

enum class Algo { ps, wpsr, mwpsr };

std::string_view to_string(Algo algo) noexcept;
/// Throws ConfigError on an unknown name.
Algo parse_algo(std::string_view name);

SweepResult run_algorithm(Algo algo, const PositionalIndex& index, const Query& query);

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::vector<double> wsim_levels;
    std::vector<Algo> algos{Algo::ps, Algo::wpsr, Algo::mwpsr};
    std::uint64_t seed = 1;
    std::size_t seed_count = 1;
    std::size_t query_size = 3;
    std::size_t alphabet_size = 3;
    std::size_t jobs = 1;
};

struct BenchRecord {
    Algo algo = Algo::ps;
    std::size_t n = 0;
    std::size_t k = 0;
    double wsim_target = 0.0;
    double wsim_actual = 0.0;
    std::uint64_t seed = 0;
    std::size_t comparisons = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::size_t c_n = 0;
    std::size_t ranges_emitted = 0;
    std::uint64_t elapsed_ns = 0;
};

/// Records come out ordered by size, then W_sim level, then seed, then the
/// order of `config.algos`. Throws ConfigError before doing any work if the
/// grid is invalid, or naming the cell whose corpus could not be generated.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr std::string_view bench_csv_header =
    "algo,n,k,wsim_target,wsim_actual,seed,comparisons,beta,gamma,cn,ranges,elapsed_ns";

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out);

}  // namespace prox
