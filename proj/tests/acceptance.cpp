// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "prox/corpus_index.hpp"
#include "prox/metrics.hpp"
#include "prox/mwpsr.hpp"
#include "prox/testkit.hpp"
#include "prox/wpsr.hpp"
#include "support.hpp"

using namespace prox;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point begin)
{
    return std::chrono::duration<double>(Clock::now() - begin).count();
}

constexpr int random_instances = 1000;

// Size grid and bench records gathered once; criterion 8 reuses them.
std::vector<BenchRecord> all_bench_records;

Outcome worked_example_index()
{
    auto index = test::index_of("CABABABCABBB");
    const bool ok = test::starts(index.runs("B")) == std::vector<std::size_t>{2, 4, 6, 9} &&
                    test::starts(index.runs("A")) == std::vector<std::size_t>{1, 3, 5, 8} &&
                    test::starts(index.runs("C")) == std::vector<std::size_t>{0, 7} &&
                    compute_alpha(index) == 2;
    return {ok, fmt::format("alpha={} B-runs={} A-runs={} C-runs={}", compute_alpha(index),
                            index.runs("B").size(), index.runs("A").size(),
                            index.runs("C").size())};
}

Outcome worked_example_partial_ranges()
{
    auto tokens = test::chars("CABABABCABBB");
    auto index = build_index(tokens);
    auto trace = mwpsr_search_traced(index, Query({"B", "C", "A"}));
    std::vector<std::string> windows;
    for (const auto& r : trace.ranges) {
        windows.push_back(test::slice(tokens, r.interval));
    }
    bool disjoint = true;
    for (std::size_t i = 1; i < trace.ranges.size(); ++i) {
        disjoint = disjoint && trace.ranges[i - 1].interval.end < trace.ranges[i].interval.start;
    }
    const bool ok = windows == std::vector<std::string>{"CAB", "ABCAB"} && disjoint &&
                    trace.result.criticals.size() == 4;
    return {ok, fmt::format("windows={} results={}", fmt::join(windows, ","),
                            trace.result.criticals.size())};
}

Outcome oracle_equivalence()
{
    const auto begin = Clock::now();
    testkit::Rng rng(1001);
    int mismatches = 0;
    for (int i = 0; i < random_instances; ++i) {
        auto [tokens, query] = test::random_instance(rng);
        auto ps = plane_sweep(build_index(tokens), query);
        if (ps.criticals != testkit::brute_force_critical_ranges(tokens, query)) {
            ++mismatches;
        }
    }
    const double elapsed = seconds_since(begin);
    return {mismatches == 0 && elapsed < 60.0,
            fmt::format("{} instances, {} mismatches, {:.2f}s", random_instances, mismatches,
                        elapsed)};
}

Outcome wpsr_fidelity()
{
    testkit::Rng rng(2002);
    test::InstanceShape shape;
    shape.max_freq = 1;
    int set_mismatch = 0;
    int not_cheaper = 0;
    int touched = 0;
    for (int i = 0; i < random_instances; ++i) {
        auto [tokens, query] = test::random_instance(rng, shape);
        auto index = build_index(tokens);
        auto ps = plane_sweep(index, query);
        auto wpsr = wpsr_sweep(index, query);
        if (wpsr.criticals != collapse_run_duplicates(ps.criticals, index)) {
            ++set_mismatch;
        }
        bool has_run = false;
        for (const auto& kw : query.keywords()) {
            for (const auto& run : index.runs(kw)) {
                has_run = has_run || run.ctr > 1;
            }
        }
        if (has_run) {
            ++touched;
            if (!(wpsr.stats.comparisons < ps.stats.comparisons)) {
                ++not_cheaper;
            }
        }
    }
    auto bbba = wpsr_sweep(test::index_of("BBBA"), Query({"A", "B"})).criticals;
    const bool regression = bbba == std::vector<Interval>{{2, 3}};
    return {set_mismatch == 0 && not_cheaper == 0 && regression,
            fmt::format("{} instances, {} set mismatches, {}/{} run-touching searches not cheaper, "
                        "BBBA -> {}",
                        random_instances, set_mismatch, not_cheaper, touched,
                        regression ? "[2,3]" : "wrong")};
}

Outcome mwpsr_subset_and_completeness()
{
    testkit::Rng rng(3003);
    test::InstanceShape shape;
    shape.max_freq = 1;
    shape.random_threshold = false;
    shape.present_only = true;
    int unsound = 0;
    int missing = 0;
    for (int i = 0; i < random_instances; ++i) {
        auto [tokens, query] = test::random_instance(rng, shape);
        auto index = build_index(tokens);
        auto ps = plane_sweep(index, query);
        auto trace = mwpsr_search_traced(index, query);
        auto raw = test::sorted(ps.criticals);
        auto reference = collapse_run_duplicates(ps.criticals, index);
        auto emitted = test::sorted(trace.result.criticals);
        for (const auto& r : emitted) {
            if (!std::binary_search(raw.begin(), raw.end(), r)) {
                ++unsound;
            }
        }
        for (const auto& r : reference) {
            const bool inside = std::any_of(trace.ranges.begin(), trace.ranges.end(),
                                            [&](const PartialRange& pr) {
                                                return pr.interval.contains(r);
                                            });
            if (inside && !std::binary_search(emitted.begin(), emitted.end(), r)) {
                ++missing;
            }
        }
    }
    return {unsound == 0 && missing == 0,
            fmt::format("{} instances, {} unsound, {} missing", random_instances, unsound,
                        missing)};
}

Outcome size_grid_ordering()
{
    const auto begin = Clock::now();
    BenchConfig config;
    config.sizes = {3000, 6000, 12000, 18000, 24000, 30000};
    config.wsim_levels = {0.6};
    config.seed_count = 5;
    config.query_size = 3;
    auto records = run_bench(config);
    all_bench_records.insert(all_bench_records.end(), records.begin(), records.end());

    std::map<std::size_t, std::map<Algo, double>> mean;
    for (const auto& r : records) {
        mean[r.n][r.algo] += static_cast<double>(r.comparisons) / config.seed_count;
    }
    bool ok = true;
    std::string detail;
    for (auto& [n, by_algo] : mean) {
        const double ps = by_algo[Algo::ps];
        const double wpsr = by_algo[Algo::wpsr];
        const double mwpsr = by_algo[Algo::mwpsr];
        const double ratio = mwpsr / ps;
        ok = ok && mwpsr <= wpsr && wpsr <= ps && ratio <= 0.6;
        detail += fmt::format("{}n={} mwpsr/ps={:.3f}", detail.empty() ? "" : ", ", n, ratio);
    }
    const double elapsed = seconds_since(begin);
    ok = ok && elapsed < 120.0;
    return {ok, fmt::format("{} ({:.2f}s)", detail, elapsed)};
}

Outcome wsim_trend()
{
    BenchConfig config;
    config.sizes = {4000};
    config.wsim_levels = {0.2, 0.4, 0.6};
    config.algos = {Algo::ps, Algo::mwpsr};
    config.seed_count = 5;
    config.query_size = 3;
    auto records = run_bench(config);
    all_bench_records.insert(all_bench_records.end(), records.begin(), records.end());

    std::map<double, double> ratio;
    for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
        ratio[records[i].wsim_target] +=
            static_cast<double>(records[i + 1].comparisons) /
            static_cast<double>(records[i].comparisons) / config.seed_count;
    }
    bool ok = true;
    double previous = 1e300;
    std::string detail;
    for (const auto& [wsim, r] : ratio) {
        ok = ok && r <= previous;
        previous = r;
        detail += fmt::format("{}wsim={} ratio={:.3f}", detail.empty() ? "" : ", ", wsim, r);
    }
    return {ok, detail};
}

Outcome counter_identity()
{
    std::size_t bad_records = 0;
    for (const auto& r : all_bench_records) {
        if (r.c_n != r.beta - r.gamma) {
            ++bad_records;
        }
    }

    const auto dir = fs::temp_directory_path() / "prox_acceptance_stats";
    fs::create_directories(dir);
    std::size_t stats_lines = 0;
    std::size_t bad_lines = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto doc = (dir / "doc.txt").string();
        const auto idx = (dir / "doc.idx").string();
        std::ostringstream sink;
        std::ostringstream err;
        cli::run({"gen", "--seed", std::to_string(seed), "--size", "2000", "--wsim", "0.5", "-o", doc},
                 sink, err);
        cli::run({"index", doc, "-o", idx}, sink, err);
        for (std::string algo : {"ps", "wpsr", "mwpsr"}) {
            std::ostringstream out;
            if (cli::run({"search", idx, "-q", "A B C", "--algo", algo, "--stats"}, out, err) != 0) {
                ++bad_lines;
                continue;
            }
            auto text = out.str();
            auto at = text.rfind("comparisons=");
            std::size_t c = 0, b = 0, g = 0, cn = 0;
            if (at == std::string::npos ||
                std::sscanf(text.c_str() + at, "comparisons=%zu beta=%zu gamma=%zu cn=%zu", &c, &b,
                            &g, &cn) != 4 ||
                cn != b - g) {
                ++bad_lines;
            }
            ++stats_lines;
        }
    }
    fs::remove_all(dir);
    return {bad_records == 0 && bad_lines == 0 && !all_bench_records.empty() && stats_lines > 0,
            fmt::format("{} records, {} bad; {} --stats lines, {} bad", all_bench_records.size(),
                        bad_records, stats_lines, bad_lines)};
}

std::string without_elapsed(const std::string& csv)
{
    std::istringstream in(csv);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        out += line.substr(0, line.rfind(',')) + '\n';
    }
    return out;
}

Outcome bench_determinism()
{
    const auto dir = fs::temp_directory_path() / "prox_acceptance_bench";
    fs::create_directories(dir);
    std::vector<std::string> csvs;
    for (std::string jobs : {"1", "1", "4"}) {
        const auto path = (dir / ("run" + std::to_string(csvs.size()) + ".csv")).string();
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run({"bench", "--sizes", "1000,3000", "--wsim", "0.2,0.6", "--algos",
                                   "ps,wpsr,mwpsr", "--seeds", "3", "--seed", "7", "--k", "3",
                                   "--jobs", jobs, "--csv", path},
                                  out, err);
        if (code != 0) {
            fs::remove_all(dir);
            return {false, "bench failed: " + err.str()};
        }
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        csvs.push_back(ss.str());
    }
    fs::remove_all(dir);
    const bool ok = without_elapsed(csvs[0]) == without_elapsed(csvs[1]) &&
                    without_elapsed(csvs[0]) == without_elapsed(csvs[2]);
    return {ok, fmt::format("3 runs, {} bytes each, identical modulo elapsed_ns: {}",
                            csvs[0].size(), ok ? "yes" : "no")};
}

Outcome round_trips()
{
    testkit::Rng rng(4004);
    int failures = 0;
    const int documents = 500;
    for (int i = 0; i < documents; ++i) {
        const bool words = i % 2 == 1;
        std::string text;
        const std::size_t n = rng.below(300);
        for (std::size_t j = 0; j < n; ++j) {
            if (words) {
                text += std::string(1 + rng.below(3), static_cast<char>('a' + rng.below(4)));
                text += rng.below(5) == 0 ? "  " : " ";
            } else {
                text += static_cast<char>('A' + rng.below(1 + rng.below(6)));
                if (rng.below(20) == 0) {
                    text += '\n';
                }
            }
        }
        auto tokens = tokenize(text, {words ? TokenMode::words : TokenMode::chars});
        auto index = build_index(tokens);
        std::ostringstream saved;
        save_index(index, saved);
        std::istringstream in(saved.str());
        auto loaded = load_index(in);
        std::ostringstream resaved;
        save_index(loaded, resaved);

        std::string rebuilt;
        for (const auto& t : decompress(loaded)) {
            rebuilt += t;
        }
        std::string compact;
        for (const auto& t : tokens) {
            compact += t;
        }
        if (!(loaded == index) || saved.str() != resaved.str() || decompress(index) != tokens ||
            rebuilt != compact) {
            ++failures;
        }
    }
    return {failures == 0, fmt::format("{} documents, {} failures", documents, failures)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 worked-example index and alpha", worked_example_index},
        {"AC2 partial ranges CAB/ABCAB and four results", worked_example_partial_ranges},
        {"AC3 plane sweep equals brute-force oracle", oracle_equivalence},
        {"AC4 run-aware sweep fidelity and savings", wpsr_fidelity},
        {"AC5 windowed search subset and window completeness", mwpsr_subset_and_completeness},
        {"AC6 comparison ordering mwpsr <= wpsr <= ps, mwpsr/ps <= 0.6", size_grid_ordering},
        {"AC7 advantage non-increasing ratio over W_sim", wsim_trend},
        {"AC8 counter identity cn = beta - gamma", counter_identity},
        {"AC9 bench CSV deterministic modulo elapsed_ns", bench_determinism},
        {"AC10 index and token round-trips", round_trips},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << outcome.detail
                  << '\n';
    }
    std::cout << (failed == 0 ? "all criteria passed" : fmt::format("{} criteria failed", failed))
              << '\n';
    return failed == 0 ? 0 : 1;
}
