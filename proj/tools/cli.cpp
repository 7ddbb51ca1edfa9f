#include "cli.hpp"

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "prox/corpus_index.hpp"
#include "prox/error.hpp"
#include "prox/metrics.hpp"
#include "prox/testkit.hpp"

namespace prox::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;

struct IndexArgs {
    std::string input;
    std::string tokens = "chars";
    std::string output;
    bool lowercase = false;
};

struct SearchArgs {
    std::string index;
    std::string query;
    std::string algo = "mwpsr";
    std::vector<std::size_t> freq;
    std::optional<std::size_t> threshold;
    std::optional<std::size_t> top;
    bool stats = false;
};

struct GenArgs {
    std::uint64_t seed = 1;
    std::size_t size = 0;
    std::size_t alphabet = 3;
    double wsim = 0.0;
    std::string output;
};

struct BenchArgs {
    std::vector<std::size_t> sizes;
    std::vector<double> wsim;
    std::vector<std::string> algos{"ps", "wpsr", "mwpsr"};
    std::size_t seeds = 5;
    std::uint64_t seed = 1;
    std::size_t k = 3;
    std::size_t alphabet = 3;
    std::size_t jobs = 1;
    std::string csv;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        throw Error("cannot write " + path);
    }
}

int cmd_index(const IndexArgs& args, std::ostream& out)
{
    TokenizeOptions options;
    options.mode = args.tokens == "words" ? TokenMode::words : TokenMode::chars;
    options.lowercase = args.lowercase;
    const auto index = build_index(tokenize(read_file(args.input), options));
    const double wsim = compute_wsim(index);
    save_index(index, args.output);
    out << fmt::format("|D|={} n={} alpha={} wsim={:.4f} keywords={}\n", index.token_count(),
                       index.total_occurrences(), index.alpha(), wsim, index.keyword_count());
    return exit_ok;
}

int cmd_search(const SearchArgs& args, std::ostream& out)
{
    const auto index = load_index(args.index);
    std::vector<std::string> keywords;
    std::istringstream words(args.query);
    for (std::string w; words >> w;) {
        keywords.push_back(w);
    }
    auto freq = args.freq.empty() ? std::vector<std::size_t>(keywords.size(), 1) : args.freq;
    const Query query(keywords, freq, args.threshold.value_or(keywords.size()));
    const auto algo = parse_algo(args.algo);

    if (query.requires_all()) {
        for (const auto& keyword : query.keywords()) {
            if (!index.contains(keyword)) {
                throw KeywordNotFoundError(keyword);
            }
        }
    }
    const auto result = run_algorithm(algo, index, query);

    std::size_t limit = args.top.value_or(result.criticals.size());
    for (std::size_t i = 0; i < result.criticals.size() && i < limit; ++i) {
        const auto& r = result.criticals[i];
        out << r.start << '\t' << r.end << '\t' << r.size() << '\n';
    }
    if (args.stats) {
        const auto& s = result.stats;
        out << fmt::format("comparisons={} beta={} gamma={} cn={}\n", s.comparisons, s.beta,
                           s.gamma, s.c_n);
    }
    return exit_ok;
}

int cmd_gen(const GenArgs& args, std::ostream& out)
{
    const auto tokens = testkit::generate_corpus(args.seed, args.size, args.alphabet, args.wsim);
    std::string text;
    text.reserve(tokens.size());
    for (const auto& t : tokens) {
        text += t;
    }
    write_file(args.output, text);
    out << fmt::format("wrote {} tokens, wsim={:.4f}\n", tokens.size(),
                       compute_wsim(build_index(tokens)));
    return exit_ok;
}

int cmd_bench(const BenchArgs& args, std::ostream& out)
{
    BenchConfig config;
    config.sizes = args.sizes;
    config.wsim_levels = args.wsim;
    config.algos.clear();
    for (const auto& name : args.algos) {
        config.algos.push_back(parse_algo(name));
    }
    config.seed = args.seed;
    config.seed_count = args.seeds;
    config.query_size = args.k;
    config.alphabet_size = args.alphabet;
    config.jobs = args.jobs;

    const auto records = run_bench(config);
    std::ostringstream csv;
    write_bench_csv(records, csv);
    if (args.csv == "-") {
        out << csv.str();
    } else {
        write_file(args.csv, csv.str());
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"k-keyword proximity search over run-compressed positional indexes", "prox"};
    app.require_subcommand(1);

    IndexArgs index_args;
    auto* index_cmd = app.add_subcommand("index", "Tokenize a document and write a PROXIDX index");
    index_cmd->add_option("file", index_args.input, "Input document")->required();
    index_cmd->add_option("--tokens", index_args.tokens, "Tokenization mode")
        ->check(CLI::IsMember({"chars", "words"}));
    index_cmd->add_option("-o,--output", index_args.output, "Index file to write")->required();
    index_cmd->add_flag("--lowercase", index_args.lowercase, "Lowercase ASCII letters");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "Find critical ranges for a query");
    search_cmd->add_option("index", search_args.index, "PROXIDX index file")->required();
    search_cmd->add_option("-q,--query", search_args.query, "Space-separated keywords")->required();
    search_cmd->add_option("--algo", search_args.algo, "ps, wpsr or mwpsr")
        ->check(CLI::IsMember({"ps", "wpsr", "mwpsr"}));
    search_cmd->add_option("--freq", search_args.freq, "Per-keyword counts, comma separated")
        ->delimiter(',');
    search_cmd->add_option("--threshold", search_args.threshold, "Distinct keywords required");
    search_cmd->add_option("--top", search_args.top, "Print at most N ranges");
    search_cmd->add_flag("--stats", search_args.stats, "Append comparison counters");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random single-letter corpus");
    gen_cmd->add_option("--seed", gen_args.seed, "Random seed");
    gen_cmd->add_option("--size", gen_args.size, "Number of tokens")->required();
    gen_cmd->add_option("--alphabet", gen_args.alphabet, "Number of distinct letters");
    gen_cmd->add_option("--wsim", gen_args.wsim, "Target repetition factor");
    gen_cmd->add_option("-o,--output", gen_args.output, "File to write")->required();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Compare comparison counts across algorithms");
    bench_cmd->add_option("--sizes", bench_args.sizes, "Corpus sizes")->delimiter(',')->required();
    bench_cmd->add_option("--wsim", bench_args.wsim, "Repetition factors")->delimiter(',')->required();
    bench_cmd->add_option("--algos", bench_args.algos, "Algorithms")->delimiter(',');
    bench_cmd->add_option("--seeds", bench_args.seeds, "Seeds per cell");
    bench_cmd->add_option("--seed", bench_args.seed, "First seed");
    bench_cmd->add_option("--k", bench_args.k, "Query size");
    bench_cmd->add_option("--alphabet", bench_args.alphabet, "Corpus alphabet size");
    bench_cmd->add_option("--jobs", bench_args.jobs, "Cells evaluated in parallel");
    bench_cmd->add_option("--csv", bench_args.csv, "Output CSV ('-' for stdout)")->required();

    std::vector<const char*> argv{"prox"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "prox: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (index_cmd->parsed()) {
            return cmd_index(index_args, out);
        }
        if (search_cmd->parsed()) {
            return cmd_search(search_args, out);
        }
        if (gen_cmd->parsed()) {
            return cmd_gen(gen_args, out);
        }
        return cmd_bench(bench_args, out);
    } catch (const std::exception& e) {
        err << "prox: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace prox::cli
