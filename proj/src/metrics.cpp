#include "prox/metrics.hpp"

#include <algorithm>

#include "prox/error.hpp"
#include "prox/mwpsr.hpp"
#include "prox/wpsr.hpp"

namespace prox {

double compute_rd(const SweepResult& windowed, const SweepResult& plane)
{
    if (windowed.source != plane.source) {
        throw Error("R_D needs two results computed from the same index and query");
    }
    if (plane.criticals.empty()) {
        if (!windowed.criticals.empty()) {
            throw Error("R_D undefined: plane sweep found no ranges but the windowed search did");
        }
        return 1.0;
    }
    auto a = windowed.criticals;
    auto b = plane.criticals;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Interval> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return static_cast<double>(common.size()) / static_cast<double>(b.size());
}

std::string_view to_string(Algo algo) noexcept
{
    switch (algo) {
    case Algo::ps:
        return "ps";
    case Algo::wpsr:
        return "wpsr";
    case Algo::mwpsr:
        return "mwpsr";
    }
    return "?";
}

Algo parse_algo(std::string_view name)
{
    for (auto algo : {Algo::ps, Algo::wpsr, Algo::mwpsr}) {
        if (name == to_string(algo)) {
            return algo;
        }
    }
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected ps, wpsr or mwpsr)");
}

SweepResult run_algorithm(Algo algo, const PositionalIndex& index, const Query& query)
{
    switch (algo) {
    case Algo::ps:
        return plane_sweep(index, query);
    case Algo::wpsr:
        return wpsr_sweep(index, query);
    case Algo::mwpsr:
        return mwpsr_search(index, query);
    }
    throw ConfigError("unknown algorithm");
}

}  // namespace prox
