#include "tca/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tca/families.hpp"
#include "tca/pairgraph.hpp"

namespace tca {

namespace {

double time_decision_ms(const Automaton& a) {
    auto start = std::chrono::steady_clock::now();
    Decision d = decide_totally_compatible(a);
    auto stop = std::chrono::steady_clock::now();
    volatile bool sink = d.totally_compatible;  // the verdict must stay observable
    (void)sink;
    double ns = std::chrono::duration<double, std::nano>(stop - start).count();
    return std::max(ns, 1.0) / 1e6;
}

}  // namespace

BenchResult bench_decision(const std::vector<int>& sizes, int letters, std::uint64_t seed,
                           int reps, BenchFamily family) {
    if (sizes.empty()) throw std::invalid_argument("bench needs at least one size");
    if (reps < 1) throw std::invalid_argument("bench needs reps >= 1");

    BenchResult result;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        int n = sizes[i];
        Automaton a = family == BenchFamily::cerny_cycle
                          ? cerny(n)
                          : random_automaton(n, letters, seed + i);
        double best = time_decision_ms(a);
        for (int r = 1; r < reps; ++r) best = std::min(best, time_decision_ms(a));
        result.points.push_back({n, best});
    }

    // Least-squares slope of log(time) against log(n).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(result.points.size());
    for (const auto& pt : result.points) {
        double x = std::log(static_cast<double>(pt.n));
        double y = std::log(pt.millis);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = m * sxx - sx * sx;
    result.loglog_slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
    return result;
}

}  // namespace tca
