#ifndef TCA_BENCH_HPP
#define TCA_BENCH_HPP

#include <cstdint>
#include <vector>

namespace tca {

enum class BenchFamily { random_table, cerny_cycle };

struct BenchPoint {
    int n = 0;
    double millis = 0.0;  // best of reps
};

struct BenchResult {
    std::vector<BenchPoint> points;
    double loglog_slope = 0.0;  // least-squares slope of log(time) vs log(n)
};

// Times the full decision procedure (classification, pair-graph
// construction, reverse BFS) per size; generation is excluded from the
// measurement.
BenchResult bench_decision(const std::vector<int>& sizes, int letters, std::uint64_t seed,
                           int reps, BenchFamily family = BenchFamily::random_table);

}  // namespace tca

#endif
