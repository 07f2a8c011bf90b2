#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pdiv/gen.hpp"
#include "pdiv/odd_path.hpp"

namespace pdiv::cli {

/// Exit codes of every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSolution = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

enum class BenchTask { diversion, oddpath };

struct BenchConfig {
    Family family = Family::grid;
    std::vector<std::size_t> sizes;
    std::size_t reps = 100;
    std::uint64_t seed = 1;
    std::vector<TrackerKind> trackers{TrackerKind::union_find};
    BenchTask task = BenchTask::diversion;
    WeightSpec weights;
    TerminalPolicy terminals = TerminalPolicy::uniform;
};

struct BenchRecord {
    Family family;
    std::size_t size;  // generator size parameter
    std::size_t n;
    std::size_t m;
    std::uint64_t seed;
    std::size_t repetition;
    TrackerKind tracker;
    std::string phase;  // total, dual or oddpath
    double millis;
};

struct BenchSummary {
    Family family;
    std::size_t size;
    std::size_t n;
    std::size_t m;
    TrackerKind tracker;
    std::size_t reps;
    double t25, t50, t75;
    double reference_ms;  // n log2(n) / 100
};

/// Repetition r uses seed + r. Only the solve call is timed; every optimal
/// diversion answer is validated inside the solver.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);
std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

}  // namespace pdiv::cli
