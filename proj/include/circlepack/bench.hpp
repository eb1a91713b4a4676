#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circlepack/run.hpp"

namespace circlepack {

struct ComboSpec {
    int max_iterations = 100;
    int population = 50;
};

// The experiment protocol: every algorithm runs once per seed per combo,
// and the seed list is shared by all algorithms and combos so that matched
// runs start from the same stream.
struct ExperimentSpec {
    std::vector<ComboSpec> combos = {{100, 50},  {500, 50},  {1000, 50},
                                     {100, 100}, {500, 100}, {1000, 100}};
    int n_seeds = 100;
    std::uint64_t master_seed = 0;
    std::vector<Algorithm> algorithms = {kAllAlgorithms, kAllAlgorithms + 8};
    double efficacy_tol = 1e-3;
};

struct StatsSummary {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;  // sample standard deviation (n - 1 denominator)
    int efficacy = 0;      // runs reaching optimum - tol
};

// n distinct seeds derived from master_seed via a splitmix64 stream.
std::vector<std::uint64_t> generate_seeds(std::uint64_t master_seed, int n);

// Order statistics over a batch of best values (maximization: best = max).
// Median is the midpoint of the two middle values for even sizes; std_dev
// is 0 for a single value. Throws std::invalid_argument on an empty batch
// or negative tol.
StatsSummary summarize(std::span<const double> values, double optimum, double tol);

struct CellResult {
    Algorithm algorithm = Algorithm::Pso;
    ComboSpec combo;
    StatsSummary stats;
    std::vector<double> best_values;  // per-seed bests, in seed order
};

struct ExperimentTable {
    std::vector<CellResult> cells;  // combo-major, algorithms in spec order
    std::vector<std::uint64_t> seeds;
    double optimum = 0.0;
    double efficacy_tol = 1e-3;
};

// Runs the full matrix. Per-seed runs are independent and execute in
// parallel when requested; aggregation is a serial reduction in seed
// order, so the table is bit-identical regardless of scheduling.
ExperimentTable run_experiment(const ExperimentSpec& spec, const Objective& objective,
                               double optimum, bool parallel = true);

// CSV with header algorithm,iterations,particles,best,worst,mean,median,
// std,efficacy; one row per cell, '.' decimal separator, 6 significant
// digits.
std::string results_to_csv(const ExperimentTable& table);

struct ComboRanking {
    ComboSpec combo;
    Algorithm best = Algorithm::Pso;
    Algorithm second = Algorithm::Pso;
    Algorithm worst = Algorithm::Pso;
};

// Per combo: order by mean descending, ties by std ascending then name;
// report the top two and the bottom one.
std::vector<ComboRanking> rank_algorithms(const ExperimentTable& table);

// Locale-independent shortest round-trip formatting at 6 significant
// digits (the CSV contract).
std::string format_sig6(double value);

}  // namespace circlepack
