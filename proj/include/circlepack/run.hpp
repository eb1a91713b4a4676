#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "circlepack/bat.hpp"
#include "circlepack/firefly.hpp"
#include "circlepack/objective.hpp"
#include "circlepack/pso.hpp"

namespace circlepack {

enum class Algorithm { Pso, PsoD, Cpso, Gwo, RwGwo, Fa, ApFa, Ba };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::Pso, Algorithm::PsoD, Algorithm::Cpso, Algorithm::Gwo,
    Algorithm::RwGwo, Algorithm::Fa, Algorithm::ApFa, Algorithm::Ba,
};

const char* algorithm_name(Algorithm algo);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// One seeded optimization run. Per-algorithm parameter records carry the
// standard defaults; only the record matching `algorithm` is consulted.
struct RunConfig {
    Algorithm algorithm = Algorithm::Pso;
    int population = 50;
    int max_iterations = 100;
    std::uint64_t seed = 0;
    PsoParams pso{};
    CpsoParams cpso{};
    FaParams fa{};
    FaParams apfa = apfa_initial_params();
    BatParams bat{};
};

struct RunResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<double> trace;  // best-so-far after each iteration; non-decreasing
    std::int64_t evaluations = 0;
    double wall_time = 0.0;     // seconds; informational, not deterministic
};

// Equality over the reproducible payload (wall_time excluded).
bool deterministic_fields_equal(const RunResult& a, const RunResult& b);

// Uniform initial positions over [lb, ub]^dim with the fixed draw order
// agent 0 dim 0, agent 0 dim 1, agent 1 dim 0, ...
std::vector<std::vector<double>> initial_positions(int population, int dimension, double lb,
                                                   double ub, RngStream& rng);

// Runs config.max_iterations steps of the selected algorithm on the
// objective. The population is initialized uniformly over the box from the
// run's own seeded stream (agent-major draw order) and the best evaluated
// point is tracked elitistically across all evaluations. Deterministic:
// identical (objective, config) gives identical results.
// Throws std::invalid_argument on bad configs (population < 2, < 3 for the
// wolf algorithms, max_iterations < 1, dimension < 1, empty objective).
RunResult run_optimizer(const Objective& objective, const RunConfig& config);

}  // namespace circlepack
