#include "circlepack/run.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

#include "circlepack/gwo.hpp"
#include "circlepack/rng.hpp"

namespace circlepack {

const char* algorithm_name(Algorithm algo) {
    switch (algo) {
        case Algorithm::Pso: return "PSO";
        case Algorithm::PsoD: return "PSOd";
        case Algorithm::Cpso: return "CPSO";
        case Algorithm::Gwo: return "GWO";
        case Algorithm::RwGwo: return "RWGWO";
        case Algorithm::Fa: return "FA";
        case Algorithm::ApFa: return "ApFA";
        case Algorithm::Ba: return "BA";
    }
    throw std::invalid_argument("algorithm_name: unknown algorithm id");
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    for (Algorithm algo : kAllAlgorithms)
        if (name == algorithm_name(algo)) return algo;
    return std::nullopt;
}

bool deterministic_fields_equal(const RunResult& a, const RunResult& b) {
    return a.best_position == b.best_position && a.best_fitness == b.best_fitness &&
           a.trace == b.trace && a.evaluations == b.evaluations;
}

namespace {

void validate(const Objective& objective, const RunConfig& config) {
    if (!objective.evaluate)
        throw std::invalid_argument("run_optimizer: objective has no evaluate function");
    if (objective.dimension < 1)
        throw std::invalid_argument("run_optimizer: objective dimension must be >= 1");
    if (!(objective.upper_bound > objective.lower_bound))
        throw std::invalid_argument("run_optimizer: upper_bound must exceed lower_bound");
    if (config.max_iterations < 1)
        throw std::invalid_argument("run_optimizer: max_iterations must be >= 1");
    const int min_pop =
        (config.algorithm == Algorithm::Gwo || config.algorithm == Algorithm::RwGwo) ? 3 : 2;
    if (config.population < min_pop)
        throw std::invalid_argument("run_optimizer: population must be >= " +
                                    std::to_string(min_pop) + " for " +
                                    algorithm_name(config.algorithm));
}

}  // namespace

std::vector<std::vector<double>> initial_positions(int population, int dim, double lb, double ub,
                                                   RngStream& rng) {
    std::vector<std::vector<double>> positions(static_cast<std::size_t>(population));
    for (auto& pos : positions) {
        pos.resize(static_cast<std::size_t>(dim));
        for (double& x : pos) x = rng.uniform(lb, ub);
    }
    return positions;
}

RunResult run_optimizer(const Objective& objective, const RunConfig& config) {
    validate(objective, config);
    const auto t_start = std::chrono::steady_clock::now();

    const double lb = objective.lower_bound;
    const double ub = objective.upper_bound;
    const int dim = objective.dimension;
    const int pop = config.population;
    const int iters = config.max_iterations;

    RngStream rng(config.seed);
    std::int64_t evaluations = 0;
    auto eval = [&](std::span<const double> x) {
        ++evaluations;
        return objective.evaluate(x);
    };

    auto positions = initial_positions(pop, dim, lb, ub, rng);

    // Best-so-far, kept outside the population: ratcheted once per
    // iteration so the reported best never regresses even when the
    // population moves away.
    Solution best{{}, -std::numeric_limits<double>::infinity()};
    RunResult result;
    result.trace.reserve(static_cast<std::size_t>(iters));
    const auto ratchet = [&](const std::vector<double>& position, double fitness) {
        if (fitness > best.fitness) {
            best.fitness = fitness;
            best.position = position;
        }
    };
    const auto record = [&] { result.trace.push_back(best.fitness); };

    switch (config.algorithm) {
        case Algorithm::Pso:
        case Algorithm::PsoD:
        case Algorithm::Cpso: {
            std::vector<Particle> swarm(positions.size());
            Solution gbest{{}, -std::numeric_limits<double>::infinity()};
            for (std::size_t i = 0; i < positions.size(); ++i) {
                swarm[i].position = positions[i];
                swarm[i].velocity.assign(static_cast<std::size_t>(dim), 0.0);
                swarm[i].best_position = positions[i];
                swarm[i].best_fitness = eval(swarm[i].position);
                if (swarm[i].best_fitness > gbest.fitness) {
                    gbest.fitness = swarm[i].best_fitness;
                    gbest.position = swarm[i].best_position;
                }
            }
            ratchet(gbest.position, gbest.fitness);
            if (config.algorithm == Algorithm::Pso) {
                const double v_max = config.pso.v_max_fraction * (ub - lb);
                for (int t = 0; t < iters; ++t) {
                    const double w = linear_schedule(config.pso.w_max, config.pso.w_min, t, iters);
                    pso_step(swarm, gbest, w, v_max, lb, ub, config.pso, eval, rng);
                    ratchet(gbest.position, gbest.fitness);
                    record();
                }
            } else if (config.algorithm == Algorithm::Cpso) {
                const double chi = constriction_factor(config.cpso.c1, config.cpso.c2);
                const double v_max = config.cpso.v_max_fraction * (ub - lb);
                for (int t = 0; t < iters; ++t) {
                    cpso_step(swarm, gbest, chi, v_max, lb, ub, config.cpso, eval, rng);
                    ratchet(gbest.position, gbest.fitness);
                    record();
                }
            } else {
                for (int t = 0; t < iters; ++t) {
                    psod_step(swarm, gbest, lb, ub, eval, rng);
                    ratchet(gbest.position, gbest.fitness);
                    record();
                }
            }
            break;
        }

        case Algorithm::Gwo:
        case Algorithm::RwGwo: {
            std::vector<Wolf> pack(positions.size());
            GwoLeaders leaders;
            for (std::size_t i = 0; i < positions.size(); ++i) {
                pack[i].position = positions[i];
                pack[i].fitness = eval(pack[i].position);
                gwo_observe(leaders, pack[i].position, pack[i].fitness);
            }
            ratchet(leaders.alpha.position, leaders.alpha.fitness);
            for (int t = 0; t < iters; ++t) {
                if (config.algorithm == Algorithm::Gwo)
                    gwo_step(pack, leaders, t, iters, lb, ub, eval, rng);
                else
                    rwgwo_step(pack, leaders, t, iters, lb, ub, eval, rng);
                ratchet(leaders.alpha.position, leaders.alpha.fitness);
                record();
            }
            break;
        }

        case Algorithm::Fa:
        case Algorithm::ApFa: {
            const bool adaptive = config.algorithm == Algorithm::ApFa;
            FaParams params = adaptive ? config.apfa : config.fa;
            std::vector<Firefly> swarm(positions.size());
            for (std::size_t i = 0; i < positions.size(); ++i) {
                swarm[i].position = positions[i];
                swarm[i].intensity = eval(swarm[i].position);
                ratchet(swarm[i].position, swarm[i].intensity);
            }
            // Randomization is scaled to the box width; the raw [-0.5, 0.5]
            // perturbation is negligible on a domain this wide.
            const double noise_scale = ub - lb;
            double alpha = params.alpha0;
            for (int t = 0; t < iters; ++t) {
                if (adaptive) {
                    fa_sweep(swarm, params, alpha, noise_scale, lb, ub, eval, rng);
                    apfa_update_params(alpha, params.beta0, iters, rng);
                } else {
                    fa_step(swarm, params, alpha, noise_scale, lb, ub, eval, rng);
                }
                for (const Firefly& firefly : swarm) ratchet(firefly.position, firefly.intensity);
                record();
            }
            break;
        }

        case Algorithm::Ba: {
            std::vector<Bat> colony(positions.size());
            Solution gbest{{}, -std::numeric_limits<double>::infinity()};
            for (std::size_t i = 0; i < positions.size(); ++i) {
                colony[i].position = positions[i];
                colony[i].velocity.assign(static_cast<std::size_t>(dim), 0.0);
                colony[i].fitness = eval(colony[i].position);
                colony[i].loudness = config.bat.a0;
                colony[i].pulse_rate = 0.0;
                if (colony[i].fitness > gbest.fitness) {
                    gbest.fitness = colony[i].fitness;
                    gbest.position = colony[i].position;
                }
            }
            ratchet(gbest.position, gbest.fitness);
            for (int t = 0; t < iters; ++t) {
                bat_step(colony, gbest, t, config.bat, lb, ub, eval, rng);
                ratchet(gbest.position, gbest.fitness);
                record();
            }
            break;
        }

        default:
            throw std::invalid_argument("run_optimizer: unknown algorithm id");
    }

    result.best_position = best.position;
    result.best_fitness = best.fitness;
    result.evaluations = evaluations;
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

}  // namespace circlepack
