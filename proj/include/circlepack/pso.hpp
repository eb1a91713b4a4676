#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "circlepack/objective.hpp"
#include "circlepack/rng.hpp"

namespace circlepack {

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_fitness = 0.0;
};

// Inertia-weight PSO. The inertia ramps from w_max down to w_min over the
// run; velocities are capped at v_max_fraction of the box width per axis.
struct PsoParams {
    double w_max = 0.9;
    double w_min = 0.2;
    double c1 = 2.0;
    double c2 = 2.0;
    double v_max_fraction = 0.2;
};

// Constricted PSO has no inertia schedule; the whole velocity update is
// scaled by the constriction factor instead.
struct CpsoParams {
    double c1 = 2.05;
    double c2 = 2.05;
    double v_max_fraction = 0.2;
};

// chi = 2 / |2 - phi - sqrt(phi^2 - 4 phi)| with phi = c1 + c2, valid only
// for phi > 4. Throws std::domain_error otherwise.
inline double constriction_factor(double c1, double c2) {
    const double phi = c1 + c2;
    if (!(phi > 4.0)) throw std::domain_error("constriction_factor: c1 + c2 must exceed 4");
    return 2.0 / std::abs(2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
}

// One synchronous sweep over the swarm. Per particle and dimension two
// fresh uniforms are drawn (cognitive first, then social); the velocity is
// clamped to [-v_max, v_max], the moved position to [lb, ub]. Personal and
// global bests refresh immediately after each particle's evaluation.
template <UniformSource R, typename Eval>
void pso_step(std::vector<Particle>& swarm, Solution& global_best, double w, double v_max,
              double lb, double ub, const PsoParams& params, Eval&& eval, R& rng) {
    for (Particle& p : swarm) {
        const std::size_t dim = p.position.size();
        for (std::size_t d = 0; d < dim; ++d) {
            const double u1 = rng.next_double();
            const double u2 = rng.next_double();
            const double v = w * p.velocity[d]
                           + params.c1 * u1 * (p.best_position[d] - p.position[d])
                           + params.c2 * u2 * (global_best.position[d] - p.position[d]);
            p.velocity[d] = std::clamp(v, -v_max, v_max);
            p.position[d] = std::clamp(p.position[d] + p.velocity[d], lb, ub);
        }
        const double f = eval(p.position);
        if (f > p.best_fitness) {
            p.best_fitness = f;
            p.best_position = p.position;
            if (f > global_best.fitness) {
                global_best.fitness = f;
                global_best.position = p.position;
            }
        }
    }
}

// Constricted variant: v' = chi * (v + c1 u1 (pb - x) + c2 u2 (gb - x)),
// with chi held constant for the whole run. Same clamping as pso_step.
template <UniformSource R, typename Eval>
void cpso_step(std::vector<Particle>& swarm, Solution& global_best, double chi, double v_max,
               double lb, double ub, const CpsoParams& params, Eval&& eval, R& rng) {
    for (Particle& p : swarm) {
        const std::size_t dim = p.position.size();
        for (std::size_t d = 0; d < dim; ++d) {
            const double u1 = rng.next_double();
            const double u2 = rng.next_double();
            const double v = chi * (p.velocity[d]
                                    + params.c1 * u1 * (p.best_position[d] - p.position[d])
                                    + params.c2 * u2 * (global_best.position[d] - p.position[d]));
            p.velocity[d] = std::clamp(v, -v_max, v_max);
            p.position[d] = std::clamp(p.position[d] + p.velocity[d], lb, ub);
        }
        const double f = eval(p.position);
        if (f > p.best_fitness) {
            p.best_fitness = f;
            p.best_position = p.position;
            if (f > global_best.fitness) {
                global_best.fitness = f;
                global_best.position = p.position;
            }
        }
    }
}

// Velocity-free update: each coordinate is resampled from a normal
// distribution whose mean is the average of (current, personal best,
// global best) and whose sigma is their RMS spread. The normal deviate
// comes from Box-Muller on two fresh uniforms k1, k2, with k1 resampled
// while it is exactly 0.
template <UniformSource R, typename Eval>
void psod_step(std::vector<Particle>& swarm, Solution& global_best, double lb, double ub,
               Eval&& eval, R& rng) {
    for (Particle& p : swarm) {
        const std::size_t dim = p.position.size();
        for (std::size_t d = 0; d < dim; ++d) {
            double k1 = rng.next_double();
            while (k1 == 0.0) k1 = rng.next_double();
            const double k2 = rng.next_double();
            const double z = std::sqrt(-2.0 * std::log(k1)) * std::cos(2.0 * std::numbers::pi * k2);
            const double x = p.position[d];
            const double pb = p.best_position[d];
            const double gb = global_best.position[d];
            const double mu = (x + pb + gb) / 3.0;
            const double sigma = std::sqrt(((x - mu) * (x - mu) + (pb - mu) * (pb - mu)
                                            + (gb - mu) * (gb - mu)) / 3.0);
            p.position[d] = std::clamp(mu + sigma * z, lb, ub);
        }
        const double f = eval(p.position);
        if (f > p.best_fitness) {
            p.best_fitness = f;
            p.best_position = p.position;
            if (f > global_best.fitness) {
                global_best.fitness = f;
                global_best.position = p.position;
            }
        }
    }
}

}  // namespace circlepack
