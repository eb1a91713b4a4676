#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "circlepack/objective.hpp"
#include "circlepack/rng.hpp"

namespace circlepack {

struct Firefly {
    std::vector<double> position;
    double intensity = 0.0;  // objective fitness; brighter = better
};

struct FaParams {
    double alpha0 = 1.0;    // initial randomization weight
    double beta0 = 1.0;     // attractiveness at distance 0
    double gamma = 0.1;     // light absorption
    double betamin = 0.1;   // attractiveness floor at large distance
    double theta = 0.97;    // per-sweep alpha decay
};

// The adaptive variant starts with a smaller randomization weight and
// manages alpha/beta0 differently; the movement rule is shared.
inline FaParams apfa_initial_params() {
    FaParams p;
    p.alpha0 = 0.5;
    return p;
}

inline double firefly_distance(std::span<const double> xi, std::span<const double> xj) {
    double sq = 0.0;
    for (std::size_t d = 0; d < xi.size(); ++d) {
        const double diff = xi[d] - xj[d];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

// betamin + (beta0 - betamin) e^{-gamma r^2}: beta0 at contact, decaying to
// the betamin floor with squared distance.
inline double attractiveness(const FaParams& params, double r) {
    return params.betamin + (params.beta0 - params.betamin) * std::exp(-params.gamma * r * r);
}

// Move firefly i toward a brighter j: attraction plus a fresh uniform
// perturbation in [-0.5, 0.5] per dimension, weighted by alpha and
// noise_scale. The result is clamped to the box.
template <UniformSource R>
void fa_move(std::vector<double>& xi, std::span<const double> xj, const FaParams& params,
             double alpha, double noise_scale, double lb, double ub, R& rng) {
    const double beta = attractiveness(params, firefly_distance(xi, xj));
    for (std::size_t d = 0; d < xi.size(); ++d) {
        const double eps = rng.next_double() - 0.5;
        xi[d] = std::clamp(xi[d] + beta * (xj[d] - xi[d]) + alpha * eps * noise_scale, lb, ub);
    }
}

// Full pairwise sweep with immediate refresh: whenever j is strictly
// brighter than i at the moment of comparison, i moves and is re-evaluated
// before the sweep continues.
template <UniformSource R, typename Eval>
void fa_sweep(std::vector<Firefly>& swarm, const FaParams& params, double alpha,
              double noise_scale, double lb, double ub, Eval&& eval, R& rng) {
    for (Firefly& fi : swarm) {
        for (const Firefly& fj : swarm) {
            if (fj.intensity > fi.intensity) {
                fa_move(fi.position, fj.position, params, alpha, noise_scale, lb, ub, rng);
                fi.intensity = eval(fi.position);
            }
        }
    }
}

// One firefly iteration: the sweep, then geometric alpha decay.
template <UniformSource R, typename Eval>
void fa_step(std::vector<Firefly>& swarm, const FaParams& params, double& alpha,
             double noise_scale, double lb, double ub, Eval&& eval, R& rng) {
    fa_sweep(swarm, params, alpha, noise_scale, lb, ub, eval, rng);
    alpha *= params.theta;
}

// Adaptive parameter update: alpha decays by (1 - 1/g_max) each call;
// beta0 is redrawn uniformly when a second fresh uniform falls below 0.5,
// otherwise kept. Both uniforms are always consumed (rand1 first).
template <UniformSource R>
void apfa_update_params(double& alpha, double& beta0, int g_max, R& rng) {
    alpha *= 1.0 - 1.0 / static_cast<double>(g_max);
    const double rand1 = rng.next_double();
    const double rand2 = rng.next_double();
    if (rand2 < 0.5) beta0 = rand1;
}

}  // namespace circlepack
