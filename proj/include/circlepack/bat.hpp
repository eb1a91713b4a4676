#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "circlepack/objective.hpp"
#include "circlepack/rng.hpp"

namespace circlepack {

struct Bat {
    std::vector<double> position;
    std::vector<double> velocity;
    double fitness = 0.0;
    double frequency = 0.0;
    double loudness = 1.0;
    double pulse_rate = 0.0;
};

struct BatParams {
    double a0 = 1.0;       // initial loudness
    double r0 = 1.0;       // pulse-rate ceiling
    double alpha = 0.97;   // loudness decay per acceptance
    double gamma = 0.1;    // pulse-rate growth rate
    double f_min = 0.0;
    double f_max = 2.0;
};

// Fresh frequency in [f_min, f_max], linear in one uniform draw.
template <UniformSource R>
double bat_frequency(const BatParams& params, R& rng) {
    return params.f_min + (params.f_max - params.f_min) * rng.next_double();
}

// Post-acceptance echolocation update: loudness shrinks geometrically,
// pulse rate climbs toward r_base as 1 - e^{-gamma t}.
inline std::pair<double, double> loudness_pulse_update(double loudness, double r_base,
                                                       const BatParams& params, int t) {
    return {params.alpha * loudness,
            r_base * (1.0 - std::exp(-params.gamma * static_cast<double>(t)))};
}

// One colony sweep. Each bat draws a frequency and proposes a flight
// (velocity integrated toward/away from the global best); with probability
// 1 - pulse_rate the proposal is replaced by a local sample around the
// global best with radius set by the colony's mean loudness at entry.
// Every evaluated candidate can refresh the global best, but a bat commits
// the proposal (position and flight velocity) only when a loudness coin
// passes AND the candidate strictly improves that bat's own fitness; on
// acceptance its loudness and pulse rate update.
template <UniformSource R, typename Eval>
void bat_step(std::vector<Bat>& colony, Solution& global_best, int t, const BatParams& params,
              double lb, double ub, Eval&& eval, R& rng) {
    double mean_loudness = 0.0;
    for (const Bat& b : colony) mean_loudness += b.loudness;
    mean_loudness /= static_cast<double>(colony.size());

    std::vector<double> candidate_velocity;
    std::vector<double> candidate_position;
    for (Bat& bat : colony) {
        const std::size_t dim = bat.position.size();
        bat.frequency = bat_frequency(params, rng);

        candidate_velocity.assign(bat.velocity.begin(), bat.velocity.end());
        candidate_position.assign(bat.position.begin(), bat.position.end());
        for (std::size_t d = 0; d < dim; ++d) {
            candidate_velocity[d] += (bat.position[d] - global_best.position[d]) * bat.frequency;
            candidate_position[d] += candidate_velocity[d];
        }

        if (rng.next_double() > bat.pulse_rate) {
            for (std::size_t d = 0; d < dim; ++d) {
                const double eps = 2.0 * rng.next_double() - 1.0;
                candidate_position[d] = global_best.position[d] + eps * mean_loudness;
            }
        }
        clamp_to_bounds(candidate_position, lb, ub);

        const double f = eval(candidate_position);
        if (f > global_best.fitness) {
            global_best.fitness = f;
            global_best.position = candidate_position;
        }

        const double coin = rng.next_double();
        if (coin < bat.loudness && f > bat.fitness) {
            bat.position = candidate_position;
            bat.velocity = candidate_velocity;
            bat.fitness = f;
            std::tie(bat.loudness, bat.pulse_rate) =
                loudness_pulse_update(bat.loudness, params.r0, params, t);
        }
    }
}

}  // namespace circlepack
