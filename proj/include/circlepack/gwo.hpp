#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "circlepack/objective.hpp"
#include "circlepack/rng.hpp"

namespace circlepack {

struct Wolf {
    std::vector<double> position;
    double fitness = 0.0;
};

// The three best solutions seen so far, kept outside the pack and never
// reset: alpha >= beta >= delta by fitness. Anchoring the hunt on the
// best-ever triple (rather than the current top wolves) is what lets the
// pack keep a good basin while members scatter during exploration.
struct GwoLeaders {
    Solution alpha{{}, -std::numeric_limits<double>::infinity()};
    Solution beta{{}, -std::numeric_limits<double>::infinity()};
    Solution delta{{}, -std::numeric_limits<double>::infinity()};
};

// Cascade update: a new evaluation displaces at most one slot, shifting
// the others down. Ties keep the earlier holder.
inline void gwo_observe(GwoLeaders& leaders, const std::vector<double>& position,
                        double fitness) {
    if (fitness > leaders.alpha.fitness) {
        leaders.delta = std::move(leaders.beta);
        leaders.beta = std::move(leaders.alpha);
        leaders.alpha = {position, fitness};
    } else if (fitness > leaders.beta.fitness) {
        leaders.delta = std::move(leaders.beta);
        leaders.beta = {position, fitness};
    } else if (fitness > leaders.delta.fitness) {
        leaders.delta = {position, fitness};
    }
}

// Encircling coefficients mu = 2 b r1 - b and c = 2 r2, drawn fresh per
// dimension (r1 before r2). b is the caller's contraction scale in [0, 2].
struct GwoCoefficients {
    std::vector<double> mu;
    std::vector<double> c;
    double b = 0.0;
};

template <UniformSource R>
GwoCoefficients gwo_coefficients(double b, std::size_t dim, R& rng) {
    GwoCoefficients k{std::vector<double>(dim), std::vector<double>(dim), b};
    for (std::size_t d = 0; d < dim; ++d) {
        k.mu[d] = 2.0 * b * rng.next_double() - b;
        k.c[d] = 2.0 * rng.next_double();
    }
    return k;
}

namespace detail {

// Leader-guided candidate: X' = X_leader - mu o |c o X_leader - x|, taken
// componentwise, accumulated into sum.
template <UniformSource R>
void accumulate_leader_candidate(std::span<const double> leader, std::span<const double> x,
                                 double b, std::vector<double>& sum, R& rng) {
    const GwoCoefficients k = gwo_coefficients(b, x.size(), rng);
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double dist = std::abs(k.c[d] * leader[d] - x[d]);
        sum[d] += leader[d] - k.mu[d] * dist;
    }
}

template <UniformSource R, typename Eval>
void follow_leaders(std::vector<Wolf>& pack, GwoLeaders& leaders, double b, double lb, double ub,
                    Eval&& eval, R& rng) {
    const std::array<const std::vector<double>*, 3> guide{
        &leaders.alpha.position, &leaders.beta.position, &leaders.delta.position};
    std::vector<double> snapshot[3] = {*guide[0], *guide[1], *guide[2]};

    std::vector<double> sum(pack[0].position.size());
    for (Wolf& wolf : pack) {
        std::fill(sum.begin(), sum.end(), 0.0);
        for (const auto& leader : snapshot)
            accumulate_leader_candidate(leader, wolf.position, b, sum, rng);
        for (std::size_t d = 0; d < sum.size(); ++d)
            wolf.position[d] = std::clamp(sum[d] / 3.0, lb, ub);
        wolf.fitness = eval(wolf.position);
        gwo_observe(leaders, wolf.position, wolf.fitness);
    }
}

}  // namespace detail

// One pack update: every wolf moves to the mean of three leader-guided
// candidates (fresh coefficients per leader, drawn in alpha, beta, delta
// order), positions clamped, fitness refreshed, leaders cascaded. The
// leader positions used for guidance are the ones held at entry.
template <UniformSource R, typename Eval>
void gwo_step(std::vector<Wolf>& pack, GwoLeaders& leaders, int t, int max_iterations, double lb,
              double ub, Eval&& eval, R& rng) {
    if (pack.size() < 3) throw std::invalid_argument("gwo_step: pack needs at least 3 wolves");
    const double b = linear_schedule(2.0, 0.0, t, max_iterations);
    detail::follow_leaders(pack, leaders, b, lb, ub, eval, rng);
}

// Cumulative random walk: x0 plus n_steps Cauchy steps, each scaled by
// `scale`, taken per dimension.
template <UniformSource R>
std::vector<double> random_walk(std::span<const double> x0, int n_steps, double scale, R& rng) {
    std::vector<double> x(x0.begin(), x0.end());
    for (int s = 0; s < n_steps; ++s)
        for (double& xi : x) xi += scale * standard_cauchy(rng);
    return x;
}

// Random-walk variant: each leader proposes a single Cauchy step (scale
// ramping 2 -> 0 over the run), kept only if it improves that leader; the
// pack then follows the walked leaders with the usual rule.
template <UniformSource R, typename Eval>
void rwgwo_step(std::vector<Wolf>& pack, GwoLeaders& leaders, int t, int max_iterations,
                double lb, double ub, Eval&& eval, R& rng) {
    if (pack.size() < 3) throw std::invalid_argument("rwgwo_step: pack needs at least 3 wolves");
    const double b = linear_schedule(2.0, 0.0, t, max_iterations);

    for (Solution* leader : {&leaders.alpha, &leaders.beta, &leaders.delta}) {
        std::vector<double> proposal = random_walk(leader->position, 1, b, rng);
        clamp_to_bounds(proposal, lb, ub);
        const double f = eval(proposal);
        if (f > leader->fitness) {
            leader->position = std::move(proposal);
            leader->fitness = f;
        }
    }
    // A walked beta/delta may now outrank its senior; restore the order.
    if (leaders.beta.fitness > leaders.alpha.fitness) std::swap(leaders.alpha, leaders.beta);
    if (leaders.delta.fitness > leaders.beta.fitness) std::swap(leaders.beta, leaders.delta);
    if (leaders.beta.fitness > leaders.alpha.fitness) std::swap(leaders.alpha, leaders.beta);

    detail::follow_leaders(pack, leaders, b, lb, ub, eval, rng);
}

}  // namespace circlepack
