#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "circlepack/geometry.hpp"

namespace circlepack {

// A box-bounded maximization problem. evaluate must be pure and
// deterministic; bounds are shared by every coordinate.
struct Objective {
    int dimension = 2;
    double lower_bound = -100.0;
    double upper_bound = 100.0;
    std::function<double(std::span<const double>)> evaluate;
};

inline Objective make_packing_objective(PackingInstance inst) {
    Objective obj;
    obj.dimension = 2;
    obj.lower_bound = inst.lb;
    obj.upper_bound = inst.ub;
    obj.evaluate = [inst = std::move(inst)](std::span<const double> x) {
        return packing_fitness({x[0], x[1]}, inst);
    };
    return obj;
}

// Affine ramp from start (t = 0) to end (t = T).
inline double linear_schedule(double start, double end, int t, int max_iterations) {
    return start + (end - start) * (static_cast<double>(t) / static_cast<double>(max_iterations));
}

inline void clamp_to_bounds(std::span<double> x, double lb, double ub) {
    for (double& xi : x) xi = std::clamp(xi, lb, ub);
}

// A position together with its fitness.
struct Solution {
    std::vector<double> position;
    double fitness = 0.0;
};

}  // namespace circlepack
