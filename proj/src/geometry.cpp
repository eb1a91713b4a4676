#include "circlepack/geometry.hpp"

#include <stdexcept>

namespace circlepack {

PackingInstance table9_instance() {
    PackingInstance inst;
    inst.lb = -100.0;
    inst.ub = 100.0;
    inst.obstacles = {
        {{0.0, 0.0}, 15.0},    {{-50.0, 0.0}, 12.0},  {{-70.0, 30.0}, 15.0},
        {{40.0, -70.0}, 10.0}, {{20.0, 30.0}, 20.0},  {{60.0, 60.0}, 20.0},
        {{50.0, 0.0}, 15.0},   {{-70.0, -30.0}, 15.0}, {{-40.0, 70.0}, 20.0},
        {{-20.0, -30.0}, 5.0},
    };
    return inst;
}

bool verify_packing(const PackingInstance& inst, Point2 center, double radius, double tol) {
    if (radius < 0.0) throw std::invalid_argument("verify_packing: radius must be non-negative");
    const BoundClearances b = bound_clearances(center, inst.lb, inst.ub);
    if (radius > b.left + tol || radius > b.right + tol) return false;
    if (radius > b.bottom + tol || radius > b.top + tol) return false;
    for (const Circle& c : inst.obstacles)
        if (radius > circle_clearance(center, c) + tol) return false;
    return true;
}

}  // namespace circlepack
