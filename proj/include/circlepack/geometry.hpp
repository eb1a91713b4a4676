#pragma once

#include <cmath>
#include <vector>

namespace circlepack {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Circle {
    Point2 center;
    double radius = 0.0;
};

// A square search box [lb, ub]^2 with fixed obstacle circles inside it.
// Obstacles may be anywhere (nothing requires them to lie in the box) and
// may overlap each other; the fitness formula needs no such assumptions.
struct PackingInstance {
    double lb = -100.0;
    double ub = 100.0;
    std::vector<Circle> obstacles;
};

// Signed distance from a point to the rim of a circle: Euclidean distance
// to the center minus the radius. Negative iff the point is strictly inside.
inline double circle_clearance(Point2 p, const Circle& c) {
    const double dx = p.x - c.center.x;
    const double dy = p.y - c.center.y;
    return std::sqrt(dx * dx + dy * dy) - c.radius;
}

// Signed distances from a point to the four box sides, in the fixed order
// (left, right, bottom, top) = (x - lb, ub - x, y - lb, ub - y).
struct BoundClearances {
    double left;
    double right;
    double bottom;
    double top;
};

inline BoundClearances bound_clearances(Point2 p, double lb, double ub) {
    return {p.x - lb, ub - p.x, p.y - lb, ub - p.y};
}

// Largest radius of a circle centered at p that avoids every obstacle and
// stays inside the box: the minimum over all clearances. Negative values
// (p inside an obstacle, or outside the box) are valid fitnesses.
inline double packing_fitness(Point2 p, const PackingInstance& inst) {
    const BoundClearances b = bound_clearances(p, inst.lb, inst.ub);
    double m = std::min(std::min(b.left, b.right), std::min(b.bottom, b.top));
    for (const Circle& c : inst.obstacles) m = std::min(m, circle_clearance(p, c));
    return m;
}

// The ten-obstacle benchmark instance on [-100, 100]^2.
PackingInstance table9_instance();

// Geometric certificate: true iff a circle (center, radius) fits, i.e.
// radius <= every obstacle clearance + tol and <= every bound clearance + tol.
// Throws std::invalid_argument for a negative radius.
bool verify_packing(const PackingInstance& inst, Point2 center, double radius, double tol);

}  // namespace circlepack
