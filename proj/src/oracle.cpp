#include "circlepack/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace circlepack {

namespace {

double grid_coord(double lb, double step, int index) {
    return lb + step * static_cast<double>(index);
}

LocalOptimum best_in_row(const PackingInstance& inst, double y, double lb, double step,
                         int resolution) {
    LocalOptimum best{{0.0, 0.0}, -std::numeric_limits<double>::infinity()};
    for (int ix = 0; ix < resolution; ++ix) {
        const Point2 p{grid_coord(lb, step, ix), y};
        const double f = packing_fitness(p, inst);
        if (f > best.radius) best = {p, f};
    }
    return best;
}

void check_resolution(int resolution) {
    if (resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
}

}  // namespace

LocalOptimum grid_search_serial(const PackingInstance& inst, int resolution) {
    check_resolution(resolution);
    const double step = (inst.ub - inst.lb) / static_cast<double>(resolution - 1);
    LocalOptimum best{{0.0, 0.0}, -std::numeric_limits<double>::infinity()};
    for (int iy = 0; iy < resolution; ++iy) {
        const LocalOptimum row = best_in_row(inst, grid_coord(inst.lb, step, iy), inst.lb, step,
                                             resolution);
        if (row.radius > best.radius) best = row;
    }
    return best;
}

LocalOptimum grid_search(const PackingInstance& inst, int resolution) {
    check_resolution(resolution);
    const double step = (inst.ub - inst.lb) / static_cast<double>(resolution - 1);
    std::vector<LocalOptimum> rows(static_cast<std::size_t>(resolution));
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < resolution; ++iy)
        rows[static_cast<std::size_t>(iy)] =
            best_in_row(inst, grid_coord(inst.lb, step, iy), inst.lb, step, resolution);

    // Serial merge in row order keeps the result identical to the serial scan.
    LocalOptimum best{{0.0, 0.0}, -std::numeric_limits<double>::infinity()};
    for (const LocalOptimum& row : rows)
        if (row.radius > best.radius) best = row;
    return best;
}

namespace {

// 16 evenly spaced unit directions. A plain 4-point cross stalls on the
// ridges where two clearances tie: the ascent cone there can be as narrow
// as ~25 degrees, so the stencil needs <= 22.5 degree spacing to always
// catch it.
constexpr int kStencilDirections = 16;

}  // namespace

LocalOptimum refine_local(const PackingInstance& inst, Point2 start, double tol,
                          double initial_step) {
    if (!(tol > 0.0)) throw std::invalid_argument("refine_local: tol must be positive");
    if (!(initial_step > 0.0)) throw std::invalid_argument("refine_local: initial_step must be positive");

    std::array<Point2, kStencilDirections> directions;
    for (int k = 0; k < kStencilDirections; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / kStencilDirections;
        directions[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
    }

    Point2 x = start;
    double f = packing_fitness(x, inst);
    double h = initial_step;
    while (h >= tol) {
        Point2 best_point = x;
        double best_value = f;
        for (const Point2& dir : directions) {
            const Point2 s{x.x + h * dir.x, x.y + h * dir.y};
            const double fs = packing_fitness(s, inst);
            if (fs > best_value) {
                best_value = fs;
                best_point = s;
            }
        }
        if (best_value > f) {
            x = best_point;
            f = best_value;
        } else {
            h *= 0.5;
        }
    }
    return {x, f};
}

std::vector<LocalOptimum> enumerate_local_optima(const PackingInstance& inst, int resolution,
                                                 double merge_radius) {
    check_resolution(resolution);
    if (!(merge_radius > 0.0))
        throw std::invalid_argument("enumerate_local_optima: merge_radius must be positive");

    const double step = (inst.ub - inst.lb) / static_cast<double>(resolution - 1);
    const std::size_t n = static_cast<std::size_t>(resolution);
    std::vector<double> values(n * n);
#pragma omp parallel for schedule(static)
    for (int iy = 0; iy < resolution; ++iy) {
        const double y = grid_coord(inst.lb, step, iy);
        for (int ix = 0; ix < resolution; ++ix)
            values[static_cast<std::size_t>(iy) * n + static_cast<std::size_t>(ix)] =
                packing_fitness({grid_coord(inst.lb, step, ix), y}, inst);
    }

    // Seeds: cells at least as good as every existing 8-neighbor.
    std::vector<Point2> seeds;
    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const double v = values[static_cast<std::size_t>(iy) * n + static_cast<std::size_t>(ix)];
            bool dominates = true;
            for (int dy = -1; dy <= 1 && dominates; ++dy) {
                for (int dx = -1; dx <= 1 && dominates; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int jx = ix + dx;
                    const int jy = iy + dy;
                    if (jx < 0 || jx >= resolution || jy < 0 || jy >= resolution) continue;
                    if (values[static_cast<std::size_t>(jy) * n + static_cast<std::size_t>(jx)] > v)
                        dominates = false;
                }
            }
            if (dominates)
                seeds.push_back({grid_coord(inst.lb, step, ix), grid_coord(inst.lb, step, iy)});
        }
    }

    std::vector<LocalOptimum> refined(seeds.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < seeds.size(); ++i)
        refined[i] = refine_local(inst, seeds[i], 1e-7, step);

    std::sort(refined.begin(), refined.end(), [](const LocalOptimum& a, const LocalOptimum& b) {
        if (a.radius != b.radius) return a.radius > b.radius;
        if (a.center.x != b.center.x) return a.center.x < b.center.x;
        return a.center.y < b.center.y;
    });

    // Greedy clustering by descending radius keeps the best per cluster and
    // guarantees pairwise separation of at least merge_radius.
    std::vector<LocalOptimum> kept;
    for (const LocalOptimum& cand : refined) {
        bool absorbed = false;
        for (const LocalOptimum& rep : kept) {
            const double dx = cand.center.x - rep.center.x;
            const double dy = cand.center.y - rep.center.y;
            if (std::sqrt(dx * dx + dy * dy) < merge_radius) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) kept.push_back(cand);
    }
    return kept;
}

OracleResult solve_oracle(const PackingInstance& inst, int resolution, double tol,
                          double merge_radius) {
    const double step = (inst.ub - inst.lb) / static_cast<double>(resolution - 1);
    const LocalOptimum coarse = grid_search(inst, resolution);
    const LocalOptimum best = refine_local(inst, coarse.center, tol, step);
    OracleResult result;
    result.best_center = best.center;
    result.best_radius = best.radius;
    result.local_optima = enumerate_local_optima(inst, resolution, merge_radius);
    return result;
}

}  // namespace circlepack
