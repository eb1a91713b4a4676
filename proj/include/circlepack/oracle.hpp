#pragma once

#include <vector>

#include "circlepack/geometry.hpp"

namespace circlepack {

struct LocalOptimum {
    Point2 center;
    double radius = 0.0;
};

// Exhaustive scan of packing_fitness on a resolution x resolution grid over
// the box (endpoints included). Returns the first argmax in row-major
// (y outer, x inner) scan order. grid_search parallelizes over rows when
// OpenMP is enabled and is bit-identical to grid_search_serial.
LocalOptimum grid_search(const PackingInstance& inst, int resolution);
LocalOptimum grid_search_serial(const PackingInstance& inst, int resolution);

// Derivative-free compass refinement: repeatedly move to the best strictly
// improving point of the cross stencil {x +- h, y +- h}, halving h whenever
// no move improves, until h < tol. The returned value never falls below the
// start's fitness.
LocalOptimum refine_local(const PackingInstance& inst, Point2 start, double tol,
                          double initial_step);

// Every grid cell that weakly dominates its 8-neighborhood is refined; the
// refined points are then clustered so that kept centers are pairwise at
// least merge_radius apart, best radius per cluster, sorted by radius
// descending.
std::vector<LocalOptimum> enumerate_local_optima(const PackingInstance& inst, int resolution,
                                                 double merge_radius);

struct OracleResult {
    Point2 best_center;
    double best_radius = 0.0;
    std::vector<LocalOptimum> local_optima;
};

// Full certification pipeline: grid scan, local refinement of the argmax,
// and enumeration of distinct local optima.
OracleResult solve_oracle(const PackingInstance& inst, int resolution = 2001, double tol = 1e-7,
                          double merge_radius = 1.0);

}  // namespace circlepack
