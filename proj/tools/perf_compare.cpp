// Compares the OpenMP-parallel kernels against their serial reference
// implementations: same inputs, timed side by side, results checked for
// bit-identity.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circlepack/bench.hpp"
#include "circlepack/oracle.hpp"

namespace {

using namespace circlepack;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels fall back to serial\n");
#endif

    const PackingInstance inst = table9_instance();

    for (int resolution : {1001, 2001, 4001}) {
        auto t0 = std::chrono::steady_clock::now();
        const LocalOptimum serial = grid_search_serial(inst, resolution);
        const double t_serial = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const LocalOptimum parallel = grid_search(inst, resolution);
        const double t_parallel = seconds_since(t0);

        const bool same = serial.center.x == parallel.center.x &&
                          serial.center.y == parallel.center.y &&
                          serial.radius == parallel.radius;
        std::printf("grid_search res=%4d  serial %7.3fs  parallel %7.3fs  speedup %4.2fx  %s\n",
                    resolution, t_serial, t_parallel, t_serial / t_parallel,
                    same ? "identical" : "MISMATCH");
    }

    ExperimentSpec spec;
    spec.combos = {{200, 50}};
    spec.n_seeds = 40;
    spec.master_seed = 7;
    spec.algorithms = {Algorithm::Pso, Algorithm::Gwo, Algorithm::Ba};
    const Objective objective = make_packing_objective(inst);
    const double optimum = solve_oracle(inst, 501).best_radius;

    auto t0 = std::chrono::steady_clock::now();
    const ExperimentTable serial_table = run_experiment(spec, objective, optimum, false);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const ExperimentTable parallel_table = run_experiment(spec, objective, optimum, true);
    const double t_parallel = seconds_since(t0);

    const bool same_csv = results_to_csv(serial_table) == results_to_csv(parallel_table);
    std::printf("run_experiment 3 algos x 40 seeds  serial %7.3fs  parallel %7.3fs  "
                "speedup %4.2fx  %s\n",
                t_serial, t_parallel, t_serial / t_parallel,
                same_csv ? "identical" : "MISMATCH");
    return same_csv ? 0 : 1;
}
