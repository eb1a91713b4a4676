#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "circlepack/oracle.hpp"
#include "circlepack/rng.hpp"
#include "circlepack/run.hpp"

using namespace circlepack;

TEST_CASE("grid search on the empty box") {
    PackingInstance empty;
    const LocalOptimum best = grid_search(empty, 201);  // odd: includes the center
    CHECK(best.center.x == 0.0);
    CHECK(best.center.y == 0.0);
    CHECK(best.radius == 100.0);
}

TEST_CASE("resolution 2 scans only the corners") {
    PackingInstance empty;
    const LocalOptimum best = grid_search(empty, 2);
    CHECK(best.radius == 0.0);
    CHECK(best.center.x == -100.0);
    CHECK(best.center.y == -100.0);
}

TEST_CASE("invalid arguments are rejected") {
    const PackingInstance inst = table9_instance();
    CHECK_THROWS_AS(grid_search(inst, 1), std::invalid_argument);
    CHECK_THROWS_AS(refine_local(inst, {0.0, 0.0}, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(refine_local(inst, {0.0, 0.0}, 1e-7, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_local_optima(inst, 10, 0.0), std::invalid_argument);
}

TEST_CASE("grid refinement never lowers the best value") {
    const PackingInstance inst = table9_instance();
    const double v1 = grid_search(inst, 201).radius;
    const double v2 = grid_search(inst, 401).radius;
    const double v3 = grid_search(inst, 801).radius;
    CHECK(v2 >= v1);
    CHECK(v3 >= v2);
}

TEST_CASE("parallel grid search matches the serial reference bit for bit") {
    const PackingInstance inst = table9_instance();
    for (int resolution : {2, 33, 301, 502}) {
        const LocalOptimum serial = grid_search_serial(inst, resolution);
        const LocalOptimum parallel = grid_search(inst, resolution);
        CHECK(serial.center.x == parallel.center.x);
        CHECK(serial.center.y == parallel.center.y);
        CHECK(serial.radius == parallel.radius);
    }
}

TEST_CASE("refinement is monotone and certifies") {
    const PackingInstance inst = table9_instance();
    RngStream rng(55);
    for (int i = 0; i < 50; ++i) {
        const Point2 start{rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
        const double f0 = packing_fitness(start, inst);
        const LocalOptimum refined = refine_local(inst, start, 1e-7, 1.0);
        CHECK(refined.radius >= f0);
        if (refined.radius >= 0.0)
            CHECK(verify_packing(inst, refined.center, refined.radius, 1e-9));
    }
}

TEST_CASE("refinement from an exact peak returns it") {
    PackingInstance empty;
    const LocalOptimum refined = refine_local(empty, {0.0, 0.0}, 1e-7, 1.0);
    CHECK(refined.radius == 100.0);
    CHECK(refined.center.x == 0.0);
    CHECK(refined.center.y == 0.0);
}

TEST_CASE("local optima of the empty box collapse to the center") {
    PackingInstance empty;
    const auto optima = enumerate_local_optima(empty, 101, 1.0);
    REQUIRE(optima.size() == 1);
    CHECK(optima[0].radius == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(std::abs(optima[0].center.x) < 1e-6);
    CHECK(std::abs(optima[0].center.y) < 1e-6);
}

TEST_CASE("benchmark instance has the two known top basins") {
    const PackingInstance inst = table9_instance();
    const auto optima = enumerate_local_optima(inst, 401, 1.0);
    REQUIRE(optima.size() >= 2);
    // Sorted by radius descending; the two best basins are known exactly.
    CHECK(optima[0].radius == doctest::Approx(34.239278439205385).epsilon(1e-7));
    CHECK(optima[1].radius == doctest::Approx(34.205583952533431).epsilon(1e-7));
    // Pairwise separation respects the merge radius.
    for (std::size_t i = 0; i < optima.size(); ++i)
        for (std::size_t j = i + 1; j < optima.size(); ++j) {
            const double dx = optima[i].center.x - optima[j].center.x;
            const double dy = optima[i].center.y - optima[j].center.y;
            CHECK(std::sqrt(dx * dx + dy * dy) >= 1.0);
        }
}

TEST_CASE("a merge radius beyond the diagonal keeps a single entry") {
    const PackingInstance inst = table9_instance();
    const auto optima = enumerate_local_optima(inst, 101, 300.0);
    CHECK(optima.size() == 1);
}

TEST_CASE("oracle dominates metaheuristic runs") {
    const PackingInstance inst = table9_instance();
    const Objective obj = make_packing_objective(inst);
    const OracleResult oracle = solve_oracle(inst, 501);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        RunConfig config;
        config.algorithm = Algorithm::Pso;
        config.population = 30;
        config.max_iterations = 50;
        config.seed = seed;
        const RunResult run = run_optimizer(obj, config);
        CHECK(run.best_fitness <= oracle.best_radius + 1e-6);
    }
}

TEST_CASE("oracle certificate passes at tight tolerance") {
    const PackingInstance inst = table9_instance();
    const OracleResult oracle = solve_oracle(inst, 501);
    CHECK(verify_packing(inst, oracle.best_center, oracle.best_radius, 1e-9));
}
