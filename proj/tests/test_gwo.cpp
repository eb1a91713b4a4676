#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "circlepack/gwo.hpp"
#include "circlepack/rng.hpp"
#include "circlepack/run.hpp"
#include "scripted_rng.hpp"

using namespace circlepack;
using circlepack::testing::ConstRng;

namespace {

std::vector<Wolf> make_pack(std::vector<std::vector<double>> positions, const Objective& obj) {
    std::vector<Wolf> pack;
    for (auto& pos : positions) {
        Wolf w;
        w.fitness = obj.evaluate(pos);
        w.position = std::move(pos);
        pack.push_back(std::move(w));
    }
    return pack;
}

GwoLeaders leaders_of(const std::vector<Wolf>& pack) {
    GwoLeaders leaders;
    for (const Wolf& w : pack) gwo_observe(leaders, w.position, w.fitness);
    return leaders;
}

}  // namespace

TEST_CASE("coefficients") {
    SUBCASE("b = 0 kills mu") {
        RngStream rng(1);
        const GwoCoefficients k = gwo_coefficients(0.0, 4, rng);
        for (double m : k.mu) CHECK(m == 0.0);
    }
    SUBCASE("r1 = 0.5 kills mu at any b") {
        ConstRng rng{0.5};
        const GwoCoefficients k = gwo_coefficients(1.7, 3, rng);
        for (double m : k.mu) CHECK(m == 0.0);
    }
    SUBCASE("r2 = 1 maxes c") {
        ConstRng rng{1.0};
        const GwoCoefficients k = gwo_coefficients(1.0, 3, rng);
        for (double c : k.c) CHECK(c == 2.0);
    }
    SUBCASE("ranges hold over random draws") {
        RngStream rng(2);
        for (int i = 0; i < 1000; ++i) {
            const double b = 2.0 * (i % 11) / 10.0;
            const GwoCoefficients k = gwo_coefficients(b, 2, rng);
            for (double m : k.mu) {
                CHECK(m >= -b);
                CHECK(m <= b);
            }
            for (double c : k.c) {
                CHECK(c >= 0.0);
                CHECK(c <= 2.0);
            }
        }
    }
}

TEST_CASE("leader cascade tracks the best three ever seen") {
    GwoLeaders leaders;
    gwo_observe(leaders, {1.0}, 10.0);
    gwo_observe(leaders, {2.0}, 20.0);
    gwo_observe(leaders, {3.0}, 5.0);
    CHECK(leaders.alpha.fitness == 20.0);
    CHECK(leaders.beta.fitness == 10.0);
    CHECK(leaders.delta.fitness == 5.0);

    gwo_observe(leaders, {4.0}, 15.0);
    CHECK(leaders.alpha.fitness == 20.0);
    CHECK(leaders.beta.fitness == 15.0);
    CHECK(leaders.delta.fitness == 10.0);

    // Worse observations change nothing.
    gwo_observe(leaders, {5.0}, 1.0);
    CHECK(leaders.delta.fitness == 10.0);

    // Ties keep the earlier holder.
    gwo_observe(leaders, {6.0}, 20.0);
    CHECK(leaders.alpha.position == std::vector<double>{2.0});
}

TEST_CASE("identical pack with r1 = 0.5 is a fixed point") {
    const Objective obj = make_packing_objective(table9_instance());
    auto pack = make_pack({{10.0, -20.0}, {10.0, -20.0}, {10.0, -20.0}}, obj);
    GwoLeaders leaders = leaders_of(pack);
    ConstRng rng{0.5};
    gwo_step(pack, leaders, 10, 100, -100.0, 100.0, obj.evaluate, rng);
    for (const Wolf& w : pack) CHECK(w.position == std::vector<double>{10.0, -20.0});
}

TEST_CASE("r1 = 0.5 maps every wolf to the leaders' mean") {
    const Objective obj = make_packing_objective(table9_instance());
    auto pack = make_pack({{-80.0, -80.0}, {-85.0, -85.0}, {-90.0, -80.0}, {40.0, 10.0}}, obj);
    GwoLeaders leaders = leaders_of(pack);
    const double mean_x =
        (leaders.alpha.position[0] + leaders.beta.position[0] + leaders.delta.position[0]) / 3.0;
    const double mean_y =
        (leaders.alpha.position[1] + leaders.beta.position[1] + leaders.delta.position[1]) / 3.0;
    ConstRng rng{0.5};
    gwo_step(pack, leaders, 0, 100, -100.0, 100.0, obj.evaluate, rng);
    for (const Wolf& w : pack) {
        CHECK(w.position[0] == doctest::Approx(mean_x).epsilon(1e-15));
        CHECK(w.position[1] == doctest::Approx(mean_y).epsilon(1e-15));
    }
}

TEST_CASE("schedule endpoints for the contraction scale") {
    CHECK(linear_schedule(2.0, 0.0, 0, 500) == 2.0);
    CHECK(linear_schedule(2.0, 0.0, 500, 500) == 0.0);
    CHECK(linear_schedule(2.0, 0.0, 250, 500) == doctest::Approx(1.0));
}

TEST_CASE("small packs are rejected") {
    const Objective obj = make_packing_objective(table9_instance());
    auto pack = make_pack({{0.0, 0.0}, {1.0, 1.0}}, obj);
    GwoLeaders leaders;
    RngStream rng(1);
    CHECK_THROWS_AS(gwo_step(pack, leaders, 0, 10, -100.0, 100.0, obj.evaluate, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS(rwgwo_step(pack, leaders, 0, 10, -100.0, 100.0, obj.evaluate, rng),
                    std::invalid_argument);
}

TEST_CASE("random walk basics") {
    RngStream rng(5);
    const std::vector<double> x0{1.0, 2.0};

    SUBCASE("zero steps is the identity") {
        CHECK(random_walk(x0, 0, 1.0, rng) == x0);
    }
    SUBCASE("zero scale is the identity") {
        CHECK(random_walk(x0, 5, 0.0, rng) == x0);
    }
    SUBCASE("walks compose step by step") {
        RngStream full_rng(9);
        RngStream split_rng(9);
        const auto full = random_walk(x0, 5, 0.7, full_rng);
        auto partial = random_walk(x0, 4, 0.7, split_rng);
        partial = random_walk(partial, 1, 0.7, split_rng);
        CHECK(partial == full);
    }
}

TEST_CASE("pack size and bounds are preserved") {
    const Objective obj = make_packing_objective(table9_instance());
    RngStream rng(123);
    auto pack = make_pack(initial_positions(10, 2, -100.0, 100.0, rng), obj);
    GwoLeaders leaders = leaders_of(pack);
    for (int t = 0; t < 30; ++t) {
        gwo_step(pack, leaders, t, 30, -100.0, 100.0, obj.evaluate, rng);
        CHECK(pack.size() == 10);
        for (const Wolf& w : pack)
            for (double x : w.position) {
                CHECK(x >= -100.0);
                CHECK(x <= 100.0);
            }
    }
}

TEST_CASE("leaders never regress") {
    const Objective obj = make_packing_objective(table9_instance());
    for (bool walk : {false, true}) {
        RngStream rng(321);
        auto pack = make_pack(initial_positions(8, 2, -100.0, 100.0, rng), obj);
        GwoLeaders leaders = leaders_of(pack);
        double prev_alpha = leaders.alpha.fitness;
        double prev_beta = leaders.beta.fitness;
        double prev_delta = leaders.delta.fitness;
        for (int t = 0; t < 40; ++t) {
            if (walk)
                rwgwo_step(pack, leaders, t, 40, -100.0, 100.0, obj.evaluate, rng);
            else
                gwo_step(pack, leaders, t, 40, -100.0, 100.0, obj.evaluate, rng);
            CHECK(leaders.alpha.fitness >= prev_alpha);
            CHECK(leaders.beta.fitness >= prev_beta);
            CHECK(leaders.delta.fitness >= prev_delta);
            CHECK(leaders.alpha.fitness >= leaders.beta.fitness);
            CHECK(leaders.beta.fitness >= leaders.delta.fitness);
            prev_alpha = leaders.alpha.fitness;
            prev_beta = leaders.beta.fitness;
            prev_delta = leaders.delta.fitness;
        }
    }
}

TEST_CASE("a leader at the peak rejects every walk") {
    PackingInstance empty;
    const Objective obj = make_packing_objective(empty);
    auto pack = make_pack({{0.0, 0.0}, {50.0, 0.0}, {0.0, 50.0}}, obj);
    GwoLeaders leaders = leaders_of(pack);
    REQUIRE(leaders.alpha.fitness == 100.0);
    RngStream rng(8);
    for (int t = 0; t < 20; ++t) {
        rwgwo_step(pack, leaders, t, 20, -100.0, 100.0, obj.evaluate, rng);
        CHECK(leaders.alpha.position == std::vector<double>{0.0, 0.0});
        CHECK(leaders.alpha.fitness == 100.0);
    }
}

// Frozen from a seeded run.
TEST_CASE("gwo golden regression") {
    const Objective obj = make_packing_objective(table9_instance());
    RunConfig config;
    config.algorithm = Algorithm::Gwo;
    config.population = 3;
    config.max_iterations = 1;
    config.seed = 2025;
    const RunResult r = run_optimizer(obj, config);
    CHECK(r.best_fitness == doctest::Approx(12.673900345318636).epsilon(1e-15));
    CHECK(r.best_position[0] == doctest::Approx(86.782622874543335).epsilon(1e-15));
    CHECK(r.best_position[1] == doctest::Approx(41.284368144895531).epsilon(1e-15));
}
