#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "circlepack/instance_io.hpp"
#include "circlepack/svg.hpp"

using namespace circlepack;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("instance json round trip") {
    const PackingInstance inst = table9_instance();
    const PackingInstance parsed = parse_instance_json(instance_to_json(inst));
    CHECK(parsed.lb == inst.lb);
    CHECK(parsed.ub == inst.ub);
    REQUIRE(parsed.obstacles.size() == inst.obstacles.size());
    for (std::size_t i = 0; i < inst.obstacles.size(); ++i) {
        CHECK(parsed.obstacles[i].center.x == inst.obstacles[i].center.x);
        CHECK(parsed.obstacles[i].center.y == inst.obstacles[i].center.y);
        CHECK(parsed.obstacles[i].radius == inst.obstacles[i].radius);
    }
}

TEST_CASE("validation errors name the offending field") {
    CHECK_THROWS_WITH_AS(
        parse_instance_json(R"({"lb": -1, "ub": 1, "circles": [{"cx": 0, "cy": 0, "r": -1}]})"),
        doctest::Contains("circles[0].r"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parse_instance_json(
            R"({"lb": -1, "ub": 1, "circles": [{"cx": 0, "cy": 0, "r": 1}, {"cx": "x", "cy": 0, "r": 1}]})"),
        doctest::Contains("circles[1].cx"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_instance_json(R"({"lb": 1, "ub": 1, "circles": []})"),
                         doctest::Contains("ub"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_instance_json(R"({"ub": 1})"), doctest::Contains("lb"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_instance_json("not json"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_instance_json(R"({"lb": -1, "ub": 1, "circles": 7})"),
                         doctest::Contains("circles"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        parse_instance_json(R"({"lb": -1, "ub": 1, "circles": [{"cy": 0, "r": 1}]})"),
        doctest::Contains("circles[0].cx"), std::runtime_error);
}

TEST_CASE("an empty circle list is a valid instance") {
    const PackingInstance inst = parse_instance_json(R"({"lb": -5, "ub": 5, "circles": []})");
    CHECK(inst.obstacles.empty());
    CHECK(inst.lb == -5.0);
    const PackingInstance no_key = parse_instance_json(R"({"lb": -5, "ub": 5})");
    CHECK(no_key.obstacles.empty());
}

TEST_CASE("builtin instance name") {
    const PackingInstance inst = load_instance("table9");
    CHECK(inst.obstacles.size() == 10);
    CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), std::runtime_error);
}

TEST_CASE("svg element counts") {
    const PackingInstance inst = table9_instance();

    const std::string bare = render_svg(inst, std::nullopt);
    CHECK(count_occurrences(bare, "<circle") == 10);
    CHECK(count_occurrences(bare, "<rect") == 1);

    const std::string solved =
        render_svg(inst, std::make_pair(Point2{-36.152144, -65.760722}, 34.239278));
    CHECK(count_occurrences(solved, "<circle") == 11);
    CHECK(count_occurrences(solved, "<rect") == 1);
    CHECK(solved.find("34.24") != std::string::npos);  // radius label

    PackingInstance empty;
    const std::string blank = render_svg(empty, std::nullopt);
    CHECK(count_occurrences(blank, "<circle") == 0);
    CHECK(count_occurrences(blank, "<rect") == 1);
}

TEST_CASE("svg flips the y axis") {
    PackingInstance inst;
    inst.obstacles = {{{0.0, 90.0}, 5.0}};
    const std::string svg = render_svg(inst, std::nullopt);
    // The box maps to [20, 820]; y = 90 sits near the top of the viewport.
    CHECK(svg.find("cy=\"60.00\"") != std::string::npos);
}
