#include "circlepack/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace circlepack {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw std::runtime_error(path + ": must be a number");
    return j.get<double>();
}

}  // namespace

PackingInstance parse_instance_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("instance JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("instance: must be a JSON object");
    if (!j.contains("lb")) throw std::runtime_error("lb: missing");
    if (!j.contains("ub")) throw std::runtime_error("ub: missing");

    PackingInstance inst;
    inst.lb = require_number(j["lb"], "lb");
    inst.ub = require_number(j["ub"], "ub");
    if (!(inst.ub > inst.lb)) throw std::runtime_error("ub: must be greater than lb");

    if (j.contains("circles")) {
        const json& circles = j["circles"];
        if (!circles.is_array()) throw std::runtime_error("circles: must be an array");
        for (std::size_t i = 0; i < circles.size(); ++i) {
            const std::string path = "circles[" + std::to_string(i) + "]";
            const json& c = circles[i];
            if (!c.is_object()) throw std::runtime_error(path + ": must be an object");
            for (const char* key : {"cx", "cy", "r"})
                if (!c.contains(key)) throw std::runtime_error(path + "." + key + ": missing");
            Circle circle;
            circle.center.x = require_number(c["cx"], path + ".cx");
            circle.center.y = require_number(c["cy"], path + ".cy");
            circle.radius = require_number(c["r"], path + ".r");
            if (!(circle.radius > 0.0))
                throw std::runtime_error(path + ".r: must be a positive number");
            inst.obstacles.push_back(circle);
        }
    }
    return inst;
}

PackingInstance load_instance(const std::string& path_or_builtin) {
    if (path_or_builtin == "table9") return table9_instance();
    std::ifstream in(path_or_builtin);
    if (!in) throw std::runtime_error("cannot open instance file: " + path_or_builtin);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_json(buf.str());
}

std::string instance_to_json(const PackingInstance& inst) {
    json j;
    j["lb"] = inst.lb;
    j["ub"] = inst.ub;
    j["circles"] = json::array();
    for (const Circle& c : inst.obstacles)
        j["circles"].push_back({{"cx", c.center.x}, {"cy", c.center.y}, {"r", c.radius}});
    return j.dump(2);
}

}  // namespace circlepack
