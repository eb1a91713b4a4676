#pragma once

#include <string>

#include "circlepack/geometry.hpp"

namespace circlepack {

// Parses {"lb": number, "ub": number, "circles": [{"cx","cy","r"}, ...]}.
// Validation failures throw std::runtime_error naming the offending field
// path (e.g. "circles[2].r").
PackingInstance parse_instance_json(const std::string& text);

// Loads an instance from a file path, or the builtin "table9".
PackingInstance load_instance(const std::string& path_or_builtin);

std::string instance_to_json(const PackingInstance& inst);

}  // namespace circlepack
