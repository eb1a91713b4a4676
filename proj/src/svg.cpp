#include "circlepack/svg.hpp"

#include <charconv>

namespace circlepack {

namespace {

constexpr double kViewSize = 800.0;
constexpr double kMargin = 20.0;

std::string num(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string render_svg(const PackingInstance& inst,
                       const std::optional<std::pair<Point2, double>>& solution) {
    const double world = inst.ub - inst.lb;
    const double scale = kViewSize / world;
    const auto sx = [&](double x) { return kMargin + (x - inst.lb) * scale; };
    const auto sy = [&](double y) { return kMargin + (inst.ub - y) * scale; };  // flip y
    const double total = kViewSize + 2.0 * kMargin;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(total) + "\" height=\"" +
           num(total) + "\" viewBox=\"0 0 " + num(total) + " " + num(total) + "\">\n";
    svg += "  <rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" +
           num(kViewSize) + "\" height=\"" + num(kViewSize) +
           "\" fill=\"none\" stroke=\"#222\" stroke-width=\"2\"/>\n";

    for (const Circle& c : inst.obstacles) {
        svg += "  <circle cx=\"" + num(sx(c.center.x)) + "\" cy=\"" + num(sy(c.center.y)) +
               "\" r=\"" + num(c.radius * scale) +
               "\" fill=\"none\" stroke=\"#336\" stroke-width=\"1.5\"/>\n";
    }

    if (solution) {
        const auto& [center, radius] = *solution;
        const double cx = sx(center.x);
        const double cy = sy(center.y);
        svg += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
               num(radius * scale) +
               "\" fill=\"#2a923055\" stroke=\"#2a9230\" stroke-width=\"2\"/>\n";
        svg += "  <path d=\"M " + num(cx - 6.0) + " " + num(cy) + " H " + num(cx + 6.0) + " M " +
               num(cx) + " " + num(cy - 6.0) + " V " + num(cy + 6.0) +
               "\" stroke=\"#111\" stroke-width=\"1.5\"/>\n";
        svg += "  <text x=\"" + num(cx + 8.0) + "\" y=\"" + num(cy - 8.0) +
               "\" font-family=\"sans-serif\" font-size=\"16\">r = " + num(radius) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace circlepack
