#include "cli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace trace_sharp::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCx = 400.0, kCy = 400.0, kScale = 360.0;

double px(double x) { return kCx + kScale * x; }
double py(double y) { return kCy - kScale * y; }  // flip y for SVG

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string render_extremal_svg(const geometry::HalfMoonParams& p,
                                const std::string& title,
                                const std::string& subtitle) {
    const double mx = std::cos(p.theta), my = std::sin(p.theta);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    out << "  <line x1=\"" << num(px(-1.08)) << "\" y1=\"" << num(py(0)) << "\" x2=\""
        << num(px(1.08)) << "\" y2=\"" << num(py(0))
        << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"6 6\"/>\n";

    // boundary of the set: sphere arc from (cos t, -sin t) ccw through (1, 0)
    // to (cos t, sin t), then back along the removed ball (or the chord).
    const int cap_large = (2.0 * p.theta > kPi) ? 1 : 0;
    out << "  <path d=\"M " << num(px(mx)) << ' ' << num(py(-my)) << " A "
        << num(kScale) << ' ' << num(kScale) << " 0 " << cap_large << " 0 "
        << num(px(mx)) << ' ' << num(py(my));
    if (p.varphi > 0.0) {
        const auto ball = geometry::removed_ball(p);
        const int moon_large = (2.0 * p.varphi > kPi) ? 1 : 0;
        out << " A " << num(kScale * ball.radius) << ' ' << num(kScale * ball.radius)
            << " 0 " << moon_large << " 1 " << num(px(mx)) << ' ' << num(py(-my));
    } else {
        out << " L " << num(px(mx)) << ' ' << num(py(-my));
    }
    out << " Z\" fill=\"#7da7d9\" fill-opacity=\"0.55\" stroke=\"#2a4d7f\" "
           "stroke-width=\"2\"/>\n";

    if (p.varphi > 0.0) {
        const auto ball = geometry::removed_ball(p);
        out << "  <circle class=\"removed-ball\" cx=\"" << num(px(ball.center_x1))
            << "\" cy=\"" << num(py(0)) << "\" r=\"" << num(kScale * ball.radius)
            << "\" fill=\"none\" stroke=\"#c06050\" stroke-width=\"1.5\" "
               "stroke-dasharray=\"8 5\"/>\n";
    }
    out << "  <circle cx=\"" << num(kCx) << "\" cy=\"" << num(kCy) << "\" r=\""
        << num(kScale)
        << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2.5\"/>\n";

    out << "  <text x=\"20\" y=\"34\" font-family=\"monospace\" font-size=\"18\">"
        << title << "</text>\n";
    out << "  <text x=\"20\" y=\"58\" font-family=\"monospace\" font-size=\"14\">"
        << subtitle << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace trace_sharp::cli
