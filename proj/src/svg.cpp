#include "varistar/svg.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <limits>

namespace varistar {

namespace {

constexpr double canvas = 800.0;
constexpr double margin = 40.0;

struct Frame {
    double x0, y1, scale;

    double sx(double x) const { return margin + (x - x0) * scale; }
    double sy(double y) const { return margin + (y1 - y) * scale; }
};

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string render_svg(std::string_view title, std::span<const LabeledDisc> discs, std::span<const cplx> points) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto grow = [&](double x, double y, double r) {
        xmin = std::min(xmin, x - r);
        xmax = std::max(xmax, x + r);
        ymin = std::min(ymin, y - r);
        ymax = std::max(ymax, y + r);
    };
    for (const auto& d : discs) {
        grow(d.disc.center.real(), d.disc.center.imag(), d.disc.radius);
    }
    for (const auto& z : points) {
        grow(z.real(), z.imag(), 0.0);
    }
    if (!(xmax > xmin) || !(ymax > ymin)) {
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    const double span = std::max(xmax - xmin, ymax - ymin);
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const Frame frame{cx - 0.5 * span, cy + 0.5 * span, (canvas - 2 * margin) / span};

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    svg += fmt::format("<title>{}</title>\n", escape(title));
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // real axis, if it is in frame
    if (frame.sy(0.0) >= 0.0 && frame.sy(0.0) <= canvas) {
        svg += fmt::format("<line x1=\"0\" y1=\"{0:.3f}\" x2=\"800\" y2=\"{0:.3f}\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n",
                           frame.sy(0.0));
    }

    svg += "<g fill=\"#1f77b4\" fill-opacity=\"0.5\" stroke=\"none\">\n";
    for (const auto& z : points) {
        svg += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"1.2\"/>\n", frame.sx(z.real()), frame.sy(z.imag()));
    }
    svg += "</g>\n";

    double legend_y = 20.0;
    for (const auto& d : discs) {
        svg += fmt::format(
            "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            frame.sx(d.disc.center.real()), frame.sy(d.disc.center.imag()), d.disc.radius * frame.scale, d.stroke);
        svg += fmt::format("<text x=\"10\" y=\"{:.0f}\" font-family=\"monospace\" font-size=\"13\" fill=\"{}\">{}</text>\n",
                           legend_y, d.stroke, escape(d.label));
        legend_y += 16.0;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace varistar
