#include "skytour/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace skytour {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Viewport {
    double min_x = 0, min_y = 0, scale = 1;
    static constexpr double size = 760.0;
    static constexpr double margin = 20.0;

    double px(double x) const { return margin + (x - min_x) * scale; }
    double py(double y) const { return margin + size - (y - min_y) * scale; }
};

Viewport fit(const std::vector<PlanarPoint>& points) {
    Viewport vp;
    if (points.empty()) return vp;
    double min_x = std::numeric_limits<double>::max(), max_x = std::numeric_limits<double>::lowest();
    double min_y = min_x, max_y = max_x;
    for (const auto& p : points) {
        min_x = std::min(min_x, p.x());
        max_x = std::max(max_x, p.x());
        min_y = std::min(min_y, p.y());
        max_y = std::max(max_y, p.y());
    }
    vp.min_x = min_x;
    vp.min_y = min_y;
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    vp.scale = Viewport::size / span;
    return vp;
}

}  // namespace

std::string emit_svg(const Plan& plan, const std::vector<PlanarPoint>& sites,
                     const std::vector<PoI>& pois) {
    std::vector<PlanarPoint> all = sites;
    for (const auto& p : pois) all.push_back(p.position);
    const Viewport vp = fit(all);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"800\" "
           "viewBox=\"0 0 1000 800\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"800\" fill=\"white\"/>\n";
    // Axes frame around the map area
    svg << "<rect x=\"20\" y=\"20\" width=\"760\" height=\"760\" fill=\"none\" "
           "stroke=\"#333333\" stroke-width=\"1\"/>\n";

    for (const auto& poi : pois)
        svg << "<circle cx=\"" << fmt(vp.px(poi.position.x())) << "\" cy=\""
            << fmt(vp.py(poi.position.y())) << "\" r=\"1.5\" fill=\"#999999\"/>\n";

    for (const auto& site : sites)
        svg << "<circle cx=\"" << fmt(vp.px(site.x())) << "\" cy=\"" << fmt(vp.py(site.y()))
            << "\" r=\"2.5\" fill=\"#000000\"/>\n";

    for (std::size_t t = 0; t < plan.tours.size(); ++t) {
        const Tour& tour = plan.tours[t];
        const char* color = kPalette[t % kPaletteSize];
        if (tour.order.size() > 1) {
            svg << "<path class=\"tour\" d=\"";
            for (std::size_t i = 0; i < tour.order.size(); ++i) {
                const PlanarPoint& p = sites[static_cast<std::size_t>(tour.order[i])];
                svg << (i == 0 ? "M" : "L") << fmt(vp.px(p.x())) << " " << fmt(vp.py(p.y()));
            }
            svg << "Z\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        }
        // Legend row
        const double ly = 40.0 + 20.0 * static_cast<double>(t);
        svg << "<rect x=\"800\" y=\"" << fmt(ly - 10.0)
            << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        svg << "<text x=\"818\" y=\"" << fmt(ly) << "\" font-size=\"12\" font-family=\"sans-serif\">"
            << "tour " << t << ": " << fmt(tour.cost_m / 1000.0) << " km</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string sweep_svg(const std::vector<std::pair<double, int>>& sweep) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    svg << "<rect x=\"60\" y=\"20\" width=\"540\" height=\"400\" fill=\"none\" "
           "stroke=\"#333333\"/>\n";
    if (!sweep.empty()) {
        double max_md = 1.0;
        int max_l = 1;
        for (const auto& [md, l] : sweep) {
            max_md = std::max(max_md, md);
            max_l = std::max(max_l, l);
        }
        auto px = [&](double md) { return 60.0 + 540.0 * md / max_md; };
        auto py = [&](int l) { return 420.0 - 400.0 * static_cast<double>(l) / max_l; };
        svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
        for (const auto& [md, l] : sweep) svg << fmt(px(md)) << "," << fmt(py(l)) << " ";
        svg << "\"/>\n";
        for (const auto& [md, l] : sweep) {
            svg << "<circle cx=\"" << fmt(px(md)) << "\" cy=\"" << fmt(py(l))
                << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
            svg << "<text x=\"" << fmt(px(md)) << "\" y=\"" << fmt(py(l) - 8.0)
                << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">L="
                << l << "</text>\n";
        }
    }
    svg << "<text x=\"330\" y=\"460\" font-size=\"13\" font-family=\"sans-serif\" "
           "text-anchor=\"middle\">max travel distance m_d (km)</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace skytour
