#include "fibereit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace fibereit::svg {

static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void Plot::save(const std::string& path) const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (!(xmin < xmax)) { xmin -= 1.0; xmax += 1.0; }
    if (!(ymin < ymax)) { ymin -= 1.0; ymax += 1.0; }
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double ml = 60, mr = 15, mt = 30, mb = 45;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SVG file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << num(ml) << "\" y=\"" << num(mt) << "\" width=\"" << num(pw)
        << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (!title.empty())
        out << "<text x=\"" << num(ml + pw / 2) << "\" y=\"18\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
    out << "<text x=\"" << num(ml + pw / 2) << "\" y=\"" << num(height - 10.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << xlabel << "</text>\n";
    out << "<text x=\"14\" y=\"" << num(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "transform=\"rotate(-90 14 " << num(mt + ph / 2) << ")\">" << ylabel
        << "</text>\n";

    for (int k = 0; k <= 4; ++k) {
        double xv = xmin + k * (xmax - xmin) / 4.0;
        double yv = ymin + k * (ymax - ymin) / 4.0;
        out << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(mt + ph + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << num(xv) << "</text>\n";
        out << "<text x=\"" << num(ml - 6) << "\" y=\"" << num(py(yv) + 3)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
            << num(yv) << "</text>\n";
    }

    for (const auto& s : series) {
        if (s.markers) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                out << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i]))
                    << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
            }
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << s.color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                out << num(px(s.x[i])) << "," << num(py(s.y[i])) << " ";
            }
            out << "\"/>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace fibereit::svg
