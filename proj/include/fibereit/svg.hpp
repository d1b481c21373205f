#pragma once

#include <string>
#include <vector>

namespace fibereit::svg {

struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f77b4";
    bool markers = false;  // draw circles at the points instead of a line
};

/// Minimal deterministic line plot: axes box, tick labels, polylines.
/// No external plotting dependency by design.
struct Plot {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    std::vector<Series> series;
    int width = 640;
    int height = 420;

    void save(const std::string& path) const;
};

}  // namespace fibereit::svg
