#pragma once

#include <string>
#include <vector>

namespace emdet {

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct SvgPlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    int width = 760;
    int height = 520;
};

// Static line plot: axes, tick labels, one polyline per series, legend.
// Self-contained SVG, no external renderer or font dependencies. On a log
// axis, points at or below zero are dropped from that series.
std::string render_line_plot(const std::vector<SvgSeries>& series,
                             const SvgPlotOptions& options);

void write_line_plot(const std::string& path, const std::vector<SvgSeries>& series,
                     const SvgPlotOptions& options);

}  // namespace emdet
