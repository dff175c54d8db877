#include "emdet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace emdet {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v, const char* fmt = "%.2f") {
    char buf[48];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

struct Axis {
    double lo = 0.0, hi = 1.0;  // in plot coordinates (log10 when log scale)
    bool log = false;

    double transform(double v) const { return log ? std::log10(v) : v; }
    bool usable(double v) const { return !log || v > 0.0; }

    std::vector<double> ticks() const {
        std::vector<double> t;
        if (log) {
            for (int k = static_cast<int>(std::floor(lo)); k <= static_cast<int>(std::ceil(hi)); ++k)
                if (k >= lo - 1e-9 && k <= hi + 1e-9) t.push_back(k);
            if (t.size() < 2) {  // span under a decade: fall back to linear ticks
                const double step = (hi - lo) / 4.0;
                for (int i = 0; i <= 4; ++i) t.push_back(lo + i * step);
            }
            return t;
        }
        const double span = hi - lo;
        const double raw = span / 6.0;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        for (double m : {1.0, 2.0, 5.0, 10.0})
            if (raw <= m * mag) { step = m * mag; break; }
        const double first = std::ceil(lo / step) * step;
        for (double v = first; v <= hi + 1e-9 * span; v += step) t.push_back(v);
        return t;
    }

    std::string tick_label(double t) const {
        return num(log ? std::pow(10.0, t) : t, "%g");
    }
};

}  // namespace

std::string render_line_plot(const std::vector<SvgSeries>& series,
                             const SvgPlotOptions& options) {
    const int w = options.width, h = options.height;
    const int ml = 70, mr = 24, mt = 42, mb = 52;
    const double pw = w - ml - mr, ph = h - mt - mb;

    Axis xa, ya;
    xa.log = options.log_x;
    ya.log = options.log_y;
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!xa.usable(s.x[i]) || !ya.usable(s.y[i])) continue;
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x_lo = std::min(x_lo, xa.transform(s.x[i]));
            x_hi = std::max(x_hi, xa.transform(s.x[i]));
            y_lo = std::min(y_lo, ya.transform(s.y[i]));
            y_hi = std::max(y_hi, ya.transform(s.y[i]));
        }
    }
    if (!std::isfinite(x_lo)) { x_lo = 0; x_hi = 1; y_lo = 0; y_hi = 1; }
    if (x_hi == x_lo) x_hi = x_lo + 1;
    if (y_hi == y_lo) y_hi = y_lo + 1;
    const double y_pad = 0.04 * (y_hi - y_lo);
    xa.lo = x_lo; xa.hi = x_hi;
    ya.lo = y_lo - y_pad; ya.hi = y_hi + y_pad;

    auto px = [&](double v) { return ml + (xa.transform(v) - xa.lo) / (xa.hi - xa.lo) * pw; };
    auto py = [&](double v) { return mt + ph - (ya.transform(v) - ya.lo) / (ya.hi - ya.lo) * ph; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) +
           " " + std::to_string(h) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";

    if (!options.title.empty())
        svg += "<text x=\"" + num(w / 2.0) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
               options.title + "</text>\n";

    // frame
    svg += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" + num(pw) +
           "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    for (double t : xa.ticks()) {
        const double x = ml + (t - xa.lo) / (xa.hi - xa.lo) * pw;
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(mt + ph) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(mt + ph + 5) + "\" stroke=\"black\"/>\n";
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(mt + ph) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(mt + ph + 18) +
               "\" text-anchor=\"middle\">" + xa.tick_label(t) + "</text>\n";
    }
    for (double t : ya.ticks()) {
        const double y = mt + ph - (t - ya.lo) / (ya.hi - ya.lo) * ph;
        svg += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(ml) +
               "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
        svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(y) + "\" x2=\"" + num(ml + pw) +
               "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\">" + ya.tick_label(t) + "</text>\n";
    }

    if (!options.x_label.empty())
        svg += "<text x=\"" + num(ml + pw / 2) + "\" y=\"" + num(h - 12.0) +
               "\" text-anchor=\"middle\">" + options.x_label + "</text>\n";
    if (!options.y_label.empty())
        svg += "<text x=\"16\" y=\"" + num(mt + ph / 2) +
               "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + num(mt + ph / 2) +
               ")\">" + options.y_label + "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        std::string points;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!xa.usable(s.x[i]) || !ya.usable(s.y[i])) continue;
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            points += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
        }
        if (points.empty()) continue;
        svg += "<polyline fill=\"none\" stroke=\"" +
               std::string(kPalette[si % std::size(kPalette)]) +
               "\" stroke-width=\"1.6\" points=\"" + points + "\"/>\n";
    }

    // legend, top-right corner of the plot area
    double ly = mt + 14;
    for (std::size_t si = 0; si < series.size(); ++si) {
        const double lx = ml + pw - 150;
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 4) + "\" x2=\"" +
               num(lx + 24) + "\" y2=\"" + num(ly - 4) + "\" stroke=\"" +
               std::string(kPalette[si % std::size(kPalette)]) + "\" stroke-width=\"1.6\"/>\n";
        svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly) + "\">" +
               series[si].label + "</text>\n";
        ly += 16;
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

void write_line_plot(const std::string& path, const std::vector<SvgSeries>& series,
                     const SvgPlotOptions& options) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    const std::string text = render_line_plot(series, options);
    if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
        throw std::runtime_error("write_line_plot: cannot write '" + path + "'");
}

}  // namespace emdet
