// Dependency-free SVG charts: polylines, shaded bands, interval segments,
// point markers, and grouped bars, with axes, ticks, and a legend.
//
// Rendering is a pure function of the chart description; identical input
// yields identical bytes, which the determinism tests rely on.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace acs {

struct LineSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;  // (x, y)
};

// Shaded region between lo(x) and hi(x).
struct BandSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> lo;
    std::vector<double> hi;
};

// Vertical segments [y_lo, y_hi] at x, with end caps.
struct SegmentSeries {
    std::string label;
    std::string color;
    struct Seg {
        double x;
        double y_lo;
        double y_hi;
    };
    std::vector<Seg> segs;
};

struct MarkerSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Bars rising from the y=0 baseline, centered at x with the given half width.
struct BarSeries {
    std::string label;
    std::string color;
    double half_width = 0.4;
    std::vector<std::pair<double, double>> bars;  // (x center, height)
};

// Horizontal reference line.
struct RefLine {
    double y = 0.0;
    std::string color = "#888888";
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool x_log10 = false;  // positions x by log10(x); x values must be positive
    std::optional<double> y_min;
    std::optional<double> y_max;
    std::vector<LineSeries> lines;
    std::vector<BandSeries> bands;
    std::vector<SegmentSeries> segments;
    std::vector<MarkerSeries> markers;
    std::vector<BarSeries> bars;
    std::vector<RefLine> ref_lines;
};

// Full SVG document. Throws std::invalid_argument when the chart has no data.
// Polylines and bands longer than 1000 points are thinned (first and last
// points always kept).
std::string render_svg(const Chart& chart);

}  // namespace acs
