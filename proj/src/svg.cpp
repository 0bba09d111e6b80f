#include "acs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace acs {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 560.0;
constexpr double kMarginL = 72.0;
constexpr double kMarginR = 24.0;
constexpr double kMarginT = 44.0;
constexpr double kMarginB = 58.0;
constexpr std::size_t kMaxPolyPoints = 1000;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string escape_text(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;
    bool seen = false;

    void add(double v) {
        if (!std::isfinite(v)) return;
        if (!seen) {
            lo = hi = v;
            seen = true;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
};

// Linear tick positions with a 1/2/5 step covering [lo, hi].
std::vector<double> linear_ticks(double lo, double hi) {
    const double span = hi - lo;
    if (!(span > 0.0)) return {lo};
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    std::vector<double> ticks;
    double v = std::ceil(lo / step) * step;
    for (; v <= hi + step * 1e-9; v += step) {
        double t = v;
        if (std::abs(t) < step * 1e-9) t = 0.0;
        ticks.push_back(t);
    }
    return ticks;
}

// Decade ticks for a log10 axis.
std::vector<double> decade_ticks(double lo, double hi) {
    std::vector<double> ticks;
    const int k0 = static_cast<int>(std::ceil(std::log10(lo) - 1e-9));
    const int k1 = static_cast<int>(std::floor(std::log10(hi) + 1e-9));
    int stride = 1;
    if (k1 - k0 > 8) stride = (k1 - k0 + 7) / 8;
    for (int k = k0; k <= k1; k += stride) ticks.push_back(std::pow(10.0, k));
    if (ticks.empty()) ticks.push_back(lo);
    return ticks;
}

template <typename T>
std::vector<T> thin(const std::vector<T>& points) {
    if (points.size() <= kMaxPolyPoints) return points;
    const std::size_t stride = (points.size() + kMaxPolyPoints - 1) / kMaxPolyPoints;
    std::vector<T> out;
    out.reserve(points.size() / stride + 2);
    for (std::size_t i = 0; i < points.size(); i += stride) out.push_back(points[i]);
    if (out.back() != points.back()) out.push_back(points.back());
    return out;
}

}  // namespace

std::string render_svg(const Chart& chart) {
    // Data ranges.
    Range xr, yr;
    auto add_xy = [&](double x, double y) {
        if (chart.x_log10 && !(x > 0.0))
            throw std::invalid_argument("render_svg: log-scale x requires positive x");
        xr.add(x);
        yr.add(y);
    };
    for (const auto& s : chart.lines)
        for (const auto& [x, y] : s.points) add_xy(x, y);
    for (const auto& s : chart.bands)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            add_xy(s.x[i], s.lo[i]);
            add_xy(s.x[i], s.hi[i]);
        }
    for (const auto& s : chart.segments)
        for (const auto& g : s.segs) {
            add_xy(g.x, g.y_lo);
            add_xy(g.x, g.y_hi);
        }
    for (const auto& s : chart.markers)
        for (const auto& [x, y] : s.points) add_xy(x, y);
    for (const auto& s : chart.bars)
        for (const auto& [x, h] : s.bars) {
            add_xy(x - s.half_width, h);
            add_xy(x + s.half_width, 0.0);
        }
    if (!xr.seen) throw std::invalid_argument("render_svg: chart has no data");

    double ymin = chart.y_min.value_or(yr.lo);
    double ymax = chart.y_max.value_or(yr.hi);
    if (!chart.y_min && !chart.y_max) {
        const double pad = (ymax > ymin) ? 0.05 * (ymax - ymin) : 0.5;
        ymin -= pad;
        ymax += pad;
    } else if (!(ymax > ymin)) {
        ymax = ymin + 1.0;
    }
    double xmin = xr.lo, xmax = xr.hi;
    if (!(xmax > xmin)) {
        if (chart.x_log10) {
            xmin /= 2.0;
            xmax *= 2.0;
        } else {
            xmin -= 0.5;
            xmax += 0.5;
        }
    }

    const double plot_w = kWidth - kMarginL - kMarginR;
    const double plot_h = kHeight - kMarginT - kMarginB;
    const double tx0 = chart.x_log10 ? std::log10(xmin) : xmin;
    const double tx1 = chart.x_log10 ? std::log10(xmax) : xmax;
    auto px = [&](double x) {
        const double t = chart.x_log10 ? std::log10(x) : x;
        return kMarginL + (t - tx0) / (tx1 - tx0) * plot_w;
    };
    auto py = [&](double y) {
        const double c = std::clamp(y, ymin, ymax);
        return kMarginT + (1.0 - (c - ymin) / (ymax - ymin)) * plot_h;
    };

    std::string svg;
    svg.reserve(1 << 16);
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_tick(kWidth) +
           "\" height=\"" + fmt_tick(kHeight) + "\" viewBox=\"0 0 " + fmt_tick(kWidth) + " " +
           fmt_tick(kHeight) + "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
    svg += "<rect width=\"" + fmt_tick(kWidth) + "\" height=\"" + fmt_tick(kHeight) +
           "\" fill=\"#ffffff\"/>\n";

    // Bands first so everything else draws on top of them.
    for (const auto& s : chart.bands) {
        if (s.x.empty()) continue;
        std::vector<std::size_t> idx(s.x.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        idx = thin(idx);
        std::string pts;
        for (std::size_t i : idx) pts += fmt(px(s.x[i])) + "," + fmt(py(s.hi[i])) + " ";
        for (auto it = idx.rbegin(); it != idx.rend(); ++it)
            pts += fmt(px(s.x[*it])) + "," + fmt(py(s.lo[*it])) + " ";
        pts.pop_back();
        svg += "<polygon points=\"" + pts + "\" fill=\"" + s.color +
               "\" fill-opacity=\"0.18\" stroke=\"none\"/>\n";
    }

    for (const auto& s : chart.bars) {
        for (const auto& [x, h] : s.bars) {
            const double x0 = px(x - s.half_width);
            const double x1 = px(x + s.half_width);
            const double y0 = py(0.0);
            const double y1 = py(h);
            svg += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(std::min(y0, y1)) + "\" width=\"" +
                   fmt(x1 - x0) + "\" height=\"" + fmt(std::abs(y0 - y1)) + "\" fill=\"" +
                   s.color + "\" fill-opacity=\"0.85\"/>\n";
        }
    }

    for (const auto& r : chart.ref_lines) {
        const double y = py(r.y);
        svg += "<line x1=\"" + fmt(kMarginL) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(kWidth - kMarginR) + "\" y2=\"" + fmt(y) + "\" stroke=\"" + r.color +
               "\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
    }

    for (const auto& s : chart.lines) {
        // Break polylines at non-finite points.
        std::vector<std::pair<double, double>> run;
        auto flush = [&]() {
            if (run.size() < 2) {
                run.clear();
                return;
            }
            auto pts = thin(run);
            std::string attr;
            for (const auto& [x, y] : pts) attr += fmt(px(x)) + "," + fmt(py(y)) + " ";
            attr.pop_back();
            svg += "<polyline points=\"" + attr + "\" fill=\"none\" stroke=\"" + s.color +
                   "\" stroke-width=\"1.8\"/>\n";
            run.clear();
        };
        for (const auto& [x, y] : s.points) {
            if (std::isfinite(x) && std::isfinite(y)) run.emplace_back(x, y);
            else flush();
        }
        flush();
    }

    for (const auto& s : chart.segments) {
        for (const auto& g : s.segs) {
            const double x = px(g.x);
            const double ylo = py(g.y_lo);
            const double yhi = py(g.y_hi);
            svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(ylo) + "\" x2=\"" + fmt(x) +
                   "\" y2=\"" + fmt(yhi) + "\" stroke=\"" + s.color + "\" stroke-width=\"2\"/>\n";
            for (double ye : {ylo, yhi})
                svg += "<line x1=\"" + fmt(x - 4) + "\" y1=\"" + fmt(ye) + "\" x2=\"" +
                       fmt(x + 4) + "\" y2=\"" + fmt(ye) + "\" stroke=\"" + s.color +
                       "\" stroke-width=\"2\"/>\n";
        }
    }

    for (const auto& s : chart.markers) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            svg += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
                   "\" r=\"3.5\" fill=\"" + s.color + "\"/>\n";
        }
    }

    // Axes.
    const double ax_y = kHeight - kMarginB;
    svg += "<line x1=\"" + fmt(kMarginL) + "\" y1=\"" + fmt(ax_y) + "\" x2=\"" +
           fmt(kWidth - kMarginR) + "\" y2=\"" + fmt(ax_y) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt(kMarginL) + "\" y1=\"" + fmt(kMarginT) + "\" x2=\"" +
           fmt(kMarginL) + "\" y2=\"" + fmt(ax_y) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    const auto xticks = chart.x_log10 ? decade_ticks(xmin, xmax) : linear_ticks(xmin, xmax);
    for (double tv : xticks) {
        const double x = px(tv);
        svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(ax_y) + "\" x2=\"" + fmt(x) +
               "\" y2=\"" + fmt(ax_y + 5) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(ax_y + 19) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + fmt_tick(tv) + "</text>\n";
    }
    for (double tv : linear_ticks(ymin, ymax)) {
        const double y = py(tv);
        svg += "<line x1=\"" + fmt(kMarginL - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(kMarginL) + "\" y2=\"" + fmt(y) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(kMarginL - 9) + "\" y=\"" + fmt(y + 4) +
               "\" font-size=\"12\" text-anchor=\"end\">" + fmt_tick(tv) + "</text>\n";
    }

    if (!chart.title.empty())
        svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"" + fmt(kMarginT - 16) +
               "\" font-size=\"16\" text-anchor=\"middle\">" + escape_text(chart.title) +
               "</text>\n";
    if (!chart.x_label.empty())
        svg += "<text x=\"" + fmt(kMarginL + plot_w / 2) + "\" y=\"" + fmt(kHeight - 14) +
               "\" font-size=\"13\" text-anchor=\"middle\">" + escape_text(chart.x_label) +
               "</text>\n";
    if (!chart.y_label.empty())
        svg += "<text x=\"18\" y=\"" + fmt(kMarginT + plot_h / 2) +
               "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
               fmt(kMarginT + plot_h / 2) + ")\">" + escape_text(chart.y_label) + "</text>\n";

    // Legend, one entry per labeled series.
    struct Entry {
        std::string label;
        std::string color;
    };
    std::vector<Entry> entries;
    for (const auto& s : chart.lines)
        if (!s.label.empty()) entries.push_back({s.label, s.color});
    for (const auto& s : chart.bands)
        if (!s.label.empty()) entries.push_back({s.label, s.color});
    for (const auto& s : chart.segments)
        if (!s.label.empty()) entries.push_back({s.label, s.color});
    for (const auto& s : chart.markers)
        if (!s.label.empty()) entries.push_back({s.label, s.color});
    for (const auto& s : chart.bars)
        if (!s.label.empty()) entries.push_back({s.label, s.color});
    if (!entries.empty()) {
        std::size_t longest = 0;
        for (const auto& e : entries) longest = std::max(longest, e.label.size());
        const double box_w = 30.0 + 7.2 * static_cast<double>(longest);
        const double box_h = 8.0 + 18.0 * static_cast<double>(entries.size());
        const double bx = kWidth - kMarginR - box_w - 8.0;
        const double by = kMarginT + 8.0;
        svg += "<rect x=\"" + fmt(bx) + "\" y=\"" + fmt(by) + "\" width=\"" + fmt(box_w) +
               "\" height=\"" + fmt(box_h) +
               "\" fill=\"#ffffff\" fill-opacity=\"0.9\" stroke=\"#999999\"/>\n";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const double ey = by + 6.0 + 18.0 * static_cast<double>(i);
            svg += "<rect x=\"" + fmt(bx + 6) + "\" y=\"" + fmt(ey) +
                   "\" width=\"12\" height=\"12\" fill=\"" + entries[i].color + "\"/>\n";
            svg += "<text x=\"" + fmt(bx + 24) + "\" y=\"" + fmt(ey + 10) +
                   "\" font-size=\"12\">" + escape_text(entries[i].label) + "</text>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace acs
