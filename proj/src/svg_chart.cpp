#include "rewirekit/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rewirekit {

namespace {

constexpr double kPanelW = 420.0;
constexpr double kPanelH = 340.0;
constexpr double kMarginL = 64.0;
constexpr double kMarginR = 18.0;
constexpr double kMarginT = 34.0;
constexpr double kMarginB = 48.0;

const char* kPalette[] = {"#000000", "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf"};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct LogScale {
    double lo_exp = 0.0, hi_exp = 1.0;
    double pix_lo = 0.0, pix_hi = 1.0;
    bool flip = false;

    double operator()(double v) const {
        const double t = (std::log10(v) - lo_exp) / (hi_exp - lo_exp);
        const double u = flip ? 1.0 - t : t;
        return pix_lo + u * (pix_hi - pix_lo);
    }
};

}  // namespace

void write_log_log_chart(const std::string& path, const std::vector<ChartPanel>& panels) {
    if (panels.empty()) throw std::invalid_argument("write_log_log_chart: no panels");
    const double total_w = kPanelW * static_cast<double>(panels.size());
    const double total_h = kPanelH + 24.0 * 1.0;  // room for the legend row

    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_log_log_chart: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(total_w) << "\" height=\""
        << fmt(total_h) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const ChartPanel& panel = panels[p];
        const double x0 = kPanelW * static_cast<double>(p) + kMarginL;
        const double x1 = kPanelW * static_cast<double>(p) + kPanelW - kMarginR;
        const double y0 = kMarginT;
        const double y1 = kPanelH - kMarginB;

        double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
        for (const ChartSeries& s : panel.series) {
            for (const SeriesPoint& pt : s.points) {
                if (pt.x <= 0.0 || pt.y <= 0.0 || pt.band_lo <= 0.0 || pt.band_hi <= 0.0)
                    throw std::invalid_argument("write_log_log_chart: values must be positive");
                min_x = std::min(min_x, pt.x);
                max_x = std::max(max_x, pt.x);
                min_y = std::min(min_y, pt.band_lo);
                max_y = std::max(max_y, pt.band_hi);
            }
        }
        if (min_x > max_x) throw std::invalid_argument("write_log_log_chart: empty panel");

        LogScale sx{std::log10(min_x), std::log10(max_x), x0, x1, false};
        LogScale sy{std::floor(std::log10(min_y)), std::ceil(std::log10(max_y)), y0, y1, true};
        if (sx.lo_exp == sx.hi_exp) {
            sx.lo_exp -= 0.5;
            sx.hi_exp += 0.5;
        }
        if (sy.lo_exp == sy.hi_exp) sy.hi_exp += 1.0;

        // frame and title
        out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(x1 - x0)
            << "\" height=\"" << fmt(y1 - y0) << "\" fill=\"none\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(y0 - 12.0)
            << "\" text-anchor=\"middle\">" << panel.title << "</text>\n";
        out << "<text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(y1 + 34.0)
            << "\" text-anchor=\"middle\">" << panel.x_label << "</text>\n";
        out << "<text x=\"" << fmt(x0 - 46.0) << "\" y=\"" << fmt((y0 + y1) / 2)
            << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << fmt(x0 - 46.0) << ' '
            << fmt((y0 + y1) / 2) << ")\">" << panel.y_label << "</text>\n";

        // y ticks at powers of ten
        for (int e = static_cast<int>(sy.lo_exp); e <= static_cast<int>(sy.hi_exp); ++e) {
            const double y = sy(std::pow(10.0, e));
            out << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x1)
                << "\" y2=\"" << fmt(y) << "\" stroke=\"#ddd\" stroke-dasharray=\"3,3\"/>\n";
            out << "<text x=\"" << fmt(x0 - 6.0) << "\" y=\"" << fmt(y + 4.0)
                << "\" text-anchor=\"end\">1e" << e << "</text>\n";
        }
        // x ticks at the data points of the first series
        if (!panel.series.empty()) {
            for (const SeriesPoint& pt : panel.series.front().points) {
                const double x = sx(pt.x);
                out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x)
                    << "\" y2=\"" << fmt(y1) << "\" stroke=\"#eee\"/>\n";
                out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y1 + 16.0)
                    << "\" text-anchor=\"middle\">" << fmt(pt.x) << "</text>\n";
            }
        }

        for (std::size_t s = 0; s < panel.series.size(); ++s) {
            const ChartSeries& series = panel.series[s];
            const char* colour = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
            if (series.points.empty()) continue;

            out << "<polygon fill=\"" << colour << "\" fill-opacity=\"0.12\" stroke=\"none\" points=\"";
            for (const SeriesPoint& pt : series.points)
                out << fmt(sx(pt.x)) << ',' << fmt(sy(pt.band_hi)) << ' ';
            for (auto it = series.points.rbegin(); it != series.points.rend(); ++it)
                out << fmt(sx(it->x)) << ',' << fmt(sy(it->band_lo)) << ' ';
            out << "\"/>\n";

            out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.6\" points=\"";
            for (const SeriesPoint& pt : series.points)
                out << fmt(sx(pt.x)) << ',' << fmt(sy(pt.y)) << ' ';
            out << "\"/>\n";
        }
    }

    // legend from the first panel's series
    double lx = kMarginL;
    const double ly = kPanelH + 8.0;
    for (std::size_t s = 0; s < panels.front().series.size(); ++s) {
        const char* colour = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
        out << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 22.0)
            << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(lx + 27.0) << "\" y=\"" << fmt(ly + 4.0) << "\">"
            << panels.front().series[s].label << "</text>\n";
        lx += 34.0 + 7.2 * static_cast<double>(panels.front().series[s].label.size());
    }

    out << "</svg>\n";
    if (!out) throw std::runtime_error("write_log_log_chart: write failed for " + path);
}

}  // namespace rewirekit
