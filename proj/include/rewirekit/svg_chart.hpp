#pragma once

#include <string>
#include <vector>

namespace rewirekit {

struct SeriesPoint {
    double x = 0.0;
    double y = 0.0;
    double band_lo = 0.0;
    double band_hi = 0.0;
};

struct ChartSeries {
    std::string label;
    std::vector<SeriesPoint> points;  // ascending x
};

struct ChartPanel {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
};

// Log-log line chart with shaded +/- band polygons, one panel per entry,
// panels laid out side by side. All x, y, and band values must be positive.
void write_log_log_chart(const std::string& path, const std::vector<ChartPanel>& panels);

}  // namespace rewirekit
