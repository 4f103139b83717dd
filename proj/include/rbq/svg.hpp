#pragma once

#include <string>
#include <vector>

namespace rbq {

struct Series {
  std::string label;
  std::string color;
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<Series> series;
  bool log_y = true;  // falls back to linear if any value is not positive
};

/// Static SVG with one <polyline> per series.
std::string render_svg(const LineChart& chart);

}  // namespace rbq
