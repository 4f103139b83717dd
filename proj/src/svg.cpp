#include "rbq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace rbq {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 80;
constexpr double kRight = 190;
constexpr double kTop = 40;
constexpr double kBottom = 60;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const LineChart& chart) {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  for (double x : chart.x) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  bool positive = true;
  for (const auto& s : chart.series) {
    for (double y : s.y) {
      if (!std::isfinite(y)) continue;
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
      positive = positive && y > 0.0;
    }
  }
  if (!std::isfinite(xmin)) xmin = xmax = 0.0;
  if (!std::isfinite(ymin)) ymin = ymax = 1.0;
  const bool log_y = chart.log_y && positive;
  auto ty = [&](double y) { return log_y ? std::log10(y) : y; };
  double lo = ty(ymin);
  double hi = ty(ymax);
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  } else {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }
  if (xmax - xmin < 1e-12) {
    xmin -= 1.0;
    xmax += 1.0;
  }

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return kTop + (hi - ty(y)) / (hi - lo) * plot_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"15\">" << escape(chart.title) << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << num(plot_w)
     << "\" height=\"" << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double x : chart.x) {
    os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + plot_h + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << label(x)
       << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double t = lo + (hi - lo) * k / 4.0;
    const double value = log_y ? std::pow(10.0, t) : t;
    const double y = kTop + (hi - t) / (hi - lo) * plot_h;
    os << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << label(value)
       << "</text>\n";
  }
  os << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 16)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << escape(chart.x_label) << "</text>\n";
  os << "<text x=\"18\" y=\"" << num(kTop + plot_h / 2) << "\" transform=\"rotate(-90 18 "
     << num(kTop + plot_h / 2) << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" "
     << "font-size=\"12\">" << escape(chart.y_label) << (log_y ? " (log scale)" : "")
     << "</text>\n";

  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const Series& series = chart.series[s];
    os << "<polyline fill=\"none\" stroke=\"" << series.color << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < chart.x.size() && i < series.y.size(); ++i) {
      if (!std::isfinite(series.y[i])) continue;
      os << (first ? "" : " ") << num(px(chart.x[i])) << ',' << num(py(series.y[i]));
      first = false;
    }
    os << "\"/>\n";
    const double ly = kTop + 14 + 20.0 * static_cast<double>(s);
    const double lx = kLeft + plot_w + 14;
    os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24)
       << "\" y2=\"" << num(ly) << "\" stroke=\"" << series.color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(series.label)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rbq
