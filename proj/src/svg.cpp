#include "edss/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "edss/errors.hpp"

namespace edss {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 780.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 370.0;

const char* kPalette[] = {"#2a7f3f", "#3558a0", "#b3532b", "#7a4a9e", "#6b6b6b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Round the axis ceiling up to 1/2/5 x 10^k so tick labels stay tidy.
double nice_ceiling(double v) {
  if (v <= 0.0) return 1.0;
  double mag = std::pow(10.0, std::floor(std::log10(v)));
  for (double step : {1.0, 2.0, 5.0, 10.0}) {
    if (v <= step * mag * (1.0 + 1e-12)) return step * mag;
  }
  return 10.0 * mag;
}

std::string text(double x, double y, const std::string& s, const std::string& anchor,
                 int size = 13) {
  std::ostringstream out;
  out << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << size
      << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
  return out.str();
}

std::string open_svg(const std::string& title) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
      << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(kHeight) << "\">\n"
      << "<rect width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
      << "\" fill=\"white\"/>\n"
      << text(kWidth / 2.0, 28.0, title, "middle", 16);
  return out.str();
}

std::string axes(double y_max, const std::string& x_label, const std::string& y_label) {
  std::ostringstream out;
  out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(kRight)
      << "\" y2=\"" << num(kBottom) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(kBottom) << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    double frac = static_cast<double>(k) / 4.0;
    double y = kBottom - frac * (kBottom - kTop);
    out << "<line x1=\"" << num(kLeft - 4.0) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n"
        << text(kLeft - 8.0, y + 4.0, num(frac * y_max), "end", 11);
  }
  out << text((kLeft + kRight) / 2.0, kHeight - 10.0, x_label, "middle")
      << "<text x=\"18\" y=\"" << num((kTop + kBottom) / 2.0)
      << "\" font-size=\"13\" font-family=\"sans-serif\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 "
      << num((kTop + kBottom) / 2.0) << ")\">" << y_label << "</text>\n";
  return out.str();
}

std::string legend(const std::vector<SvgSeries>& series) {
  std::ostringstream out;
  double x = kLeft + 10.0;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % 5];
    out << "<rect x=\"" << num(x) << "\" y=\"" << num(kTop - 14.0)
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n"
        << text(x + 16.0, kTop - 4.0, series[s].name, "start", 12);
    x += 24.0 + 7.5 * static_cast<double>(series[s].name.size());
  }
  return out.str();
}

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& xs,
                           const std::vector<SvgSeries>& series) {
  if (xs.empty() || series.empty()) {
    throw Error(Err::EmptyInput, "line chart needs at least one point and series");
  }
  double y_max = 0.0;
  for (const SvgSeries& s : series) {
    if (s.values.size() != xs.size()) {
      throw Error(Err::DimensionMismatch, "series length does not match x positions");
    }
    for (double v : s.values) y_max = std::max(y_max, v);
  }
  y_max = nice_ceiling(y_max);
  double x_min = xs.front();
  double x_max = xs.back();
  double span = x_max > x_min ? x_max - x_min : 1.0;

  std::ostringstream out;
  out << open_svg(title) << axes(y_max, x_label, y_label) << legend(series);
  for (double x : xs) {
    double px = kLeft + (x - x_min) / span * (kRight - kLeft);
    out << "<line x1=\"" << num(px) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(px)
        << "\" y2=\"" << num(kBottom + 4.0) << "\" stroke=\"black\"/>\n"
        << text(px, kBottom + 18.0, num(x), "middle", 11);
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    std::ostringstream points;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      double px = kLeft + (xs[k] - x_min) / span * (kRight - kLeft);
      double py = kBottom - series[s].values[k] / y_max * (kBottom - kTop);
      if (k > 0) points << ' ';
      points << num(px) << ',' << num(py);
    }
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[s % 5]
        << "\" stroke-width=\"2\" points=\"" << points.str() << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_grouped_bars(const std::string& title, const std::vector<std::string>& categories,
                             const std::vector<SvgSeries>& series) {
  if (categories.empty() || series.empty()) {
    throw Error(Err::EmptyInput, "bar chart needs at least one category and series");
  }
  double y_max = 0.0;
  for (const SvgSeries& s : series) {
    if (s.values.size() != categories.size()) {
      throw Error(Err::DimensionMismatch, "series length does not match categories");
    }
    for (double v : s.values) y_max = std::max(y_max, v);
  }
  y_max = nice_ceiling(y_max);

  std::ostringstream out;
  out << open_svg(title) << axes(y_max, "", "proportion") << legend(series);
  double cluster = (kRight - kLeft) / static_cast<double>(categories.size());
  double bar = cluster * 0.8 / static_cast<double>(series.size());
  for (std::size_t c = 0; c < categories.size(); ++c) {
    double x0 = kLeft + cluster * (static_cast<double>(c) + 0.1);
    for (std::size_t s = 0; s < series.size(); ++s) {
      double h = series[s].values[c] / y_max * (kBottom - kTop);
      out << "<rect x=\"" << num(x0 + bar * static_cast<double>(s)) << "\" y=\""
          << num(kBottom - h) << "\" width=\"" << num(bar * 0.92) << "\" height=\"" << num(h)
          << "\" fill=\"" << kPalette[s % 5] << "\"/>\n";
    }
    out << text(x0 + cluster * 0.4, kBottom + 18.0, categories[c], "middle", 11);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace edss
