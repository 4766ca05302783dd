#pragma once

#include <string>
#include <vector>

namespace edss {

// Minimal deterministic SVG charts: fixed canvas, no timestamps or random
// ids, so identical inputs give byte-identical files.

struct SvgSeries {
  std::string name;
  std::vector<double> values;
};

// Line chart of y values over x positions (one polyline per series).
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<double>& xs,
                           const std::vector<SvgSeries>& series);

/// Grouped bars: one cluster per category, one bar per series within it.
std::string svg_grouped_bars(const std::string& title, const std::vector<std::string>& categories,
                             const std::vector<SvgSeries>& series);

}  // namespace edss
