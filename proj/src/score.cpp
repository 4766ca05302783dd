#include "edss/score.hpp"

#include <cmath>

namespace edss {

EdssScore parse_edss(double raw) {
  if (!std::isfinite(raw) || raw < 0.0 || raw > 10.0) {
    throw Error(Err::OutOfRange, "EDSS must lie in [0, 10], got " + std::to_string(raw));
  }
  double doubled = raw * 2.0;
  double rounded = std::round(doubled);
  // Half-point grid check with slack for decimal-to-binary noise (e.g. a
  // CSV "4.5" parses to the double nearest 4.5, not 4.5 exactly).
  if (std::fabs(doubled - rounded) > 1e-9) {
    throw Error(Err::NotHalfStep, "EDSS must be a half-point step, got " + std::to_string(raw));
  }
  int twice = static_cast<int>(rounded);
  if (twice == 1) {
    throw Error(Err::InvalidHalf, "0.5 is not on the EDSS scale");
  }
  return EdssScore(twice);
}

std::string format_edss(EdssScore s) {
  int twice = s.twice();
  std::string out = std::to_string(twice / 2);
  if (twice % 2 != 0) out += ".5";
  return out;
}

}  // namespace edss
