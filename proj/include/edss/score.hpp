#pragma once

#include <string>

#include "edss/errors.hpp"

namespace edss {

// One EDSS reading.  The scale is {0.0} ∪ {1.0, 1.5, ..., 10.0}: half-point
// steps with no 0.5 (the scale jumps from 0 straight to 1).  Stored as the
// doubled value so equality and ordering are exact integer operations.
class EdssScore {
 public:
  EdssScore() : twice_(0) {}

  double value() const { return twice_ / 2.0; }
  int twice() const { return twice_; }

  friend bool operator==(EdssScore a, EdssScore b) { return a.twice_ == b.twice_; }
  friend bool operator!=(EdssScore a, EdssScore b) { return a.twice_ != b.twice_; }
  friend bool operator<(EdssScore a, EdssScore b) { return a.twice_ < b.twice_; }
  friend bool operator<=(EdssScore a, EdssScore b) { return a.twice_ <= b.twice_; }
  friend bool operator>(EdssScore a, EdssScore b) { return a.twice_ > b.twice_; }
  friend bool operator>=(EdssScore a, EdssScore b) { return a.twice_ >= b.twice_; }

 private:
  friend EdssScore parse_edss(double raw);
  explicit EdssScore(int twice) : twice_(twice) {}
  int twice_;
};

// Validate a raw decimal as an EDSS score.
// Errors: NotHalfStep (2.3), InvalidHalf (0.5), OutOfRange (<0 or >10).
EdssScore parse_edss(double raw);

// Render without trailing zeros: "0", "1.5", "10".
std::string format_edss(EdssScore s);

}  // namespace edss
