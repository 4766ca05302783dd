#include "edss/grouping.hpp"

#include "edss/errors.hpp"

namespace edss {

namespace {

// Smallest valid EDSS strictly above s (the scale has no 0.5, so the
// successor of 0 is 1).
EdssScore next_score(EdssScore s) {
  if (s.twice() == 0) return parse_edss(1.0);
  return parse_edss((s.twice() + 1) / 2.0);
}

}  // namespace

GroupScheme::GroupScheme(const std::vector<EdssScore>& uppers) : uppers_(uppers) {
  if (uppers_.empty()) {
    throw Error(Err::InvalidConfig, "group scheme needs at least one boundary");
  }
  for (std::size_t g = 1; g < uppers_.size(); ++g) {
    if (!(uppers_[g - 1] < uppers_[g])) {
      throw Error(Err::InvalidConfig, "group boundaries must be strictly increasing");
    }
  }
  if (uppers_.back() != parse_edss(10.0)) {
    throw Error(Err::InvalidConfig, "last group boundary must be 10 so groups cover the scale");
  }
  labels_.reserve(uppers_.size());
  reps_.reserve(uppers_.size());
  for (std::size_t g = 0; g < uppers_.size(); ++g) {
    EdssScore lo = lower(g);
    labels_.push_back(lo == uppers_[g] ? format_edss(lo)
                                       : format_edss(lo) + "-" + format_edss(uppers_[g]));
    reps_.push_back(lo);
  }
}

GroupScheme GroupScheme::defaults() {
  std::vector<EdssScore> uppers;
  for (double u : {0.0, 1.5, 2.0, 2.5, 3.0, 3.5, 5.5, 10.0}) uppers.push_back(parse_edss(u));
  GroupScheme scheme(uppers);
  std::vector<EdssScore> reps;
  for (double r : {0.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.5, 6.5}) reps.push_back(parse_edss(r));
  scheme.set_representatives(reps);
  return scheme;
}

int GroupScheme::group_of(EdssScore s) const {
  for (std::size_t g = 0; g < uppers_.size(); ++g) {
    if (s <= uppers_[g]) return static_cast<int>(g);
  }
  // Unreachable: the last boundary is 10 and scores are validated.
  throw Error(Err::OutOfRange, "score above last group boundary");
}

EdssScore GroupScheme::lower(std::size_t g) const {
  if (g == 0) return parse_edss(0.0);
  return next_score(uppers_[g - 1]);
}

void GroupScheme::set_representatives(const std::vector<EdssScore>& reps) {
  if (reps.size() != uppers_.size()) {
    throw Error(Err::InvalidConfig, "need one representative EDSS per group");
  }
  for (std::size_t g = 0; g < reps.size(); ++g) {
    if (group_of(reps[g]) != static_cast<int>(g)) {
      throw Error(Err::InvalidConfig, "representative EDSS " + format_edss(reps[g]) +
                                          " falls outside group " + labels_[g]);
    }
  }
  reps_ = reps;
}

}  // namespace edss
