#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "edss/score.hpp"

namespace edss {

// Partition of the EDSS scale into ordered state groups.  A scheme is given
// by its upper boundaries (inclusive); group g covers scores in
// (upper[g-1], upper[g]].  The default is the 8-group scheme
// 0 | 1-1.5 | 2 | 2.5 | 3 | 3.5 | 4-5.5 | 6-10.
class GroupScheme {
 public:
  // uppers must be strictly increasing valid EDSS values ending at 10.
  explicit GroupScheme(const std::vector<EdssScore>& uppers);

  static GroupScheme defaults();

  std::size_t size() const { return uppers_.size(); }
  int group_of(EdssScore s) const;
  const std::string& label(std::size_t g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }

  EdssScore lower(std::size_t g) const;               // smallest score in group g
  EdssScore upper(std::size_t g) const { return uppers_[g]; }

  // One concrete score inside each group, used when a group-level walk has
  // to be rendered back onto the raw scale (simulation, thresholds).
  // Defaults to (0, 1.5, 2, 2.5, 3, 3.5, 4.5, 6.5) under the default scheme.
  EdssScore representative(std::size_t g) const { return reps_[g]; }
  void set_representatives(const std::vector<EdssScore>& reps);

 private:
  std::vector<EdssScore> uppers_;
  std::vector<std::string> labels_;
  std::vector<EdssScore> reps_;
};

}  // namespace edss
