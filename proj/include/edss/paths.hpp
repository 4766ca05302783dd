#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "edss/cohort.hpp"

namespace edss {

enum class PathLabel { Worsening, Improver, Stable, Cycler };

const char* path_name(PathLabel label);

struct PathOptions {
  // Default compares raw EDSS readings against the baseline reading; group
  // mode coarsens both to state groups first (sensitivity analysis).
  bool group_level = false;
  int horizon_months = 36;  // visits after this month are ignored
};

// Label one subject from deviations relative to baseline within the horizon:
// ever-above and never-below -> Worsening; ever-below and never-above ->
// Improver; neither -> Stable; both -> Cycler.
// Errors: NoPostBaselineVisits.
PathLabel classify(const Subject& subject, const GroupScheme& scheme,
                   const PathOptions& opts = {});

struct PathSummary {
  std::array<std::int64_t, 4> counts{};  // indexed by PathLabel order
  std::array<double, 4> proportions{};   // over classifiable subjects
  std::int64_t classified = 0;
  std::int64_t excluded = 0;  // subjects with no post-baseline visit in range

  std::int64_t count(PathLabel l) const { return counts[static_cast<std::size_t>(l)]; }
  double proportion(PathLabel l) const { return proportions[static_cast<std::size_t>(l)]; }
};

/// Errors: EmptyCohort.
PathSummary path_proportions(const Cohort& cohort, const GroupScheme& scheme,
                             const PathOptions& opts = {});

// Per-subject labels in cohort (subject-id) order; nullopt = excluded.
std::vector<std::optional<PathLabel>> classify_all(const Cohort& cohort,
                                                   const GroupScheme& scheme,
                                                   const PathOptions& opts = {});

}  // namespace edss
