#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edss/grouping.hpp"
#include "edss/matrix.hpp"
#include "edss/score.hpp"

namespace edss {

// One raw observation as read from input.
struct VisitRecord {
  std::string subject_id;
  int month = 0;
  EdssScore edss;
};

// A retained, schedule-aligned observation inside a cohort.
struct Visit {
  int month = 0;
  EdssScore edss;
};

struct Subject {
  std::string id;
  std::vector<Visit> visits;  // strictly increasing month, visits[0].month == 0

  EdssScore baseline() const { return visits.front().edss; }
  // Visit at exactly this month, or nullptr.
  const Visit* at_month(int month) const;
  int last_month() const { return visits.back().month; }
};

struct CohortStats {
  std::int64_t dropped_off_schedule = 0;  // month not a multiple of the interval
  std::int64_t dropped_beyond_horizon = 0;
  std::int64_t excluded_no_baseline = 0;  // subjects without a month-0 visit
};

// Validated collection of subjects, ordered by id.
struct Cohort {
  std::vector<Subject> subjects;
  int interval_months = 3;
  int horizon_months = 36;
  CohortStats stats;

  std::size_t size() const { return subjects.size(); }
  int steps() const { return horizon_months / interval_months; }
};

// Build a cohort from raw records: off-schedule and beyond-horizon months are
// dropped (counted), subjects lacking a month-0 visit are excluded (counted),
// duplicate (subject, month) records are an error.  Record order never
// matters.  Errors: DuplicateVisit, EmptyCohort, InvalidConfig.
Cohort build_cohort(const std::vector<VisitRecord>& records, int interval_months = 3,
                    int horizon_months = 36);

// Deterministic disjoint split: subject ids are sorted, shuffled by a
// Fisher-Yates pass driven by the seed, and the first n_validation ids form
// the validation cohort.  Errors: InsufficientSubjects (n_validation >= size).
std::pair<Cohort, Cohort> split_cohort(const Cohort& cohort, std::size_t n_validation,
                                       std::uint64_t seed);

struct CohortSummary {
  std::size_t n = 0;
  std::vector<std::int64_t> baseline_counts;  // per group
  Distribution baseline_distribution;         // month 0
  double mean_baseline_edss = 0.0;
  double sd_baseline_edss = 0.0;  // sample SD (n-1 denominator); 0 when n == 1
  double median_baseline_edss = 0.0;
  double iqr_baseline_edss = 0.0;  // Q3 - Q1, linearly interpolated quantiles
  // retention[k] = subjects whose last visit is at or after month k*interval;
  // non-increasing by construction.
  std::vector<std::int64_t> retention;
};

// Errors: EmptyCohort.
CohortSummary summarize_cohort(const Cohort& cohort, const GroupScheme& scheme);

// Subjects observed at exactly this month, as counts per group and total.
std::vector<std::int64_t> observed_counts_at(const Cohort& cohort, const GroupScheme& scheme,
                                             int month);

// Group distribution of the subjects observed at this month.
// Errors: EmptyCohort (nobody observed then).
Distribution distribution_at(const Cohort& cohort, const GroupScheme& scheme, int month);

}  // namespace edss
