#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edss/cohort.hpp"
#include "edss/grouping.hpp"
#include "edss/matrix.hpp"

namespace edss {

// Worsening-threshold schedule: how far above baseline an EDSS reading must
// be to count as progression, by baseline stratum.
struct CdwRule {
  double delta_for_zero = 1.5;  // baseline 0
  double delta_mid = 1.0;       // baseline 1.0 .. high_cutoff-0.5
  double delta_high = 0.5;      // baseline >= high_cutoff
  double high_cutoff = 5.5;
  int confirmation_months = 6;
};

struct CdwThreshold {
  EdssScore edss;
  bool clipped = false;  // schedule ran past 10 and was clipped
};

// Errors: InvalidConfig (schedule lands on the nonexistent 0.5 step).
CdwThreshold cdw_threshold(EdssScore baseline, const CdwRule& rule);

struct CdwEvent {
  std::string subject_id;
  int onset_month = 0;
  EdssScore trigger_edss;
  EdssScore threshold_edss;
  int trigger_group = 0;
  // The confirming visit: first visit at month >= onset + confirmation.
  int anchor_month = 0;
  EdssScore anchor_edss;
  int anchor_group = 0;
  EdssScore baseline_edss;
  int baseline_group = 0;
};

struct RegressionEvent {
  std::string subject_id;
  int month = 0;
  EdssScore edss;
};

// Earliest visit at/above threshold such that every observed visit in
// (onset, onset + confirmation] stays at/above it AND the first visit at
// month >= onset + confirmation exists and is itself at/above it.
std::optional<CdwEvent> detect_cdw(const Subject& subject, const CdwRule& rule,
                                   const GroupScheme& scheme);

// First visit after onset with EDSS strictly below the event threshold.
std::optional<RegressionEvent> detect_regression(const Subject& subject, const CdwEvent& event);

// How a raw-EDSS threshold coarsens onto the group chain.
enum class ThresholdMapping {
  // at/above set = groups whose representative EDSS >= threshold. The
  // default: exactly consistent with detection on simulated cohorts, which
  // emit representative scores.
  Representative,
  // at/above set = groups from the first one whose minimum EDSS >= threshold.
  Bounds,
};

// Groups counting as at/above the threshold under the mapping (may be empty).
std::vector<bool> at_or_above_set(EdssScore threshold, const GroupScheme& scheme,
                                  ThresholdMapping mapping);

// Probability a walk from start_group enters the target set within
// horizon_steps transitions (the set is made absorbing and the point mass
// propagated).  A start inside the set returns 1.
// Errors: EmptyTargetSet, OutOfRange.
double first_passage(const TransitionMatrix& m, std::size_t start_group,
                     const std::vector<bool>& target_set, int horizon_steps);

// First passage into the regression set {groups below the threshold implied
// by baseline_group's representative EDSS}, from cdw_group.
// Errors: EmptyRegressionSet.
double predicted_regression_probability(const TransitionMatrix& m, std::size_t baseline_group,
                                        std::size_t cdw_group, int horizon_steps,
                                        const CdwRule& rule, const GroupScheme& scheme,
                                        ThresholdMapping mapping = ThresholdMapping::Representative);

// Probability that a group-level walk from baseline_group triggers (reaches
// the at/above set) within horizon_steps and stays in the set for
// ceil(confirmation/interval) further steps, confirmation steps being allowed
// to run past the horizon.  Exact propagation on the state x streak chain.
double predicted_cdw_probability(const TransitionMatrix& m, std::size_t baseline_group,
                                 int horizon_steps, const CdwRule& rule,
                                 const GroupScheme& scheme, int interval_months,
                                 ThresholdMapping mapping = ThresholdMapping::Representative);

// One-sample test of an observed proportion against p0: p_hat = k/n,
// t = (p_hat - p0) / sqrt(p0 (1-p0) / n), two-sided p from Student t with
// n-1 degrees of freedom.  k may be fractional (a proportion times n).
// Errors: DegenerateExpected (p0 outside (0,1)), OutOfRange (n < 2, k < 0).
struct ProportionTest {
  double t_value = 0.0;
  double p_value = 1.0;
};
ProportionTest proportion_test(double p0, double k, double n);

// All CDW events in a cohort with their regression outcomes, subject order.
struct CdwAnalysis {
  std::vector<CdwEvent> events;
  std::vector<std::optional<RegressionEvent>> regressions;  // parallel to events
};
CdwAnalysis detect_cohort_cdw(const Cohort& cohort, const CdwRule& rule,
                              const GroupScheme& scheme);

struct RegressionPredictionOptions {
  ThresholdMapping mapping = ThresholdMapping::Representative;
  // Walk start: the confirming (anchor) visit's group — the last state the
  // subject was in on achieving CDW — or the trigger visit's group.
  bool start_at_anchor = true;
  // Remaining horizon per event (anchor to study end) or one fixed count.
  bool per_onset_horizon = true;
  int fixed_horizon_steps = 10;
  bool add_4_45_subrow = true;  // Table-3-style finer output row
};

struct RegressionRow {
  std::string label;
  int group = -1;  // -1 for the 4-4.5 output-only subrow
  std::int64_t n_cdw = 0;
  std::int64_t n_regressed = 0;
  double observed = 0.0;
  double expected = 0.0;
  std::optional<double> t_value;  // absent when the test is degenerate
  std::optional<double> p_value;
};

struct RegressionTable {
  std::vector<RegressionRow> rows;
  std::int64_t total_cdw = 0;
  std::int64_t total_regressed = 0;
  double observed_total = 0.0;
  double expected_total = 0.0;
};

// Per-trigger-group regression table: observed regression proportions from
// the cohort, expected from first-passage propagation on M, averaged over
// that row's events.  Errors: NoCdwEvents.
RegressionTable regression_table(const Cohort& cohort, const TransitionMatrix& m,
                                 const CdwRule& rule, const GroupScheme& scheme,
                                 const RegressionPredictionOptions& opts = {});

}  // namespace edss
