#pragma once

#include <cstdint>
#include <vector>

#include "edss/cdw.hpp"
#include "edss/cohort.hpp"
#include "edss/grouping.hpp"
#include "edss/matrix.hpp"

namespace edss {

// Ground-truth recipe for a synthetic cohort.
struct SimConfig {
  std::size_t n_subjects = 0;
  Distribution initial_distribution;
  // One matrix = homogeneous chain; several = one per interval in order.
  std::vector<TransitionMatrix> matrices;
  // Per-interval dropout probability: one value applies to every interval,
  // otherwise one per interval.  Dropout is decided after each completed
  // visit, independent of state.
  std::vector<double> dropout_hazard{0.0};
  int interval_months = 3;
  int horizon_months = 36;
  std::uint64_t seed = 0;

  void validate(const GroupScheme& scheme) const;  // Errors: InvalidConfig
};

// Walk every subject through the chain and emit visit records using the
// scheme's representative EDSS per group.  Subject k draws from RNG
// substream (seed, k), so output is byte-identical for a given config
// regardless of thread count.  Errors: InvalidConfig.
Cohort simulate_cohort(const SimConfig& config, const GroupScheme& scheme);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::int64_t hits = 0;
  std::int64_t walks = 0;
};

// Fraction of seeded walks from start_group entering target_set within
// horizon_steps.  Errors: EmptyTargetSet, OutOfRange.
MonteCarloEstimate monte_carlo_first_passage(const TransitionMatrix& m, std::size_t start_group,
                                             const std::vector<bool>& target_set,
                                             int horizon_steps, std::int64_t n_walks,
                                             std::uint64_t seed);

// Fraction of walks meeting the group-level CDW definition (trigger within
// horizon_steps, streak held for the confirmation steps, which may run past
// the horizon) — the sampling twin of predicted_cdw_probability.
MonteCarloEstimate monte_carlo_cdw(const TransitionMatrix& m, std::size_t baseline_group,
                                   const CdwRule& rule, const GroupScheme& scheme,
                                   int interval_months, int horizon_steps, std::int64_t n_walks,
                                   std::uint64_t seed,
                                   ThresholdMapping mapping = ThresholdMapping::Representative);

// --- Built-in reference chains -------------------------------------------
// Fixed ground truths for calibration tests; both are 8-group and
// row-stochastic by construction.

// Target long-run occupancy: the published omitted-year stationary column,
// normalized by its own sum (the printed percentages add to 100.1%).
Distribution omitted_year_target();

// Study-entry distribution over the default groups.
Distribution baseline_reference_distribution();

// Tridiagonal birth-death chain in detailed balance with
// omitted_year_target(), so that distribution is its exact stationary law.
TransitionMatrix calibrated_chain();

// High-diagonal chain used for estimator-recovery checks: slow mixing keeps
// per-entry sampling noise small at large n.
TransitionMatrix slow_chain();

// Heavy off-diagonal chain (diagonal 0.3, rest spread nearby) under which
// cycling dominates classification.
TransitionMatrix restless_chain();

}  // namespace edss
