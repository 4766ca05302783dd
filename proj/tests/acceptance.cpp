// Acceptance gate: exercises every acceptance criterion and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edss/cdw.hpp"
#include "edss/cohort.hpp"
#include "edss/errors.hpp"
#include "edss/estimation.hpp"
#include "edss/fit.hpp"
#include "edss/grouping.hpp"
#include "edss/paths.hpp"
#include "edss/rng.hpp"
#include "edss/simulate.hpp"
#include "edss/specfun.hpp"

using namespace edss;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

void run(int number, const std::string& name,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(number, name, ok, detail);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Uniform double in [lo, hi).
double uniform(SplitMix64& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.next_double();
}

TransitionMatrix random_stochastic(SplitMix64& rng, std::size_t n, int from, int to,
                                   double floor) {
  TransitionMatrix m(n, from, to);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = floor + rng.next_double();
      sum += m.at(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) /= sum;
  }
  return m;
}

// --- criterion 1 -----------------------------------------------------------

bool table3_reproduction(std::string& detail) {
  struct Row {
    double p0, phat, n, t, p;
  };
  // (expected p0, observed proportion, n, printed t, printed p); successes
  // are taken as phat*n exactly — the printed t-values correspond to the
  // printed proportions, not to whole-subject counts.
  const Row rows[] = {{0.173, 0.0, 43, -2.9991938, 0.0045},
                      {0.232, 0.2791, 50, 0.78900782, 0.4339},
                      {0.256, 0.38, 27, 1.47637648, 0.1519},
                      {0.242, 0.2593, 28, 0.21373854, 0.8324},
                      {0.197, 0.3214, 17, 1.28959683, 0.2155},
                      {0.376, 0.2941, 23, -0.8108894, 0.4261},
                      {0.333, 0.3043, 13, -0.2195677, 0.8299}};
  double max_dt = 0.0, max_dp = 0.0;
  for (const Row& r : rows) {
    ProportionTest got = proportion_test(r.p0, r.phat * r.n, r.n);
    max_dt = std::max(max_dt, std::fabs(got.t_value - r.t));
    max_dp = std::max(max_dp, std::fabs(got.p_value - r.p));
  }
  detail = "7 rows, max |dt| = " + fmt(max_dt) + ", max |dp| = " + fmt(max_dp);
  return max_dt <= 1e-3 && max_dp <= 1e-3;
}

// --- criterion 2 -----------------------------------------------------------

bool chi_squared_tail(std::string& detail) {
  double headline = chi_squared_sf(10.23, 7);
  double fixture = chi_squared_sf(14.067, 7);
  detail = "sf(10.23, 7) = " + fmt(headline) + ", sf(14.067, 7) = " + fmt(fixture);
  return headline > 0.17 && headline < 0.19 && std::fabs(fixture - 0.050) <= 0.001 &&
         headline > 0.05;  // the published claim is "not significant"
}

// --- criterion 3 -----------------------------------------------------------

Subject worked_subject(bool with_month18, double month18_edss) {
  std::vector<VisitRecord> records = {{"w", 0, parse_edss(2.0)},
                                      {"w", 9, parse_edss(4.0)},
                                      {"w", 12, parse_edss(3.0)},
                                      {"w", 15, parse_edss(3.0)}};
  if (with_month18) records.push_back({"w", 18, parse_edss(month18_edss)});
  return build_cohort(records, 3, 36).subjects[0];
}

bool worked_cdw_example(std::string& detail) {
  GroupScheme scheme = GroupScheme::defaults();
  CdwRule rule;

  std::optional<CdwEvent> base = detect_cdw(worked_subject(false, 0), rule, scheme);
  bool onset_ok = base.has_value() && base->onset_month == 9 &&
                  base->threshold_edss.value() == 3.0 && base->trigger_edss.value() == 4.0;

  Subject at_threshold = worked_subject(true, 3.0);
  std::optional<CdwEvent> e1 = detect_cdw(at_threshold, rule, scheme);
  bool no_regress = e1.has_value() && !detect_regression(at_threshold, *e1).has_value();

  Subject below = worked_subject(true, 2.5);
  std::optional<CdwEvent> e2 = detect_cdw(below, rule, scheme);
  std::optional<RegressionEvent> reg =
      e2.has_value() ? detect_regression(below, *e2) : std::nullopt;
  bool regress = reg.has_value() && reg->month == 18 && reg->edss.value() == 2.5;

  detail = "CDW at month 9; EDSS 3 at 18 keeps CDW; EDSS 2.5 at 18 regresses";
  return onset_ok && no_regress && regress;
}

// --- criterion 4 -----------------------------------------------------------

bool estimator_recovery(std::string& detail) {
  // 10% total dropout spread evenly across the 12 intervals.
  const double hazard = 1.0 - std::pow(0.9, 1.0 / 12.0);
  SimConfig config;
  config.n_subjects = 50000;
  config.initial_distribution = baseline_reference_distribution();
  config.matrices = {slow_chain()};
  config.dropout_hazard = {hazard};
  config.seed = 2024;
  GroupScheme scheme = GroupScheme::defaults();
  Cohort cohort = simulate_cohort(config, scheme);

  TransitionMatrix truth = slow_chain();
  std::vector<TransitionMatrix> intervals = all_interval_matrices(cohort, scheme);

  // Per-interval entries on rows with occupancy >= 1000.
  double worst_interval = 0.0;
  std::vector<bool> qualifies(8, true);  // rows at >= 1000 in EVERY interval
  for (const TransitionMatrix& m : intervals) {
    for (std::size_t i = 0; i < 8; ++i) {
      if (m.row_occupancy(i) < 1000) {
        qualifies[i] = false;
        continue;
      }
      for (std::size_t j = 0; j < 8; ++j) {
        worst_interval = std::max(worst_interval, std::fabs(m.at(i, j) - truth.at(i, j)));
      }
    }
  }

  TransitionMatrix averaged = average_matrices(intervals);
  double worst_avg = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!qualifies[i]) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      worst_avg = std::max(worst_avg, std::fabs(averaged.at(i, j) - truth.at(i, j)));
    }
  }

  detail = "max interval error " + fmt(worst_interval) + " (tol 0.01), max averaged error " +
           fmt(worst_avg) + " (tol 0.005) on rows with occupancy >= 1000";
  return worst_interval < 0.01 && worst_avg < 0.005;
}

// --- criterion 5 -----------------------------------------------------------

bool algebraic_identities(std::string& detail) {
  SplitMix64 rng(555000);
  double worst_power = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    TransitionMatrix m = random_stochastic(rng, 8, 0, 3, 0.001);
    for (unsigned k = 1; k <= 12; ++k) {
      std::vector<TransitionMatrix> copies;
      for (unsigned i = 0; i < k; ++i) {
        TransitionMatrix c = m;
        c.from_month = static_cast<int>(3 * i);
        c.to_month = static_cast<int>(3 * i + 3);
        copies.push_back(c);
      }
      TransitionMatrix chained = chain_product(copies);
      TransitionMatrix powered = matrix_power(m, k);
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
          worst_power = std::max(worst_power,
                                 std::fabs(chained.at(i, j) - powered.at(i, j)));
    }
  }

  double worst_mass = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    TransitionMatrix m = random_stochastic(rng, 8, 0, 3, 0.0);
    Distribution d;
    d.probs.resize(8);
    double sum = 0.0;
    for (double& p : d.probs) {
      p = rng.next_double();
      sum += p;
    }
    for (double& p : d.probs) p /= sum;
    Distribution out = propagate(d, m);
    double mass = 0.0;
    for (double p : out.probs) mass += p;
    worst_mass = std::max(worst_mass, std::fabs(mass - 1.0));
  }

  detail = "max |chain - power| = " + fmt(worst_power) + ", max |mass - 1| = " +
           fmt(worst_mass) + " over 1000 cases";
  return worst_power <= 1e-12 && worst_mass <= 1e-12;
}

// --- criterion 6 -----------------------------------------------------------

bool stationary_distributions(std::string& detail) {
  SplitMix64 rng(666000);
  double worst_residual = 0.0, worst_start_gap = 0.0;
  for (int rep = 0; rep < 25; ++rep) {
    // Strictly positive entries: irreducible and aperiodic by construction.
    TransitionMatrix m = random_stochastic(rng, 8, 0, 3, 0.01);
    StationaryResult base = stationary(m);
    if (!base.unique) {
      detail = "uniqueness not certified on a strictly positive chain";
      return false;
    }
    Distribution pi_m = propagate(base.pi, m);
    double residual = 0.0;
    for (std::size_t g = 0; g < 8; ++g) residual += std::fabs(pi_m.probs[g] - base.pi.probs[g]);
    worst_residual = std::max(worst_residual, residual);

    for (std::size_t corner : {std::size_t{0}, std::size_t{7}}) {
      Distribution start;
      start.probs.assign(8, 0.0);
      start.probs[corner] = 1.0;
      StationaryResult again = stationary_from(m, start);
      double gap = 0.0;
      for (std::size_t g = 0; g < 8; ++g) gap += std::fabs(again.pi.probs[g] - base.pi.probs[g]);
      worst_start_gap = std::max(worst_start_gap, gap);
    }
  }

  // 2-state closed form: pi = (q/(p+q), p/(p+q)).
  const double p = 0.3, q = 0.2;
  TransitionMatrix two(2, 0, 3);
  two.at(0, 0) = 1.0 - p;
  two.at(0, 1) = p;
  two.at(1, 0) = q;
  two.at(1, 1) = 1.0 - q;
  StationaryResult two_state = stationary(two, 1e-14, 1000000);
  double closed_err = std::max(std::fabs(two_state.pi.probs[0] - q / (p + q)),
                               std::fabs(two_state.pi.probs[1] - p / (p + q)));

  detail = "max ||piM - pi||_1 = " + fmt(worst_residual) + ", max start-dependence = " +
           fmt(worst_start_gap) + ", 2-state closed-form error = " + fmt(closed_err);
  return worst_residual < 1e-9 && worst_start_gap < 1e-9 && closed_err < 1e-12;
}

// --- criterion 7 -----------------------------------------------------------

// Brute-force P(hit target within horizon): full paths partition the space.
double enumerate_first_passage(const TransitionMatrix& m, std::size_t start,
                               const std::vector<bool>& target, int horizon) {
  if (target[start]) return 1.0;
  std::size_t n = m.size();
  std::size_t combos = 1;
  for (int i = 0; i < horizon; ++i) combos *= n;
  double total = 0.0;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    double prob = 1.0;
    std::size_t prev = start;
    bool hit = false;
    for (int i = 0; i < horizon; ++i) {
      std::size_t cur = c % n;
      c /= n;
      prob *= m.at(prev, cur);
      prev = cur;
      hit = hit || target[cur];
    }
    if (hit) total += prob;
  }
  return total;
}

// Brute-force CDW: a trigger at step t <= horizon with the next c states (the
// confirmation window, allowed past the horizon) all at/above as well.
double enumerate_cdw(const TransitionMatrix& m, std::size_t baseline, int horizon, int c,
                     const std::vector<bool>& above) {
  std::size_t n = m.size();
  int length = horizon + c;
  std::size_t combos = 1;
  for (int i = 0; i < length; ++i) combos *= n;
  double total = 0.0;
  std::vector<std::size_t> path(static_cast<std::size_t>(length));
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t cc = code;
    for (int i = 0; i < length; ++i) {
      path[static_cast<std::size_t>(i)] = cc % n;
      cc /= n;
    }
    double prob = 1.0;
    std::size_t prev = baseline;
    for (int i = 0; i < length; ++i) {
      prob *= m.at(prev, path[static_cast<std::size_t>(i)]);
      prev = path[static_cast<std::size_t>(i)];
    }
    bool achieved = false;
    for (int t = 1; t <= horizon && !achieved; ++t) {
      bool held = true;
      for (int j = t; j <= t + c && held; ++j) {
        held = above[path[static_cast<std::size_t>(j - 1)]];
      }
      achieved = held;
    }
    if (achieved) total += prob;
  }
  return total;
}

bool first_passage_oracles(std::string& detail) {
  // Exact enumeration on a 4-group scheme (0-1.5 | 2-3 | 3.5-5.5 | 6-10).
  GroupScheme small(std::vector<EdssScore>{parse_edss(1.5), parse_edss(3.0),
                                           parse_edss(5.5), parse_edss(10.0)});
  SplitMix64 rng(777000);
  TransitionMatrix m4 = random_stochastic(rng, 4, 0, 3, 0.02);
  CdwRule rule;  // 6-month confirmation -> 2 steps at 3-month intervals

  double worst_exact = 0.0;
  for (std::size_t baseline : {std::size_t{0}, std::size_t{1}, std::size_t{2}}) {
    CdwThreshold thr = cdw_threshold(small.representative(baseline), rule);
    std::vector<bool> above = at_or_above_set(thr.edss, small, ThresholdMapping::Representative);
    bool any = false;
    for (bool b : above) any = any || b;
    std::vector<bool> below(4);
    for (std::size_t g = 0; g < 4; ++g) below[g] = !above[g];

    for (int horizon = 1; horizon <= 4; ++horizon) {
      if (any) {
        double want = enumerate_cdw(m4, baseline, horizon, 2, above);
        double got = predicted_cdw_probability(m4, baseline, horizon, rule, small, 3);
        worst_exact = std::max(worst_exact, std::fabs(got - want));
      }
      for (std::size_t cdw_group = baseline; cdw_group < 4; ++cdw_group) {
        double want = enumerate_first_passage(m4, cdw_group, below, horizon);
        double got = predicted_regression_probability(m4, baseline, cdw_group, horizon, rule,
                                                      small, ThresholdMapping::Representative);
        worst_exact = std::max(worst_exact, std::fabs(got - want));
      }
    }
  }

  // Monte Carlo twins on the 8-group calibrated chain, 100000 walks.
  GroupScheme scheme = GroupScheme::defaults();
  TransitionMatrix m8 = calibrated_chain();
  const std::int64_t walks = 100000;

  double cdw_exact = predicted_cdw_probability(m8, 2, 12, rule, scheme, 3);
  MonteCarloEstimate cdw_mc = monte_carlo_cdw(m8, 2, rule, scheme, 3, 12, walks, 777001);
  double cdw_sigmas = std::fabs(cdw_mc.estimate - cdw_exact) /
                      std::max(cdw_mc.standard_error, 1e-12);

  CdwThreshold thr8 = cdw_threshold(scheme.representative(2), rule);
  std::vector<bool> above8 = at_or_above_set(thr8.edss, scheme, ThresholdMapping::Representative);
  std::vector<bool> below8(8);
  for (std::size_t g = 0; g < 8; ++g) below8[g] = !above8[g];
  double reg_exact = predicted_regression_probability(m8, 2, 4, 10, rule, scheme,
                                                      ThresholdMapping::Representative);
  MonteCarloEstimate reg_mc = monte_carlo_first_passage(m8, 4, below8, 10, walks, 777002);
  double reg_sigmas = std::fabs(reg_mc.estimate - reg_exact) /
                      std::max(reg_mc.standard_error, 1e-12);

  detail = "max |exact - enumerated| = " + fmt(worst_exact) + "; MC deviations " +
           fmt(cdw_sigmas) + " and " + fmt(reg_sigmas) + " SE (limit 3)";
  return worst_exact <= 1e-12 && cdw_sigmas <= 3.0 && reg_sigmas <= 3.0;
}

// --- criterion 8 -----------------------------------------------------------

// Independent naive re-scan: flat booleans over the raw readings.
const char* naive_label(const Subject& s, int horizon_months) {
  int baseline = s.visits.front().edss.twice();
  bool above = false, under = false;
  for (std::size_t v = 1; v < s.visits.size(); ++v) {
    if (s.visits[v].month > horizon_months) continue;
    if (s.visits[v].edss.twice() > baseline) above = true;
    if (s.visits[v].edss.twice() < baseline) under = true;
  }
  if (above && under) return "Cycler";
  if (above) return "Worsening";
  if (under) return "Improver";
  return "Stable";
}

bool classification_partition(std::string& detail) {
  // 10000 random full-schedule trajectories over the whole EDSS ladder.
  SplitMix64 rng(888000);
  std::vector<int> ladder = {0};
  for (int twice = 2; twice <= 20; ++twice) ladder.push_back(twice);

  std::vector<VisitRecord> records;
  for (int k = 0; k < 10000; ++k) {
    char id[16];
    std::snprintf(id, sizeof(id), "r%05d", k);
    for (int month = 0; month <= 36; month += 3) {
      int twice = ladder[static_cast<std::size_t>(rng.next() % ladder.size())];
      records.push_back({id, month, parse_edss(twice / 2.0)});
    }
  }
  Cohort cohort = build_cohort(records, 3, 36);
  GroupScheme scheme = GroupScheme::defaults();

  PathOptions opts;
  std::vector<std::optional<PathLabel>> labels = classify_all(cohort, scheme, opts);
  PathSummary summary = path_proportions(cohort, scheme, opts);

  std::int64_t agree = 0, total = 0;
  for (std::size_t k = 0; k < cohort.subjects.size(); ++k) {
    if (!labels[k]) continue;
    ++total;
    if (std::string(path_name(*labels[k])) ==
        naive_label(cohort.subjects[k], opts.horizon_months)) {
      ++agree;
    }
  }

  std::int64_t counted = 0;
  for (PathLabel l : {PathLabel::Worsening, PathLabel::Improver, PathLabel::Stable,
                      PathLabel::Cycler}) {
    counted += summary.count(l);
  }

  detail = "agreement " + std::to_string(agree) + "/" + std::to_string(total) +
           "; label counts sum to classified (" + std::to_string(counted) + "/" +
           std::to_string(summary.classified) + ")";
  return total == 10000 && agree == total && counted == summary.classified;
}

// --- criterion 9 -----------------------------------------------------------

bool regression_self_consistency(std::string& detail) {
  GroupScheme scheme = GroupScheme::defaults();
  CdwRule rule;

  // Base cohort from the chain calibrated to the published stationary law.
  SimConfig base;
  base.n_subjects = 4000;
  base.initial_distribution = baseline_reference_distribution();
  base.matrices = {calibrated_chain()};
  base.seed = 31415;
  Cohort discovery = simulate_cohort(base, scheme);
  TransitionMatrix fitted = average_matrices(all_interval_matrices(discovery, scheme));

  // Replicates drawn from the fitted matrix itself.
  std::int64_t rows_total = 0, rows_agree = 0;
  std::int64_t cdw_total = 0, regressed_total = 0;
  for (int rep = 0; rep < 20; ++rep) {
    SimConfig config;
    config.n_subjects = 2000;
    config.initial_distribution = baseline_reference_distribution();
    config.matrices = {fitted};
    config.seed = 9000 + static_cast<std::uint64_t>(rep);
    Cohort replicate = simulate_cohort(config, scheme);

    RegressionTable table = regression_table(replicate, fitted, rule, scheme);
    cdw_total += table.total_cdw;
    regressed_total += table.total_regressed;
    for (const RegressionRow& row : table.rows) {
      if (row.group < 0) continue;  // the 4-4.5 refinement is output-only
      ++rows_total;
      double half_width =
          1.96 * std::sqrt(row.expected * (1.0 - row.expected) /
                           static_cast<double>(row.n_cdw));
      if (std::fabs(row.observed - row.expected) <= half_width) ++rows_agree;
    }
  }

  double aggregate =
      static_cast<double>(regressed_total) / static_cast<double>(cdw_total);
  detail = std::to_string(rows_agree) + "/" + std::to_string(rows_total) +
           " rows inside 95% bands; aggregate regression " + fmt(aggregate) +
           " (want 0.15..0.45) over " + std::to_string(cdw_total) + " CDW events";
  return rows_agree * 2 > rows_total && aggregate > 0.15 && aggregate < 0.45;
}

// --- criterion 10 ----------------------------------------------------------

bool headline_statement(std::string& detail) {
  std::printf(
      "      The published headline cohort numbers — 8.1%% worsening / 5.6%% improver /\n"
      "      86.0%% cycler / <1%% stable, and chi-squared = 10.23 at month 48 — are\n"
      "      measurements of the non-public CombiRx dataset and cannot be reproduced\n"
      "      here.  They are covered by the property-based substitutes (criteria 4-9)\n"
      "      and by this qualitative check on a heavy-off-diagonal chain:\n");

  SimConfig config;
  config.n_subjects = 2000;
  config.initial_distribution = baseline_reference_distribution();
  config.matrices = {restless_chain()};
  config.seed = 27183;
  GroupScheme scheme = GroupScheme::defaults();
  Cohort cohort = simulate_cohort(config, scheme);
  PathSummary summary = path_proportions(cohort, scheme);

  PathLabel modal = PathLabel::Worsening;
  for (PathLabel l : {PathLabel::Improver, PathLabel::Stable, PathLabel::Cycler}) {
    if (summary.count(l) > summary.count(modal)) modal = l;
  }
  detail = std::string("modal label under a restless chain is ") + path_name(modal) + " (" +
           fmt(summary.proportion(PathLabel::Cycler)) + " of subjects)";
  return modal == PathLabel::Cycler;
}

}  // namespace

int main() {
  run(1, "Table 3 t and p values (fractional successes)", table3_reproduction);
  run(2, "chi-squared tail probabilities", chi_squared_tail);
  run(3, "worked CDW example", worked_cdw_example);
  run(4, "estimator recovery at n = 50000", estimator_recovery);
  run(5, "chain product / matrix power / mass preservation", algebraic_identities);
  run(6, "stationary distributions", stationary_distributions);
  run(7, "first-passage oracle agreement", first_passage_oracles);
  run(8, "classification partition and naive re-scan", classification_partition);
  run(9, "regression table self-consistency", regression_self_consistency);
  run(10, "headline numbers not reproducible (stated); restless chain cycles",
      headline_statement);

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
