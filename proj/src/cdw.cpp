#include "edss/cdw.hpp"

#include <cmath>

#include "edss/specfun.hpp"

namespace edss {

CdwThreshold cdw_threshold(EdssScore baseline, const CdwRule& rule) {
  double delta;
  if (baseline.twice() == 0) {
    delta = rule.delta_for_zero;
  } else if (baseline.value() >= rule.high_cutoff) {
    delta = rule.delta_high;
  } else {
    delta = rule.delta_mid;
  }
  int twice = baseline.twice() + static_cast<int>(std::llround(delta * 2.0));
  CdwThreshold out;
  if (twice > 20) {
    twice = 20;
    out.clipped = true;
  }
  if (twice == 1) {
    throw Error(Err::InvalidConfig, "threshold schedule lands on 0.5, which is not on the scale");
  }
  out.edss = parse_edss(twice / 2.0);
  return out;
}

std::optional<CdwEvent> detect_cdw(const Subject& subject, const CdwRule& rule,
                                   const GroupScheme& scheme) {
  EdssScore threshold = cdw_threshold(subject.baseline(), rule).edss;
  const std::vector<Visit>& visits = subject.visits;

  for (std::size_t t = 1; t < visits.size(); ++t) {
    if (visits[t].edss < threshold) continue;
    int window_end = visits[t].month + rule.confirmation_months;

    bool window_ok = true;
    const Visit* anchor = nullptr;
    for (std::size_t k = t + 1; k < visits.size(); ++k) {
      if (visits[k].month <= window_end && visits[k].edss < threshold) {
        window_ok = false;
        break;
      }
      if (visits[k].month >= window_end) {
        anchor = &visits[k];
        break;
      }
    }
    if (!window_ok || anchor == nullptr || anchor->edss < threshold) continue;

    CdwEvent event;
    event.subject_id = subject.id;
    event.onset_month = visits[t].month;
    event.trigger_edss = visits[t].edss;
    event.threshold_edss = threshold;
    event.trigger_group = scheme.group_of(visits[t].edss);
    event.anchor_month = anchor->month;
    event.anchor_edss = anchor->edss;
    event.anchor_group = scheme.group_of(anchor->edss);
    event.baseline_edss = subject.baseline();
    event.baseline_group = scheme.group_of(subject.baseline());
    return event;
  }
  return std::nullopt;
}

std::optional<RegressionEvent> detect_regression(const Subject& subject, const CdwEvent& event) {
  for (const Visit& v : subject.visits) {
    if (v.month <= event.onset_month) continue;
    if (v.edss < event.threshold_edss) {
      return RegressionEvent{subject.id, v.month, v.edss};
    }
  }
  return std::nullopt;
}

std::vector<bool> at_or_above_set(EdssScore threshold, const GroupScheme& scheme,
                                  ThresholdMapping mapping) {
  std::vector<bool> set(scheme.size(), false);
  if (mapping == ThresholdMapping::Representative) {
    for (std::size_t g = 0; g < scheme.size(); ++g) {
      set[g] = scheme.representative(g) >= threshold;
    }
  } else {
    // First group whose minimum EDSS reaches the threshold, and everything
    // above it.
    for (std::size_t g = 0; g < scheme.size(); ++g) {
      if (scheme.lower(g) >= threshold) {
        for (std::size_t h = g; h < scheme.size(); ++h) set[h] = true;
        break;
      }
    }
  }
  return set;
}

double first_passage(const TransitionMatrix& m, std::size_t start_group,
                     const std::vector<bool>& target_set, int horizon_steps) {
  std::size_t n = m.size();
  if (target_set.size() != n) {
    throw Error(Err::DimensionMismatch, "target set size does not match the matrix");
  }
  if (start_group >= n || horizon_steps < 0) {
    throw Error(Err::OutOfRange, "bad start group or horizon");
  }
  bool any_target = false;
  for (bool b : target_set) any_target = any_target || b;
  if (!any_target) throw Error(Err::EmptyTargetSet, "first-passage target set is empty");

  if (target_set[start_group]) return 1.0;

  std::vector<double> mass(n, 0.0);
  mass[start_group] = 1.0;
  std::vector<double> next(n);
  for (int step = 0; step < horizon_steps; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double p = mass[i];
      if (p == 0.0) continue;
      if (target_set[i]) {
        next[i] += p;  // absorbed
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) next[j] += p * m.at(i, j);
    }
    mass.swap(next);
  }
  double reached = 0.0;
  for (std::size_t g = 0; g < n; ++g) {
    if (target_set[g]) reached += mass[g];
  }
  return reached;
}

double predicted_regression_probability(const TransitionMatrix& m, std::size_t baseline_group,
                                        std::size_t cdw_group, int horizon_steps,
                                        const CdwRule& rule, const GroupScheme& scheme,
                                        ThresholdMapping mapping) {
  EdssScore threshold = cdw_threshold(scheme.representative(baseline_group), rule).edss;
  std::vector<bool> above = at_or_above_set(threshold, scheme, mapping);
  std::vector<bool> regression_set(above.size());
  bool any = false;
  for (std::size_t g = 0; g < above.size(); ++g) {
    regression_set[g] = !above[g];
    any = any || regression_set[g];
  }
  if (!any) {
    throw Error(Err::EmptyRegressionSet, "no group lies below the worsening threshold");
  }
  return first_passage(m, cdw_group, regression_set, horizon_steps);
}

double predicted_cdw_probability(const TransitionMatrix& m, std::size_t baseline_group,
                                 int horizon_steps, const CdwRule& rule,
                                 const GroupScheme& scheme, int interval_months,
                                 ThresholdMapping mapping) {
  std::size_t n = m.size();
  if (baseline_group >= n || horizon_steps < 0 || interval_months <= 0) {
    throw Error(Err::OutOfRange, "bad baseline group, horizon, or interval");
  }
  EdssScore threshold = cdw_threshold(scheme.representative(baseline_group), rule).edss;
  std::vector<bool> above = at_or_above_set(threshold, scheme, mapping);
  bool any = false;
  for (bool b : above) any = any || b;
  if (!any) return 0.0;  // nothing on the chain can reach the threshold

  // Confirmation takes this many steps after the trigger visit.
  int c = (rule.confirmation_months + interval_months - 1) / interval_months;

  // Augmented chain over (group, streak) with an absorbing "achieved" cell:
  // streak r = consecutive steps at/above threshold ending now; a streak of
  // c+1 (trigger + c confirmations) achieves CDW.  The trigger must land
  // within horizon_steps; the c confirmation steps may run past the horizon,
  // so walks still mid-streak keep evolving for c extra steps while streak-0
  // walks are frozen.
  std::vector<double> mass(n * static_cast<std::size_t>(c + 1) + 1, 0.0);
  const std::size_t achieved = mass.size() - 1;
  auto idx = [n](std::size_t g, int r) { return static_cast<std::size_t>(r) * n + g; };
  mass[idx(baseline_group, 0)] = 1.0;

  std::vector<double> next(mass.size());
  for (int step = 1; step <= horizon_steps + c; ++step) {
    bool extension = step > horizon_steps;
    std::fill(next.begin(), next.end(), 0.0);
    next[achieved] = mass[achieved];
    for (int r = 0; r <= c; ++r) {
      for (std::size_t g = 0; g < n; ++g) {
        double p = mass[idx(g, r)];
        if (p == 0.0) continue;
        if (extension && r == 0) {
          next[idx(g, 0)] += p;  // frozen: can no longer trigger
          continue;
        }
        for (std::size_t h = 0; h < n; ++h) {
          double q = p * m.at(g, h);
          if (q == 0.0) continue;
          if (above[h]) {
            int streak = r + 1;
            if (streak >= c + 1) {
              next[achieved] += q;
            } else {
              next[idx(h, streak)] += q;
            }
          } else {
            next[idx(h, 0)] += q;
          }
        }
      }
    }
    mass.swap(next);
  }
  return mass[achieved];
}

ProportionTest proportion_test(double p0, double k, double n) {
  if (!(p0 > 0.0) || !(p0 < 1.0)) {
    throw Error(Err::DegenerateExpected, "expected proportion must lie strictly inside (0, 1)");
  }
  if (n < 2.0 || k < 0.0 || k > n) {
    throw Error(Err::OutOfRange, "need 0 <= k <= n and n >= 2");
  }
  double p_hat = k / n;
  double se = std::sqrt(p0 * (1.0 - p0) / n);
  ProportionTest out;
  out.t_value = (p_hat - p0) / se;
  out.p_value = student_t_two_sided(out.t_value, n - 1.0);
  return out;
}

CdwAnalysis detect_cohort_cdw(const Cohort& cohort, const CdwRule& rule,
                              const GroupScheme& scheme) {
  CdwAnalysis analysis;
  for (const Subject& s : cohort.subjects) {
    std::optional<CdwEvent> event = detect_cdw(s, rule, scheme);
    if (!event) continue;
    analysis.regressions.push_back(detect_regression(s, *event));
    analysis.events.push_back(std::move(*event));
  }
  return analysis;
}

namespace {

// Expected regression probability for one event under the options.
double event_expected(const CdwEvent& event, const TransitionMatrix& m, const GroupScheme& scheme,
                      const Cohort& cohort, const RegressionPredictionOptions& opts) {
  std::vector<bool> above = at_or_above_set(event.threshold_edss, scheme, opts.mapping);
  std::vector<bool> regression_set(above.size());
  bool any = false;
  for (std::size_t g = 0; g < above.size(); ++g) {
    regression_set[g] = !above[g];
    any = any || regression_set[g];
  }
  if (!any) throw Error(Err::EmptyRegressionSet, "no group lies below the worsening threshold");

  std::size_t start = static_cast<std::size_t>(opts.start_at_anchor ? event.anchor_group
                                                                    : event.trigger_group);
  int steps;
  if (opts.per_onset_horizon) {
    int from = opts.start_at_anchor ? event.anchor_month : event.onset_month;
    steps = (cohort.horizon_months - from) / cohort.interval_months;
  } else {
    steps = opts.fixed_horizon_steps;
  }
  return first_passage(m, start, regression_set, steps);
}

RegressionRow make_row(const std::string& label, int group,
                       const std::vector<std::size_t>& member_indices, const CdwAnalysis& analysis,
                       const std::vector<double>& expected_per_event) {
  RegressionRow row;
  row.label = label;
  row.group = group;
  double expected_sum = 0.0;
  for (std::size_t e : member_indices) {
    ++row.n_cdw;
    if (analysis.regressions[e].has_value()) ++row.n_regressed;
    expected_sum += expected_per_event[e];
  }
  row.observed = static_cast<double>(row.n_regressed) / static_cast<double>(row.n_cdw);
  row.expected = expected_sum / static_cast<double>(row.n_cdw);
  try {
    ProportionTest test = proportion_test(row.expected, static_cast<double>(row.n_regressed),
                                          static_cast<double>(row.n_cdw));
    row.t_value = test.t_value;
    row.p_value = test.p_value;
  } catch (const Error&) {
    // Degenerate expected value or a single-event row: report proportions
    // without a test.
  }
  return row;
}

}  // namespace

RegressionTable regression_table(const Cohort& cohort, const TransitionMatrix& m,
                                 const CdwRule& rule, const GroupScheme& scheme,
                                 const RegressionPredictionOptions& opts) {
  CdwAnalysis analysis = detect_cohort_cdw(cohort, rule, scheme);
  if (analysis.events.empty()) {
    throw Error(Err::NoCdwEvents, "no subject met the CDW definition");
  }

  std::vector<double> expected_per_event(analysis.events.size());
  for (std::size_t e = 0; e < analysis.events.size(); ++e) {
    expected_per_event[e] = event_expected(analysis.events[e], m, scheme, cohort, opts);
  }

  RegressionTable table;
  for (std::size_t g = 0; g < scheme.size(); ++g) {
    std::vector<std::size_t> members;
    for (std::size_t e = 0; e < analysis.events.size(); ++e) {
      if (analysis.events[e].trigger_group == static_cast<int>(g)) members.push_back(e);
    }
    if (members.empty()) continue;
    table.rows.push_back(
        make_row(scheme.label(g), static_cast<int>(g), members, analysis, expected_per_event));
  }
  if (opts.add_4_45_subrow) {
    // Finer-grained output row for triggers in the lower half of 4-5.5.
    std::vector<std::size_t> members;
    for (std::size_t e = 0; e < analysis.events.size(); ++e) {
      int twice = analysis.events[e].trigger_edss.twice();
      if (twice >= 8 && twice <= 9) members.push_back(e);
    }
    if (!members.empty()) {
      table.rows.push_back(make_row("4-4.5", -1, members, analysis, expected_per_event));
    }
  }

  double expected_sum = 0.0;
  for (std::size_t e = 0; e < analysis.events.size(); ++e) {
    ++table.total_cdw;
    if (analysis.regressions[e].has_value()) ++table.total_regressed;
    expected_sum += expected_per_event[e];
  }
  table.observed_total =
      static_cast<double>(table.total_regressed) / static_cast<double>(table.total_cdw);
  table.expected_total = expected_sum / static_cast<double>(table.total_cdw);
  return table;
}

}  // namespace edss
