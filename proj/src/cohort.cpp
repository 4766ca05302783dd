#include "edss/cohort.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "edss/rng.hpp"

namespace edss {

const Visit* Subject::at_month(int month) const {
  auto it = std::lower_bound(visits.begin(), visits.end(), month,
                             [](const Visit& v, int m) { return v.month < m; });
  if (it != visits.end() && it->month == month) return &*it;
  return nullptr;
}

Cohort build_cohort(const std::vector<VisitRecord>& records, int interval_months,
                    int horizon_months) {
  if (interval_months <= 0 || horizon_months <= 0 || horizon_months % interval_months != 0) {
    throw Error(Err::InvalidConfig, "horizon must be a positive multiple of the interval");
  }
  Cohort cohort;
  cohort.interval_months = interval_months;
  cohort.horizon_months = horizon_months;

  // month -> edss per subject; map keys give the strictly-increasing order
  // and catch duplicates regardless of record order.
  std::map<std::string, std::map<int, EdssScore>> by_subject;
  for (const VisitRecord& r : records) {
    if (r.month < 0) {
      throw Error(Err::OutOfRange, "negative study month for subject " + r.subject_id);
    }
    if (r.month % interval_months != 0) {
      ++cohort.stats.dropped_off_schedule;
      continue;
    }
    if (r.month > horizon_months) {
      ++cohort.stats.dropped_beyond_horizon;
      continue;
    }
    auto [it, inserted] = by_subject[r.subject_id].emplace(r.month, r.edss);
    if (!inserted) {
      throw Error(Err::DuplicateVisit, "subject " + r.subject_id + " has two records at month " +
                                           std::to_string(r.month));
    }
  }

  for (auto& [id, visits] : by_subject) {
    if (visits.find(0) == visits.end()) {
      ++cohort.stats.excluded_no_baseline;
      continue;
    }
    Subject s;
    s.id = id;
    for (auto& [month, edss] : visits) s.visits.push_back(Visit{month, edss});
    cohort.subjects.push_back(std::move(s));
  }

  if (cohort.subjects.empty()) {
    throw Error(Err::EmptyCohort, "no subjects with a month-0 baseline visit");
  }
  return cohort;
}

std::pair<Cohort, Cohort> split_cohort(const Cohort& cohort, std::size_t n_validation,
                                       std::uint64_t seed) {
  if (n_validation >= cohort.size()) {
    throw Error(Err::InsufficientSubjects,
                "validation size " + std::to_string(n_validation) + " leaves no discovery cohort");
  }
  // Subjects are already sorted by id; shuffle index positions.
  std::vector<std::size_t> order(cohort.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  SplitMix64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next() % i);
    std::swap(order[i - 1], order[j]);
  }

  std::vector<bool> in_validation(cohort.size(), false);
  for (std::size_t k = 0; k < n_validation; ++k) in_validation[order[k]] = true;

  Cohort discovery, validation;
  discovery.interval_months = validation.interval_months = cohort.interval_months;
  discovery.horizon_months = validation.horizon_months = cohort.horizon_months;
  for (std::size_t i = 0; i < cohort.size(); ++i) {
    (in_validation[i] ? validation : discovery).subjects.push_back(cohort.subjects[i]);
  }
  return {std::move(discovery), std::move(validation)};
}

namespace {

// Linear interpolation between order statistics on sorted data.
double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.size() == 1) return sorted[0];
  double pos = p * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

CohortSummary summarize_cohort(const Cohort& cohort, const GroupScheme& scheme) {
  if (cohort.subjects.empty()) throw Error(Err::EmptyCohort, "cannot summarize an empty cohort");

  CohortSummary out;
  out.n = cohort.size();
  out.baseline_counts.assign(scheme.size(), 0);

  std::vector<double> baselines;
  baselines.reserve(cohort.size());
  for (const Subject& s : cohort.subjects) {
    ++out.baseline_counts[static_cast<std::size_t>(scheme.group_of(s.baseline()))];
    baselines.push_back(s.baseline().value());
  }

  out.baseline_distribution.month = 0;
  out.baseline_distribution.probs.resize(scheme.size());
  for (std::size_t g = 0; g < scheme.size(); ++g) {
    out.baseline_distribution.probs[g] =
        static_cast<double>(out.baseline_counts[g]) / static_cast<double>(out.n);
  }

  double sum = 0.0;
  for (double b : baselines) sum += b;
  out.mean_baseline_edss = sum / static_cast<double>(out.n);
  if (out.n > 1) {
    double ss = 0.0;
    for (double b : baselines) ss += (b - out.mean_baseline_edss) * (b - out.mean_baseline_edss);
    out.sd_baseline_edss = std::sqrt(ss / static_cast<double>(out.n - 1));
  }
  std::sort(baselines.begin(), baselines.end());
  out.median_baseline_edss = quantile(baselines, 0.5);
  out.iqr_baseline_edss = quantile(baselines, 0.75) - quantile(baselines, 0.25);

  out.retention.resize(static_cast<std::size_t>(cohort.steps()) + 1, 0);
  for (const Subject& s : cohort.subjects) {
    int last_step = s.last_month() / cohort.interval_months;
    for (int k = 0; k <= last_step && k <= cohort.steps(); ++k) ++out.retention[k];
  }
  return out;
}

std::vector<std::int64_t> observed_counts_at(const Cohort& cohort, const GroupScheme& scheme,
                                             int month) {
  std::vector<std::int64_t> counts(scheme.size(), 0);
  for (const Subject& s : cohort.subjects) {
    if (const Visit* v = s.at_month(month)) {
      ++counts[static_cast<std::size_t>(scheme.group_of(v->edss))];
    }
  }
  return counts;
}

Distribution distribution_at(const Cohort& cohort, const GroupScheme& scheme, int month) {
  std::vector<std::int64_t> counts = observed_counts_at(cohort, scheme, month);
  std::int64_t total = 0;
  for (std::int64_t c : counts) total += c;
  if (total == 0) {
    throw Error(Err::EmptyCohort, "no subjects observed at month " + std::to_string(month));
  }
  Distribution d;
  d.month = month;
  d.probs.resize(counts.size());
  for (std::size_t g = 0; g < counts.size(); ++g) {
    d.probs[g] = static_cast<double>(counts[g]) / static_cast<double>(total);
  }
  return d;
}

}  // namespace edss
