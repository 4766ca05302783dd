#include "edss/simulate.hpp"

#include <cmath>
#include <string>

#include "edss/parallel.hpp"
#include "edss/rng.hpp"

namespace edss {

namespace {

// Index of the interval starting at step k for a possibly-homogeneous list.
template <typename T>
const T& per_interval(const std::vector<T>& values, int k) {
  return values.size() == 1 ? values[0] : values[static_cast<std::size_t>(k)];
}

std::size_t draw_categorical(SplitMix64& rng, const std::vector<double>& probs) {
  double u = rng.next_double();
  double cum = 0.0;
  for (std::size_t g = 0; g + 1 < probs.size(); ++g) {
    cum += probs[g];
    if (u < cum) return g;
  }
  return probs.size() - 1;
}

std::size_t draw_row(SplitMix64& rng, const TransitionMatrix& m, std::size_t i) {
  double u = rng.next_double();
  double cum = 0.0;
  std::size_t n = m.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    cum += m.at(i, j);
    if (u < cum) return j;
  }
  return n - 1;
}

std::string subject_name(std::size_t k) {
  std::string digits = std::to_string(k);
  return "s" + std::string(7 - digits.size(), '0') + digits;
}

}  // namespace

void SimConfig::validate(const GroupScheme& scheme) const {
  if (n_subjects == 0) throw Error(Err::InvalidConfig, "n_subjects must be at least 1");
  if (interval_months <= 0 || horizon_months <= 0 || horizon_months % interval_months != 0) {
    throw Error(Err::InvalidConfig, "horizon must be a positive multiple of the interval");
  }
  if (initial_distribution.size() != scheme.size()) {
    throw Error(Err::InvalidConfig, "initial distribution size does not match the group scheme");
  }
  initial_distribution.validate(1e-9);
  int steps = horizon_months / interval_months;
  if (matrices.empty() ||
      (matrices.size() != 1 && matrices.size() != static_cast<std::size_t>(steps))) {
    throw Error(Err::InvalidConfig, "need one matrix, or one per interval (" +
                                        std::to_string(steps) + ")");
  }
  for (const TransitionMatrix& m : matrices) {
    if (m.size() != scheme.size()) {
      throw Error(Err::InvalidConfig, "matrix dimension does not match the group scheme");
    }
    m.validate_stochastic(1e-9);
  }
  if (dropout_hazard.empty() ||
      (dropout_hazard.size() != 1 && dropout_hazard.size() != static_cast<std::size_t>(steps))) {
    throw Error(Err::InvalidConfig, "need one dropout hazard, or one per interval");
  }
  for (double h : dropout_hazard) {
    if (!(h >= 0.0) || h >= 1.0) {
      throw Error(Err::InvalidConfig, "dropout hazard must lie in [0, 1)");
    }
  }
}

Cohort simulate_cohort(const SimConfig& config, const GroupScheme& scheme) {
  config.validate(scheme);
  int steps = config.horizon_months / config.interval_months;

  std::vector<Subject> subjects(config.n_subjects);
  parallel_for(config.n_subjects, [&](std::size_t k) {
    // One substream per subject: generation order never matters.
    SplitMix64 rng = SplitMix64::substream(config.seed, k);
    Subject& s = subjects[k];
    s.id = subject_name(k);

    std::size_t g = draw_categorical(rng, config.initial_distribution.probs);
    s.visits.push_back(Visit{0, scheme.representative(g)});
    for (int step = 0; step < steps; ++step) {
      if (rng.next_double() < per_interval(config.dropout_hazard, step)) break;
      g = draw_row(rng, per_interval(config.matrices, step), g);
      s.visits.push_back(Visit{(step + 1) * config.interval_months, scheme.representative(g)});
    }
  });

  Cohort cohort;
  cohort.interval_months = config.interval_months;
  cohort.horizon_months = config.horizon_months;
  cohort.subjects = std::move(subjects);  // generation order is id order
  return cohort;
}

MonteCarloEstimate monte_carlo_first_passage(const TransitionMatrix& m, std::size_t start_group,
                                             const std::vector<bool>& target_set,
                                             int horizon_steps, std::int64_t n_walks,
                                             std::uint64_t seed) {
  if (n_walks < 1) throw Error(Err::OutOfRange, "need at least one walk");
  if (target_set.size() != m.size() || start_group >= m.size() || horizon_steps < 0) {
    throw Error(Err::OutOfRange, "bad start group, target set, or horizon");
  }
  bool any = false;
  for (bool b : target_set) any = any || b;
  if (!any) throw Error(Err::EmptyTargetSet, "Monte Carlo target set is empty");

  std::vector<std::uint8_t> hit(static_cast<std::size_t>(n_walks), 0);
  parallel_for(static_cast<std::size_t>(n_walks), [&](std::size_t w) {
    SplitMix64 rng = SplitMix64::substream(seed, w);
    std::size_t g = start_group;
    if (target_set[g]) {
      hit[w] = 1;
      return;
    }
    for (int step = 0; step < horizon_steps; ++step) {
      g = draw_row(rng, m, g);
      if (target_set[g]) {
        hit[w] = 1;
        return;
      }
    }
  });

  MonteCarloEstimate out;
  out.walks = n_walks;
  for (std::uint8_t h : hit) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(n_walks);
  out.standard_error =
      std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n_walks));
  return out;
}

MonteCarloEstimate monte_carlo_cdw(const TransitionMatrix& m, std::size_t baseline_group,
                                   const CdwRule& rule, const GroupScheme& scheme,
                                   int interval_months, int horizon_steps, std::int64_t n_walks,
                                   std::uint64_t seed, ThresholdMapping mapping) {
  if (n_walks < 1) throw Error(Err::OutOfRange, "need at least one walk");
  if (baseline_group >= m.size() || horizon_steps < 0 || interval_months <= 0) {
    throw Error(Err::OutOfRange, "bad baseline group, horizon, or interval");
  }
  EdssScore threshold = cdw_threshold(scheme.representative(baseline_group), rule).edss;
  std::vector<bool> above = at_or_above_set(threshold, scheme, mapping);
  bool any = false;
  for (bool b : above) any = any || b;

  MonteCarloEstimate out;
  out.walks = n_walks;
  if (!any) return out;  // threshold unreachable on this chain

  int c = (rule.confirmation_months + interval_months - 1) / interval_months;
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(n_walks), 0);
  parallel_for(static_cast<std::size_t>(n_walks), [&](std::size_t w) {
    SplitMix64 rng = SplitMix64::substream(seed, w);
    std::size_t g = baseline_group;
    int streak = 0;
    // Trigger phase plus confirmation extension, mirroring the augmented
    // chain step for step.
    for (int step = 1; step <= horizon_steps + c; ++step) {
      if (step > horizon_steps && streak == 0) return;  // can no longer trigger
      g = draw_row(rng, m, g);
      if (above[g]) {
        ++streak;
        if (streak >= c + 1) {
          hit[w] = 1;
          return;
        }
      } else {
        streak = 0;
      }
    }
  });

  for (std::uint8_t h : hit) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(n_walks);
  out.standard_error =
      std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n_walks));
  return out;
}

Distribution omitted_year_target() {
  Distribution d;
  d.probs = {0.119, 0.269, 0.226, 0.122, 0.107, 0.056, 0.070, 0.032};
  double sum = 0.0;
  for (double p : d.probs) sum += p;  // printed column adds to 1.001
  for (double& p : d.probs) p /= sum;
  return d;
}

Distribution baseline_reference_distribution() {
  Distribution d;
  d.probs = {0.110, 0.254, 0.254, 0.132, 0.103, 0.072, 0.074, 0.001};
  return d;
}

TransitionMatrix calibrated_chain() {
  // Up-rates chosen to keep every row a valid distribution; down-rates from
  // detailed balance u_i pi_i = d_{i+1} pi_{i+1}, making the target exactly
  // stationary for this tridiagonal chain.
  const std::vector<double> up = {0.10, 0.05, 0.05, 0.07, 0.08, 0.10, 0.10};
  const std::vector<double> pi = {0.119, 0.269, 0.226, 0.122, 0.107, 0.056, 0.070, 0.032};
  std::size_t n = pi.size();
  TransitionMatrix m(n, 0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    double u = i + 1 < n ? up[i] : 0.0;
    double d = i > 0 ? up[i - 1] * pi[i - 1] / pi[i] : 0.0;
    if (i + 1 < n) m.at(i, i + 1) = u;
    if (i > 0) m.at(i, i - 1) = d;
    m.at(i, i) = 1.0 - u - d;
  }
  m.validate_stochastic(1e-12);
  return m;
}

TransitionMatrix slow_chain() {
  const double rows[8][8] = {
      {0.97, 0.02, 0.01, 0, 0, 0, 0, 0},
      {0.02, 0.96, 0.015, 0.005, 0, 0, 0, 0},
      {0.005, 0.015, 0.96, 0.015, 0.005, 0, 0, 0},
      {0, 0.005, 0.01, 0.97, 0.01, 0.005, 0, 0},
      {0, 0, 0.005, 0.01, 0.97, 0.01, 0.005, 0},
      {0, 0, 0, 0.005, 0.005, 0.98, 0.01, 0},
      {0, 0, 0, 0, 0.005, 0.005, 0.98, 0.01},
      {0, 0, 0, 0, 0, 0.005, 0.015, 0.98},
  };
  TransitionMatrix m(8, 0, 3);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = rows[i][j];
  }
  m.validate_stochastic(1e-12);
  return m;
}

TransitionMatrix restless_chain() {
  // Desired offsets -2..+2 with weights 0.1/0.25/0.3/0.25/0.1; mass falling
  // off either end piles onto the nearest valid state.
  const double weights[5] = {0.1, 0.25, 0.3, 0.25, 0.1};
  TransitionMatrix m(8, 0, 3);
  for (int i = 0; i < 8; ++i) {
    for (int off = -2; off <= 2; ++off) {
      int j = i + off;
      if (j < 0) j = 0;
      if (j > 7) j = 7;
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += weights[off + 2];
    }
  }
  m.validate_stochastic(1e-12);
  return m;
}

}  // namespace edss
