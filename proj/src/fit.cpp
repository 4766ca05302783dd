#include "edss/fit.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "edss/specfun.hpp"

namespace edss {

const char* variant_name(VariantKind kind) {
  switch (kind) {
    case VariantKind::BaselineConstant: return "baseline";
    case VariantKind::HomogeneousPower: return "homogeneous";
    case VariantKind::InhomogeneousChained: return "inhomogeneous";
  }
  return "unknown";
}

VariantKind parse_variant(const std::string& name) {
  if (name == "baseline") return VariantKind::BaselineConstant;
  if (name == "homogeneous") return VariantKind::HomogeneousPower;
  if (name == "inhomogeneous") return VariantKind::InhomogeneousChained;
  throw Error(Err::InvalidConfig,
              "unknown variant '" + name + "' (baseline | homogeneous | inhomogeneous)");
}

namespace {

// Everything expensive (passes over the discovery cohort) hoisted out of the
// per-month loop, so a series costs one estimation pass, not one per month.
struct ModelContext {
  ModelVariant variant;
  int interval = 0;
  Distribution start;
  std::optional<TransitionMatrix> averaged;      // HomogeneousPower
  std::vector<TransitionMatrix> intervals;       // InhomogeneousChained

  Distribution dist_at(int t) const {
    if (t < variant.from_month || t % interval != 0) {
      throw Error(Err::OutOfRange, "month " + std::to_string(t) +
                                       " not predictable from month " +
                                       std::to_string(variant.from_month));
    }
    if (t == variant.from_month) return start;
    unsigned k = static_cast<unsigned>((t - variant.from_month) / interval);
    switch (variant.kind) {
      case VariantKind::BaselineConstant: {
        Distribution d = start;
        d.month = t;
        return d;
      }
      case VariantKind::HomogeneousPower:
        return propagate(start, matrix_power(*averaged, k));
      case VariantKind::InhomogeneousChained: {
        if (k > intervals.size()) {
          throw Error(Err::MissingIntervalMatrix,
                      "no interval matrix covers month " + std::to_string(t - interval));
        }
        std::vector<TransitionMatrix> chain(intervals.begin(),
                                            intervals.begin() + static_cast<std::ptrdiff_t>(k));
        return propagate(start, chain_product(chain));
      }
    }
    throw Error(Err::InvalidConfig, "unhandled variant");
  }
};

ModelContext build_context(const ModelVariant& variant, const Cohort& discovery,
                           const GroupScheme& scheme) {
  if (variant.from_month % discovery.interval_months != 0) {
    throw Error(Err::InvalidConfig, "from_month must be a multiple of the interval");
  }
  ModelContext ctx;
  ctx.variant = variant;
  ctx.interval = discovery.interval_months;
  ctx.start = distribution_at(discovery, scheme, variant.from_month);
  if (variant.kind == VariantKind::HomogeneousPower) {
    std::vector<TransitionMatrix> intervals =
        all_interval_matrices(discovery, scheme, variant.from_month);
    if (intervals.empty()) {
      throw Error(Err::MissingIntervalMatrix, "no intervals available for averaging");
    }
    TransitionMatrix avg = average_matrices(intervals);
    // Re-span as a single step so powers line up month arithmetic.
    avg.from_month = variant.from_month;
    avg.to_month = variant.from_month + ctx.interval;
    ctx.averaged = std::move(avg);
  } else if (variant.kind == VariantKind::InhomogeneousChained) {
    ctx.intervals = all_interval_matrices(discovery, scheme, variant.from_month);
  }
  return ctx;
}

}  // namespace

Distribution expected_distribution(const ModelVariant& variant, const Cohort& discovery,
                                   const GroupScheme& scheme, int t) {
  return build_context(variant, discovery, scheme).dist_at(t);
}

std::vector<double> expected_counts(const Distribution& d, std::int64_t n_remaining) {
  std::vector<double> out(d.size());
  for (std::size_t g = 0; g < d.size(); ++g) {
    out[g] = d.probs[g] * static_cast<double>(n_remaining);
  }
  return out;
}

GofResult chi_squared_gof(const std::vector<std::int64_t>& observed,
                          const std::vector<double>& expected, const GofOptions& opts) {
  if (observed.size() != expected.size()) {
    throw Error(Err::DimensionMismatch, "observed and expected lengths differ");
  }

  std::vector<double> obs, exp;
  GofResult result;
  for (std::size_t g = 0; g < observed.size(); ++g) {
    if (expected[g] < opts.exclusion_floor) {
      result.excluded_observed += observed[g];
      continue;
    }
    obs.push_back(static_cast<double>(observed[g]));
    exp.push_back(expected[g]);
  }
  if (opts.pool_small_cells) {
    // Merge any under-floor cell into its right neighbor; the last cell
    // folds left.  Deterministic left-to-right sweep.
    for (std::size_t g = 0; g + 1 < exp.size();) {
      if (exp[g] < opts.pool_floor) {
        exp[g + 1] += exp[g];
        obs[g + 1] += obs[g];
        exp.erase(exp.begin() + static_cast<std::ptrdiff_t>(g));
        obs.erase(obs.begin() + static_cast<std::ptrdiff_t>(g));
      } else {
        ++g;
      }
    }
    while (exp.size() > 1 && exp.back() < opts.pool_floor) {
      exp[exp.size() - 2] += exp.back();
      obs[obs.size() - 2] += obs.back();
      exp.pop_back();
      obs.pop_back();
    }
  }
  if (exp.empty()) {
    throw Error(Err::AllCellsExcluded, "every cell fell below the expected-count floor");
  }

  for (std::size_t g = 0; g < exp.size(); ++g) {
    double diff = obs[g] - exp[g];
    result.chi_sq += diff * diff / exp[g];
  }
  result.df = static_cast<int>(exp.size()) - 1;
  result.p_value = chi_squared_sf(result.chi_sq, result.df);
  return result;
}

std::vector<FitPoint> fit_series(const ModelVariant& variant, const Cohort& discovery,
                                 const Cohort& validation, const GroupScheme& scheme,
                                 const GofOptions& opts) {
  if (discovery.interval_months != validation.interval_months) {
    throw Error(Err::DimensionMismatch, "cohorts have different visit intervals");
  }
  ModelContext ctx = build_context(variant, discovery, scheme);

  std::vector<FitPoint> series;
  int interval = validation.interval_months;
  for (int t = variant.from_month + interval; t <= validation.horizon_months; t += interval) {
    FitPoint point;
    point.month = t;
    point.observed_counts = observed_counts_at(validation, scheme, t);
    for (std::int64_t c : point.observed_counts) point.n_remaining += c;

    Distribution d = ctx.dist_at(t);
    point.expected_counts = expected_counts(d, point.n_remaining);

    if (point.n_remaining == 0) {
      // Nothing observed this month: a vacuous fit, not an error mid-series.
      point.chi_sq = 0.0;
      point.df = 0;
      point.p_value = 1.0;
    } else {
      GofResult gof = chi_squared_gof(point.observed_counts, point.expected_counts, opts);
      point.chi_sq = gof.chi_sq;
      point.df = gof.df;
      point.p_value = gof.p_value;
      point.excluded_observed = gof.excluded_observed;
    }
    series.push_back(std::move(point));
  }
  return series;
}

}  // namespace edss
