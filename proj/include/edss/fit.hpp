#pragma once

#include <cstdint>
#include <vector>

#include "edss/cohort.hpp"
#include "edss/estimation.hpp"
#include "edss/grouping.hpp"
#include "edss/matrix.hpp"

namespace edss {

enum class VariantKind {
  BaselineConstant,    // the from_month distribution, unchanged at every t
  HomogeneousPower,    // from_month distribution x (averaged M)^k
  InhomogeneousChained // from_month distribution chained through interval matrices
};

const char* variant_name(VariantKind kind);
VariantKind parse_variant(const std::string& name);  // Errors: InvalidConfig

struct ModelVariant {
  VariantKind kind = VariantKind::BaselineConstant;
  int from_month = 0;  // 12 for the omit-first-year refit
};

struct FitPoint {
  int month = 0;
  std::vector<std::int64_t> observed_counts;
  std::vector<double> expected_counts;
  std::int64_t n_remaining = 0;
  double chi_sq = 0.0;
  int df = 0;
  double p_value = 1.0;
  // Cells dropped for expected < 1e-9 that still had observations; a nonzero
  // value flags a structural model violation at this month.
  std::int64_t excluded_observed = 0;
};

struct GofOptions {
  // Default: exclude only cells with expected below this floor, reducing df
  // (the study kept all 8 cells and df = 7).
  double exclusion_floor = 1e-9;
  // Conventional sensitivity mode: merge cells with expected < pool_floor
  // into their right neighbor (last cell into its left) before testing.
  bool pool_small_cells = false;
  double pool_floor = 5.0;
};

// Model-expected distribution at month t.  The starting distribution is the
// discovery cohort's observed distribution at variant.from_month (the
// baseline distribution when from_month is 0).
// Errors: MissingIntervalMatrix, OutOfRange (t < from_month or off-schedule).
Distribution expected_distribution(const ModelVariant& variant, const Cohort& discovery,
                                   const GroupScheme& scheme, int t);

// Entrywise d x n_remaining.
std::vector<double> expected_counts(const Distribution& d, std::int64_t n_remaining);

struct GofResult {
  double chi_sq = 0.0;
  int df = 0;
  double p_value = 1.0;
  std::int64_t excluded_observed = 0;
};

// Pearson chi-squared over included cells; df = included - 1; p from the
// upper chi-squared tail.  Errors: DimensionMismatch, AllCellsExcluded.
GofResult chi_squared_gof(const std::vector<std::int64_t>& observed,
                          const std::vector<double>& expected, const GofOptions& opts = {});

// One FitPoint per scheduled month from variant.from_month + interval to the
// horizon.  Observed counts use only validation subjects observed at that
// month; expected counts scale the model distribution by that same count.
std::vector<FitPoint> fit_series(const ModelVariant& variant, const Cohort& discovery,
                                 const Cohort& validation, const GroupScheme& scheme,
                                 const GofOptions& opts = {});

}  // namespace edss
