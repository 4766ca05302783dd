#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edss/cdw.hpp"
#include "edss/cohort.hpp"
#include "edss/fit.hpp"
#include "edss/matrix.hpp"
#include "edss/paths.hpp"

namespace edss {

// Render with 12 significant digits (round-trips through parsing losslessly
// at output precision).
std::string fmt_double(double v);

// Input schema: header exactly `subject_id,month,edss`.  Parse failures name
// the 1-based line.  Errors: IoError, ParseError, plus score errors tagged
// with their line.
std::vector<VisitRecord> read_visit_records(const std::string& path);

void write_cohort_csv(const std::string& path, const Cohort& cohort);

// 8 rows x 8 columns of probabilities, no header.
void write_matrix_csv(const std::string& path, const TransitionMatrix& m);
TransitionMatrix read_matrix_csv(const std::string& path);

// `month,chi_sq,df,p_value,n_remaining,observed_0..7,expected_0..7`.
void write_fit_series_csv(const std::string& path, const std::vector<FitPoint>& series);

// `subject_id,onset_month,trigger_edss,threshold_edss,regressed,regression_month`.
void write_events_csv(const std::string& path, const CdwAnalysis& analysis);

/// Table 3 shape: `label,expected,observed,n,t_value,p_value`.
void write_regression_table_csv(const std::string& path, const RegressionTable& table);

// `subject_id,label` (excluded subjects get label `excluded`).
void write_labels_csv(const std::string& path, const Cohort& cohort,
                      const std::vector<std::optional<PathLabel>>& labels);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);  // Errors: IoError

}  // namespace edss
