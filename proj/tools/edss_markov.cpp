// Command-line toolkit for Markov-chain analysis of longitudinal EDSS data:
// estimate transition matrices, score model fit, classify trajectories,
// quantify confirmed disability worsening and regression, and simulate
// synthetic cohorts.
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edss/cdw.hpp"
#include "edss/cohort.hpp"
#include "edss/config.hpp"
#include "edss/csv.hpp"
#include "edss/estimation.hpp"
#include "edss/fit.hpp"
#include "edss/paths.hpp"
#include "edss/report.hpp"
#include "edss/simulate.hpp"
#include "edss/svg.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using edss::Config;
using edss::Err;
using edss::Error;

struct CommonArgs {
  std::string config_path;
  std::string input_path;
  std::string validation_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> variant;
  std::optional<int> from_month;
};

// Everything derived from the config file plus command-line overrides.
struct Settings {
  Config config;
  edss::GroupScheme scheme = edss::GroupScheme::defaults();
  int interval_months = 3;
  int horizon_months = 36;
  std::uint64_t seed = 0;
  edss::CdwRule rule;
  edss::GofOptions gof;
  bool average_pooled = false;
  edss::ThresholdMapping mapping = edss::ThresholdMapping::Representative;
  edss::RegressionPredictionOptions regression;
  edss::PathOptions paths;
  std::string variant_name;  // empty = all variants
  int from_month = 0;
};

std::vector<edss::EdssScore> parse_scores(const std::vector<double>& raw) {
  std::vector<edss::EdssScore> out;
  out.reserve(raw.size());
  for (double v : raw) out.push_back(edss::parse_edss(v));
  return out;
}

Settings load_settings(const CommonArgs& args) {
  Settings s;
  if (!args.config_path.empty()) s.config = Config::from_file(args.config_path);
  const Config& c = s.config;

  s.interval_months = static_cast<int>(c.get_int("interval_months", 3));
  s.horizon_months = static_cast<int>(c.get_int("horizon_months", 36));

  std::vector<double> bounds =
      c.get_doubles("group_boundaries", {0.0, 1.5, 2.0, 2.5, 3.0, 3.5, 5.5, 10.0});
  s.scheme = edss::GroupScheme(parse_scores(bounds));
  std::vector<double> default_reps;
  if (bounds == std::vector<double>{0.0, 1.5, 2.0, 2.5, 3.0, 3.5, 5.5, 10.0}) {
    default_reps = {0.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.5, 6.5};
  } else {
    for (std::size_t g = 0; g < s.scheme.size(); ++g) {
      default_reps.push_back(s.scheme.lower(g).value());
    }
  }
  s.scheme.set_representatives(parse_scores(c.get_doubles("representative_edss", default_reps)));

  s.seed = args.seed ? *args.seed : static_cast<std::uint64_t>(c.get_int("seed", 0));

  std::vector<double> rule = c.get_doubles("cdw_rule", {1.5, 1.0, 0.5, 5.5});
  if (rule.size() != 4) {
    throw Error(Err::InvalidConfig,
                "cdw_rule wants 4 numbers: delta_for_zero,delta_mid,delta_high,high_cutoff");
  }
  s.rule.delta_for_zero = rule[0];
  s.rule.delta_mid = rule[1];
  s.rule.delta_high = rule[2];
  s.rule.high_cutoff = rule[3];
  s.rule.confirmation_months = static_cast<int>(c.get_int("confirmation_months", 6));

  s.gof.exclusion_floor = c.get_double("exclusion_floor", 1e-9);
  s.gof.pool_small_cells = c.get_bool("pool_small_cells", false);
  s.gof.pool_floor = c.get_double("pool_floor", 5.0);

  std::string avg = c.get_string("average_mode", "unweighted");
  if (avg != "unweighted" && avg != "pooled") {
    throw Error(Err::InvalidConfig, "average_mode must be 'unweighted' or 'pooled'");
  }
  s.average_pooled = avg == "pooled";

  std::string mapping = c.get_string("threshold_mapping", "representative");
  if (mapping == "representative") {
    s.mapping = edss::ThresholdMapping::Representative;
  } else if (mapping == "bounds") {
    s.mapping = edss::ThresholdMapping::Bounds;
  } else {
    throw Error(Err::InvalidConfig, "threshold_mapping must be 'representative' or 'bounds'");
  }
  s.regression.mapping = s.mapping;

  std::string start = c.get_string("regression_start", "anchor");
  if (start != "anchor" && start != "trigger") {
    throw Error(Err::InvalidConfig, "regression_start must be 'anchor' or 'trigger'");
  }
  s.regression.start_at_anchor = start == "anchor";
  std::string horizon_mode = c.get_string("regression_horizon", "per_onset");
  if (horizon_mode != "per_onset" && horizon_mode != "fixed") {
    throw Error(Err::InvalidConfig, "regression_horizon must be 'per_onset' or 'fixed'");
  }
  s.regression.per_onset_horizon = horizon_mode == "per_onset";
  s.regression.fixed_horizon_steps = static_cast<int>(c.get_int("regression_horizon_steps", 10));
  s.regression.add_4_45_subrow = c.get_bool("subrow_4_45", true);

  std::string level = c.get_string("classification_level", "raw");
  if (level != "raw" && level != "group") {
    throw Error(Err::InvalidConfig, "classification_level must be 'raw' or 'group'");
  }
  s.paths.group_level = level == "group";
  s.paths.horizon_months = s.horizon_months;

  s.variant_name = args.variant ? *args.variant : c.get_string("variant", "");
  if (!s.variant_name.empty()) edss::parse_variant(s.variant_name);  // validate early
  s.from_month = args.from_month ? *args.from_month : static_cast<int>(c.get_int("from_month", 0));
  return s;
}

edss::Cohort load_cohort(const std::string& path, const Settings& s) {
  return edss::build_cohort(edss::read_visit_records(path), s.interval_months, s.horizon_months);
}

std::filesystem::path out_file(const CommonArgs& args, const std::string& name) {
  return std::filesystem::path(args.out_dir) / name;
}

void require_input(const CommonArgs& args) {
  if (args.input_path.empty()) throw Error(Err::InvalidConfig, "--input is required");
}

nlohmann::ordered_json matrix_json(const edss::TransitionMatrix& m) {
  nlohmann::ordered_json j;
  j["from_month"] = m.from_month;
  j["to_month"] = m.to_month;
  auto entries = nlohmann::ordered_json::array();
  auto counts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t jcol = 0; jcol < m.size(); ++jcol) row.push_back(m.at(i, jcol));
    entries.push_back(row);
    if (m.has_counts()) {
      auto crow = nlohmann::ordered_json::array();
      for (std::size_t jcol = 0; jcol < m.size(); ++jcol) {
        crow.push_back(m.counts[i * m.size() + jcol]);
      }
      counts.push_back(crow);
    }
  }
  j["entries"] = entries;
  if (m.has_counts()) j["counts"] = counts;
  j["zero_rows"] = m.zero_rows;
  return j;
}

void add_cohort_warnings(edss::RunManifest& manifest, const edss::Cohort& cohort) {
  const edss::CohortStats& st = cohort.stats;
  if (st.dropped_off_schedule > 0) {
    manifest.add_warning(std::to_string(st.dropped_off_schedule) +
                         " off-schedule visit(s) dropped");
  }
  if (st.dropped_beyond_horizon > 0) {
    manifest.add_warning(std::to_string(st.dropped_beyond_horizon) +
                         " visit(s) beyond the horizon dropped");
  }
  if (st.excluded_no_baseline > 0) {
    manifest.add_warning(std::to_string(st.excluded_no_baseline) +
                         " subject(s) without a month-0 visit excluded");
  }
}

std::string two_digit(int value) {
  std::string s = std::to_string(value);
  return s.size() < 2 ? "0" + s : s;
}

// --- subcommands ----------------------------------------------------------

int cmd_estimate(const CommonArgs& args) {
  Settings s = load_settings(args);
  s.config.reject_unknown_keys();
  require_input(args);
  std::filesystem::create_directories(args.out_dir);

  edss::Cohort cohort = load_cohort(args.input_path, s);
  std::vector<edss::TransitionMatrix> intervals =
      edss::all_interval_matrices(cohort, s.scheme, 0);

  edss::RunManifest manifest(kVersion, "estimate", s.seed);
  manifest.set_config(s.config);
  manifest.add_input(args.input_path);
  add_cohort_warnings(manifest, cohort);

  nlohmann::ordered_json report;
  report["n_subjects"] = cohort.size();
  report["groups"] = s.scheme.labels();
  report["intervals"] = nlohmann::ordered_json::array();

  for (const edss::TransitionMatrix& m : intervals) {
    std::string name =
        "matrix_m" + two_digit(m.from_month) + "_m" + two_digit(m.to_month) + ".csv";
    edss::write_matrix_csv(out_file(args, name).string(), m);
    manifest.add_artifact(name);
    report["intervals"].push_back(matrix_json(m));
    for (std::size_t row : m.zero_rows) {
      manifest.add_warning("interval " + std::to_string(m.from_month) + ".." +
                           std::to_string(m.to_month) + ": no transitions from group " +
                           s.scheme.label(row) + "; row kept as a self-loop");
    }
  }

  edss::TransitionMatrix averaged =
      s.average_pooled ? edss::average_matrices_pooled(intervals) : edss::average_matrices(intervals);
  edss::write_matrix_csv(out_file(args, "averaged.csv").string(), averaged);
  manifest.add_artifact("averaged.csv");
  report["averaged"] = matrix_json(averaged);
  report["average_mode"] = s.average_pooled ? "pooled" : "unweighted";

  report["chained"] = nlohmann::ordered_json::array();
  for (std::size_t k = 2; k <= intervals.size(); ++k) {
    std::vector<edss::TransitionMatrix> prefix(intervals.begin(),
                                               intervals.begin() + static_cast<std::ptrdiff_t>(k));
    edss::TransitionMatrix chained = edss::chain_product(prefix);
    std::string name =
        "chained_m" + two_digit(chained.from_month) + "_m" + two_digit(chained.to_month) + ".csv";
    edss::write_matrix_csv(out_file(args, name).string(), chained);
    manifest.add_artifact(name);
    report["chained"].push_back(matrix_json(chained));
  }

  edss::write_text_file(out_file(args, "estimate.json").string(), report.dump(2) + "\n");
  manifest.add_artifact("estimate.json");
  manifest.write(out_file(args, "manifest.json").string());
  std::cout << "estimated " << intervals.size() << " interval matrices from " << cohort.size()
            << " subjects\n";
  return 0;
}

int cmd_fit(const CommonArgs& args) {
  Settings s = load_settings(args);
  s.config.reject_unknown_keys();
  require_input(args);
  if (args.validation_path.empty()) {
    throw Error(Err::InvalidConfig, "--validation is required for fit");
  }
  std::filesystem::create_directories(args.out_dir);

  edss::Cohort discovery = load_cohort(args.input_path, s);
  edss::Cohort validation = load_cohort(args.validation_path, s);

  edss::RunManifest manifest(kVersion, "fit", s.seed);
  manifest.set_config(s.config);
  manifest.add_input(args.input_path);
  manifest.add_input(args.validation_path);
  add_cohort_warnings(manifest, discovery);

  std::vector<edss::VariantKind> kinds;
  if (s.variant_name.empty()) {
    kinds = {edss::VariantKind::BaselineConstant, edss::VariantKind::HomogeneousPower,
             edss::VariantKind::InhomogeneousChained};
  } else {
    kinds = {edss::parse_variant(s.variant_name)};
  }

  nlohmann::ordered_json report;
  report["from_month"] = s.from_month;
  report["variants"] = nlohmann::ordered_json::array();

  for (edss::VariantKind kind : kinds) {
    edss::ModelVariant variant{kind, s.from_month};
    std::vector<edss::FitPoint> series = edss::fit_series(variant, discovery, validation,
                                                          s.scheme, s.gof);
    std::string stem = std::string("fit_") + edss::variant_name(kind) +
                       (s.from_month != 0 ? "_from" + std::to_string(s.from_month) : "");
    edss::write_fit_series_csv(out_file(args, stem + ".csv").string(), series);
    manifest.add_artifact(stem + ".csv");

    std::vector<double> months, chis;
    bool plausible = true;
    for (const edss::FitPoint& p : series) {
      months.push_back(p.month);
      chis.push_back(p.chi_sq);
      plausible = plausible && p.p_value > 0.001;
    }
    std::string svg = edss::svg_line_chart(
        std::string("Goodness of fit over time (") + edss::variant_name(kind) + ")", "month",
        "chi-squared", months, {{edss::variant_name(kind), chis}});
    edss::write_text_file(out_file(args, stem + ".svg").string(), svg);
    manifest.add_artifact(stem + ".svg");

    nlohmann::ordered_json vj;
    vj["variant"] = edss::variant_name(kind);
    vj["plausible"] = plausible;
    auto points = nlohmann::ordered_json::array();
    for (const edss::FitPoint& p : series) {
      points.push_back({{"month", p.month},
                        {"chi_sq", p.chi_sq},
                        {"df", p.df},
                        {"p_value", p.p_value},
                        {"n_remaining", p.n_remaining}});
    }
    vj["points"] = points;
    report["variants"].push_back(vj);
    std::cout << edss::variant_name(kind) << ": fit "
              << (plausible ? "plausible" : "rejected at p <= 0.001") << "\n";
  }

  edss::write_text_file(out_file(args, "fit.json").string(), report.dump(2) + "\n");
  manifest.add_artifact("fit.json");
  manifest.write(out_file(args, "manifest.json").string());
  return 0;
}

int cmd_classify(const CommonArgs& args) {
  Settings s = load_settings(args);
  s.config.reject_unknown_keys();
  require_input(args);
  std::filesystem::create_directories(args.out_dir);

  edss::Cohort cohort = load_cohort(args.input_path, s);
  std::vector<std::optional<edss::PathLabel>> labels =
      edss::classify_all(cohort, s.scheme, s.paths);
  edss::PathSummary summary = edss::path_proportions(cohort, s.scheme, s.paths);

  edss::write_labels_csv(out_file(args, "labels.csv").string(), cohort, labels);

  nlohmann::ordered_json report;
  report["n_subjects"] = cohort.size();
  report["classified"] = summary.classified;
  report["excluded"] = summary.excluded;
  for (edss::PathLabel l : {edss::PathLabel::Worsening, edss::PathLabel::Improver,
                            edss::PathLabel::Stable, edss::PathLabel::Cycler}) {
    report["counts"][edss::path_name(l)] = summary.count(l);
    report["proportions"][edss::path_name(l)] = summary.proportion(l);
  }
  edss::write_text_file(out_file(args, "classify.json").string(), report.dump(2) + "\n");

  edss::RunManifest manifest(kVersion, "classify", s.seed);
  manifest.set_config(s.config);
  manifest.add_input(args.input_path);
  add_cohort_warnings(manifest, cohort);
  if (summary.excluded > 0) {
    manifest.add_warning(std::to_string(summary.excluded) +
                         " subject(s) with no post-baseline visits left unclassified");
  }
  manifest.add_artifact("labels.csv");
  manifest.add_artifact("classify.json");
  manifest.write(out_file(args, "manifest.json").string());

  std::cout << "classified " << summary.classified << " subjects ("
            << summary.excluded << " excluded)\n";
  return 0;
}

int cmd_cdw(const CommonArgs& args) {
  Settings s = load_settings(args);
  s.config.reject_unknown_keys();
  require_input(args);
  std::filesystem::create_directories(args.out_dir);

  edss::Cohort cohort = load_cohort(args.input_path, s);
  std::vector<edss::TransitionMatrix> intervals =
      edss::all_interval_matrices(cohort, s.scheme, 0);
  edss::TransitionMatrix averaged =
      s.average_pooled ? edss::average_matrices_pooled(intervals) : edss::average_matrices(intervals);

  edss::CdwAnalysis analysis = edss::detect_cohort_cdw(cohort, s.rule, s.scheme);
  edss::write_events_csv(out_file(args, "events.csv").string(), analysis);

  edss::RegressionTable table =
      edss::regression_table(cohort, averaged, s.rule, s.scheme, s.regression);
  edss::write_regression_table_csv(out_file(args, "regression_table.csv").string(), table);

  // Chart rows: CDW share of events, predicted regression, observed.
  std::vector<std::string> categories;
  edss::SvgSeries cdw_share{"share of CDW events", {}};
  edss::SvgSeries predicted{"predicted regression", {}};
  edss::SvgSeries observed{"observed regression", {}};
  std::ostringstream backing;
  backing << "label,n_cdw,share_of_events,predicted_regression,observed_regression\n";
  for (const edss::RegressionRow& row : table.rows) {
    if (row.group < 0) continue;  // keep the chart to the chain's own groups
    categories.push_back(row.label);
    double share = static_cast<double>(row.n_cdw) / static_cast<double>(table.total_cdw);
    cdw_share.values.push_back(share);
    predicted.values.push_back(row.expected);
    observed.values.push_back(row.observed);
    backing << row.label << ',' << row.n_cdw << ',' << edss::fmt_double(share) << ','
            << edss::fmt_double(row.expected) << ',' << edss::fmt_double(row.observed) << '\n';
  }
  edss::write_text_file(out_file(args, "regression_bars.csv").string(), backing.str());
  std::string svg = edss::svg_grouped_bars("CDW and regression by trigger group", categories,
                                           {cdw_share, predicted, observed});
  edss::write_text_file(out_file(args, "regression_bars.svg").string(), svg);

  nlohmann::ordered_json report;
  report["n_subjects"] = cohort.size();
  report["cdw_events"] = table.total_cdw;
  report["regressed"] = table.total_regressed;
  report["observed_regression"] = table.observed_total;
  report["expected_regression"] = table.expected_total;
  edss::write_text_file(out_file(args, "cdw.json").string(), report.dump(2) + "\n");

  edss::RunManifest manifest(kVersion, "cdw", s.seed);
  manifest.set_config(s.config);
  manifest.add_input(args.input_path);
  add_cohort_warnings(manifest, cohort);
  for (const char* name : {"events.csv", "regression_table.csv", "regression_bars.csv",
                           "regression_bars.svg", "cdw.json"}) {
    manifest.add_artifact(name);
  }
  manifest.write(out_file(args, "manifest.json").string());

  std::cout << table.total_cdw << " CDW events, " << table.total_regressed << " regressed ("
            << edss::fmt_double(table.observed_total) << " observed vs "
            << edss::fmt_double(table.expected_total) << " predicted)\n";
  return 0;
}

int cmd_simulate(const CommonArgs& args) {
  Settings s = load_settings(args);
  const Config& c = s.config;

  edss::SimConfig sim;
  sim.interval_months = s.interval_months;
  sim.horizon_months = s.horizon_months;
  sim.seed = s.seed;
  sim.n_subjects = static_cast<std::size_t>(c.get_int("n_subjects", 0));

  std::string initial = c.get_string("initial_distribution", "reference");
  if (initial == "reference") {
    sim.initial_distribution = edss::baseline_reference_distribution();
  } else if (initial == "omitted_year") {
    sim.initial_distribution = edss::omitted_year_target();
  } else {
    sim.initial_distribution.probs = c.get_doubles("initial_distribution", {});
  }

  std::string matrix = c.get_string("matrix", "");
  std::string matrix_csv = c.get_string("matrix_csv", "");
  if (!matrix.empty() && !matrix_csv.empty()) {
    throw Error(Err::InvalidConfig, "give either matrix or matrix_csv, not both");
  }
  if (matrix == "calibrated" || matrix.empty()) {
    sim.matrices = {edss::calibrated_chain()};
  } else if (matrix == "slow") {
    sim.matrices = {edss::slow_chain()};
  } else if (matrix == "restless") {
    sim.matrices = {edss::restless_chain()};
  } else {
    throw Error(Err::InvalidConfig, "matrix must be calibrated | slow | restless");
  }
  if (!matrix_csv.empty()) sim.matrices = {edss::read_matrix_csv(matrix_csv)};

  sim.dropout_hazard = c.get_doubles("dropout_hazard", {0.0});
  c.reject_unknown_keys();

  std::filesystem::create_directories(args.out_dir);
  edss::Cohort cohort = edss::simulate_cohort(sim, s.scheme);
  edss::write_cohort_csv(out_file(args, "cohort.csv").string(), cohort);

  edss::RunManifest manifest(kVersion, "simulate", s.seed);
  manifest.set_config(s.config);
  if (!matrix_csv.empty()) manifest.add_input(matrix_csv);
  manifest.add_artifact("cohort.csv");
  manifest.write(out_file(args, "manifest.json").string());

  std::cout << "simulated " << cohort.size() << " subjects\n";
  return 0;
}

int cmd_report(const CommonArgs& args) {
  Settings s = load_settings(args);
  s.config.reject_unknown_keys();
  require_input(args);
  std::filesystem::create_directories(args.out_dir);

  edss::Cohort cohort = load_cohort(args.input_path, s);
  edss::CohortSummary summary = edss::summarize_cohort(cohort, s.scheme);

  nlohmann::ordered_json report;
  report["n_subjects"] = summary.n;
  report["baseline_mean_edss"] = summary.mean_baseline_edss;
  report["baseline_sd_edss"] = summary.sd_baseline_edss;
  report["baseline_median_edss"] = summary.median_baseline_edss;
  report["baseline_iqr_edss"] = summary.iqr_baseline_edss;
  for (std::size_t g = 0; g < s.scheme.size(); ++g) {
    report["baseline_distribution"][s.scheme.label(g)] = summary.baseline_distribution.probs[g];
    report["baseline_counts"][s.scheme.label(g)] = summary.baseline_counts[g];
  }
  auto retention = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < summary.retention.size(); ++k) {
    retention.push_back({{"month", static_cast<int>(k) * cohort.interval_months},
                         {"subjects", summary.retention[k]}});
  }
  report["retention"] = retention;
  edss::write_text_file(out_file(args, "summary.json").string(), report.dump(2) + "\n");

  edss::RunManifest manifest(kVersion, "report", s.seed);
  manifest.set_config(s.config);
  manifest.add_input(args.input_path);
  add_cohort_warnings(manifest, cohort);
  manifest.add_artifact("summary.json");
  manifest.write(out_file(args, "manifest.json").string());

  std::cout << "summarized " << summary.n << " subjects\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov-chain toolkit for longitudinal EDSS disability data"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonArgs args;
  int (*handler)(const CommonArgs&) = nullptr;

  auto add_common = [&](CLI::App* sub, bool need_input, bool need_validation) {
    sub->add_option("--config", args.config_path, "flat key = value configuration file");
    auto* input =
        sub->add_option("--input", args.input_path, "input cohort CSV (subject_id,month,edss)");
    if (need_input) input->required();
    auto* validation = sub->add_option("--validation", args.validation_path,
                                       "validation cohort CSV");
    if (need_validation) validation->required();
    sub->add_option("--out", args.out_dir, "output directory (default: current)");
    sub->add_option("--seed", args.seed, "RNG seed (overrides config)");
    sub->add_option("--variant", args.variant,
                    "model variant: baseline | homogeneous | inhomogeneous");
    sub->add_option("--from-month", args.from_month,
                    "first modeled month (e.g. 12 to skip the first year)");
  };

  struct SubSpec {
    const char* name;
    const char* help;
    int (*fn)(const CommonArgs&);
    bool need_input;
    bool need_validation;
  };
  const SubSpec specs[] = {
      {"estimate", "estimate interval, averaged, and chained transition matrices", cmd_estimate,
       true, false},
      {"fit", "chi-squared fit series for the model variants", cmd_fit, true, true},
      {"classify", "label each subject Worsening / Improver / Stable / Cycler", cmd_classify,
       true, false},
      {"cdw", "detect confirmed disability worsening and regression", cmd_cdw, true, false},
      {"simulate", "generate a synthetic cohort from a known chain", cmd_simulate, false, false},
      {"report", "descriptive cohort summary", cmd_report, true, false},
  };
  for (const SubSpec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    add_common(sub, spec.need_input, spec.need_validation);
    sub->callback([&handler, &spec] { handler = spec.fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  try {
    return handler(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_status();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
