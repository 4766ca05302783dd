#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "edss/config.hpp"
#include "edss/csv.hpp"
#include "edss/errors.hpp"
#include "edss/report.hpp"
#include "edss/simulate.hpp"
#include "edss/svg.hpp"

using namespace edss;

namespace {

// Per-process scratch directory; doctest runs cases serially within a binary.
std::filesystem::path scratch() {
  static std::filesystem::path dir = [] {
    std::filesystem::path d =
        std::filesystem::temp_directory_path() /
        ("edss_io_test_" + std::to_string(static_cast<long>(::getpid())));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string tmp_file(const std::string& name) { return (scratch() / name).string(); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

// ---------------------------------------------------------------------------
// Number formatting
// ---------------------------------------------------------------------------

TEST_CASE("fmt_double uses 12 significant digits and round-trips") {
  CHECK(fmt_double(0.0) == "0");
  CHECK(fmt_double(1.0) == "1");
  CHECK(fmt_double(0.5) == "0.5");
  CHECK(fmt_double(1.0 / 3.0) == "0.333333333333");
  for (double v : {0.1234567890123, 3.9e-11, 123456.789, 1e-30, 0.9999999999999}) {
    double back = std::strtod(fmt_double(v).c_str(), nullptr);
    CHECK(std::fabs(back - v) <= 1e-11 * std::fabs(v));
  }
}

// ---------------------------------------------------------------------------
// Visit-record CSV
// ---------------------------------------------------------------------------

TEST_CASE("cohort CSV round-trips exactly") {
  std::vector<VisitRecord> records = {
      {"s1", 0, parse_edss(0.0)},   {"s1", 3, parse_edss(1.5)},
      {"s1", 6, parse_edss(10.0)},  {"s2", 0, parse_edss(2.5)},
      {"s2", 3, parse_edss(2.5)},   {"s2", 9, parse_edss(4.0)}};
  Cohort cohort = build_cohort(records, 3, 36);
  std::string path = tmp_file("roundtrip.csv");
  write_cohort_csv(path, cohort);

  Cohort again = build_cohort(read_visit_records(path), 3, 36);
  REQUIRE(again.size() == cohort.size());
  for (std::size_t i = 0; i < cohort.size(); ++i) {
    const Subject& a = cohort.subjects[i];
    const Subject& b = again.subjects[i];
    CHECK(a.id == b.id);
    REQUIRE(a.visits.size() == b.visits.size());
    for (std::size_t v = 0; v < a.visits.size(); ++v) {
      CHECK(a.visits[v].month == b.visits[v].month);
      CHECK(a.visits[v].edss.twice() == b.visits[v].edss.twice());
    }
  }
}

TEST_CASE("the header line is enforced verbatim") {
  std::string path = tmp_file("badheader.csv");
  write_text_file(path, "id,month,edss\ns1,0,2\n");
  try {
    read_visit_records(path);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ParseError);
    CHECK(contains(e.what(), "line 1"));
    CHECK(contains(e.what(), "subject_id,month,edss"));
  }
}

TEST_CASE("an empty input file is its own error") {
  std::string path = tmp_file("empty.csv");
  write_text_file(path, "");
  try {
    read_visit_records(path);
    FAIL("expected an empty-input error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::EmptyInput);
    CHECK(contains(e.what(), "is empty"));
  }
}

TEST_CASE("parse failures name their 1-based line") {
  std::string path = tmp_file("badedss.csv");
  write_text_file(path, "subject_id,month,edss\ns1,0,2\ns1,3,2.3\n");
  try {
    read_visit_records(path);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ParseError);
    CHECK(contains(e.what(), path + " line 3"));
    CHECK(contains(e.what(), "2.3"));
  }

  write_text_file(path, "subject_id,month,edss\ns1,abc,2\n");
  try {
    read_visit_records(path);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "line 2"));
    CHECK(contains(e.what(), "bad month 'abc'"));
  }

  write_text_file(path, "subject_id,month,edss\ns1,0\n");
  try {
    read_visit_records(path);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(contains(e.what(), "expected 3 fields"));
  }

  write_text_file(path, "subject_id,month,edss\n,0,2\n");
  CHECK_THROWS_AS(read_visit_records(path), Error);
}

TEST_CASE("blank lines and surrounding whitespace are tolerated") {
  std::string path = tmp_file("spacey.csv");
  write_text_file(path, "subject_id,month,edss\n\n  s1 , 0 , 2.5 \n\ns1,3,3\n");
  std::vector<VisitRecord> records = read_visit_records(path);
  REQUIRE(records.size() == 2);
  CHECK(records[0].subject_id == "s1");
  CHECK(records[0].edss.value() == doctest::Approx(2.5));
  CHECK(records[1].month == 3);
}

TEST_CASE("reading a missing file is an io error") {
  try {
    read_visit_records(tmp_file("no_such_file.csv"));
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::IoError);
  }
  CHECK_THROWS_AS(read_text_file(tmp_file("also_missing.txt")), Error);
}

// ---------------------------------------------------------------------------
// Matrix CSV
// ---------------------------------------------------------------------------

TEST_CASE("matrix CSV round-trips at output precision") {
  TransitionMatrix m = calibrated_chain();
  std::string path = tmp_file("matrix.csv");
  write_matrix_csv(path, m);
  TransitionMatrix back = read_matrix_csv(path);
  REQUIRE(back.size() == 8);
  back.validate_stochastic(1e-9);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(back.at(i, j) == doctest::Approx(m.at(i, j)).epsilon(1e-10));
}

TEST_CASE("ragged matrix input is rejected") {
  std::string path = tmp_file("ragged.csv");
  write_text_file(path, "0.5,0.5\n1.0\n");
  CHECK_THROWS_AS(read_matrix_csv(path), Error);
}

// ---------------------------------------------------------------------------
// Config files
// ---------------------------------------------------------------------------

TEST_CASE("config parses key = value with comments") {
  Config c = Config::from_text(
      "# simulation recipe\n"
      "n_subjects = 1200\n"
      "seed = 42   # trailing comment\n"
      "hazard = 0.01, 0.02,0.03\n"
      "label = base run\n"
      "verbose = yes\n");
  CHECK(c.get_int("n_subjects", 0) == 1200);
  CHECK(c.get_int("seed", 0) == 42);
  std::vector<double> h = c.get_doubles("hazard", {});
  REQUIRE(h.size() == 3);
  CHECK(h[1] == doctest::Approx(0.02));
  CHECK(c.get_string("label", "") == "base run");
  CHECK(c.get_bool("verbose", false));
  CHECK(c.get_bool("absent", true));   // fallback
  CHECK(c.get_double("absent2", 2.5) == doctest::Approx(2.5));
  CHECK(c.has("label"));
  CHECK_FALSE(c.has("absent"));
  CHECK_NOTHROW(c.reject_unknown_keys());  // everything touched above
}

TEST_CASE("config rejects duplicates, bad syntax, and unknown keys") {
  try {
    Config::from_text("a = 1\na = 2\n", "recipe.cfg");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ParseError);
    CHECK(contains(e.what(), "recipe.cfg line 2"));
    CHECK(contains(e.what(), "duplicate key 'a'"));
  }

  CHECK_THROWS_AS(Config::from_text("just words\n"), Error);
  CHECK_THROWS_AS(Config::from_text("= 3\n"), Error);

  Config c = Config::from_text("known = 1\nmisspelled = 2\n");
  CHECK(c.get_int("known", 0) == 1);
  try {
    c.reject_unknown_keys();
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == Err::InvalidConfig);
    CHECK(contains(e.what(), "unknown config key 'misspelled'"));
  }

  Config b = Config::from_text("flag = maybe\n");
  CHECK_THROWS_AS(b.get_bool("flag", false), Error);

  CHECK_THROWS_AS(Config::from_file(tmp_file("missing.cfg")), Error);
}

// ---------------------------------------------------------------------------
// SVG charts
// ---------------------------------------------------------------------------

TEST_CASE("svg output is deterministic and self-contained") {
  std::vector<double> xs = {3, 6, 9, 12};
  std::vector<SvgSeries> series = {{"observed", {1.0, 2.0, 1.5, 3.0}},
                                   {"expected", {1.1, 1.9, 1.6, 2.8}}};
  std::string a = svg_line_chart("fit", "month", "chi-squared", xs, series);
  std::string b = svg_line_chart("fit", "month", "chi-squared", xs, series);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(contains(a, "</svg>"));
  CHECK(contains(a, "fit"));
  CHECK_FALSE(contains(a, "timestamp"));

  std::string bars = svg_grouped_bars("groups", {"0", "1-1.5"},
                                      {{"counts", {10.0, 20.0}}});
  CHECK(bars.rfind("<svg", 0) == 0);
  CHECK(contains(bars, "</svg>"));
  CHECK(bars == svg_grouped_bars("groups", {"0", "1-1.5"}, {{"counts", {10.0, 20.0}}}));
}

// ---------------------------------------------------------------------------
// Run manifest
// ---------------------------------------------------------------------------

TEST_CASE("fnv1a digest matches published vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("run manifest lists inputs, artifacts, and itself") {
  std::string input = tmp_file("manifest_input.csv");
  write_text_file(input, "subject_id,month,edss\ns1,0,2\n");

  RunManifest manifest("1.0.0", "fit", 99);
  manifest.set_config(Config::from_text("variant = homogeneous\n"));
  manifest.add_input(input);
  manifest.add_artifact("fit_series.csv");
  manifest.add_warning("short follow-up");
  std::string path = tmp_file("manifest.json");
  manifest.write(path);

  nlohmann::json doc = nlohmann::json::parse(read_text_file(path));
  CHECK(doc["tool_version"] == "1.0.0");
  CHECK(doc["command"] == "fit");
  CHECK(doc["seed"] == 99);
  CHECK(doc["config"]["variant"] == "homogeneous");
  REQUIRE(doc["inputs"].size() == 1);
  CHECK(doc["inputs"][0]["path"] == input);
  CHECK(doc["inputs"][0]["fnv1a64"] ==
        fnv1a_hex("subject_id,month,edss\ns1,0,2\n"));
  // The artifact list ends with the manifest's own file name.
  REQUIRE(doc["artifacts"].size() == 2);
  CHECK(doc["artifacts"][0] == "fit_series.csv");
  CHECK(doc["artifacts"][1] == path);
  CHECK(doc["warnings"][0] == "short follow-up");
}
