#include "edss/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace edss {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no,
                             const std::string& what) {
  throw Error(Err::ParseError, path + " line " + std::to_string(line_no) + ": " + what);
}

long parse_long(const std::string& raw, const std::string& path, std::size_t line_no,
                const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (ec != std::errc() || p != raw.data() + raw.size()) {
    parse_fail(path, line_no, std::string("bad ") + what + " '" + raw + "'");
  }
  return v;
}

double parse_double(const std::string& raw, const std::string& path, std::size_t line_no,
                    const char* what) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(raw.c_str(), &end);
  if (errno != 0 || end != raw.c_str() + raw.size() || raw.empty()) {
    parse_fail(path, line_no, std::string("bad ") + what + " '" + raw + "'");
  }
  return v;
}

}  // namespace

std::vector<VisitRecord> read_visit_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::IoError, "cannot open " + path);

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) {
    throw Error(Err::EmptyInput, path + " is empty");
  }
  ++line_no;
  if (trimmed(line) != "subject_id,month,edss") {
    parse_fail(path, line_no, "header must be exactly 'subject_id,month,edss'");
  }

  std::vector<VisitRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<std::string> fields = split_line(trimmed(line));
    if (fields.size() != 3) {
      parse_fail(path, line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    }
    VisitRecord r;
    r.subject_id = trimmed(fields[0]);
    if (r.subject_id.empty()) parse_fail(path, line_no, "empty subject_id");
    r.month = static_cast<int>(parse_long(trimmed(fields[1]), path, line_no, "month"));
    double raw = parse_double(trimmed(fields[2]), path, line_no, "edss");
    try {
      r.edss = parse_edss(raw);
    } catch (const Error& e) {
      parse_fail(path, line_no, e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

void write_cohort_csv(const std::string& path, const Cohort& cohort) {
  std::ostringstream out;
  out << "subject_id,month,edss\n";
  for (const Subject& s : cohort.subjects) {
    for (const Visit& v : s.visits) {
      out << s.id << ',' << v.month << ',' << format_edss(v.edss) << '\n';
    }
  }
  write_text_file(path, out.str());
}

void write_matrix_csv(const std::string& path, const TransitionMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out << ',';
      out << fmt_double(m.at(i, j));
    }
    out << '\n';
  }
  write_text_file(path, out.str());
}

TransitionMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::IoError, "cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<double> row;
    for (const std::string& f : split_line(trimmed(line))) {
      row.push_back(parse_double(trimmed(f), path, line_no, "matrix entry"));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Err::EmptyInput, path + " holds no matrix rows");
  TransitionMatrix m(rows.size(), 0, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(Err::ParseError, path + ": row " + std::to_string(i + 1) + " has " +
                                       std::to_string(rows[i].size()) + " columns, want " +
                                       std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  }
  m.validate_stochastic(1e-9);
  return m;
}

void write_fit_series_csv(const std::string& path, const std::vector<FitPoint>& series) {
  std::ostringstream out;
  out << "month,chi_sq,df,p_value,n_remaining";
  std::size_t groups = series.empty() ? 8 : series.front().observed_counts.size();
  for (std::size_t g = 0; g < groups; ++g) out << ",observed_" << g;
  for (std::size_t g = 0; g < groups; ++g) out << ",expected_" << g;
  out << '\n';
  for (const FitPoint& p : series) {
    out << p.month << ',' << fmt_double(p.chi_sq) << ',' << p.df << ',' << fmt_double(p.p_value)
        << ',' << p.n_remaining;
    for (std::int64_t o : p.observed_counts) out << ',' << o;
    for (double e : p.expected_counts) out << ',' << fmt_double(e);
    out << '\n';
  }
  write_text_file(path, out.str());
}

void write_events_csv(const std::string& path, const CdwAnalysis& analysis) {
  std::ostringstream out;
  out << "subject_id,onset_month,trigger_edss,threshold_edss,regressed,regression_month\n";
  for (std::size_t e = 0; e < analysis.events.size(); ++e) {
    const CdwEvent& ev = analysis.events[e];
    const std::optional<RegressionEvent>& reg = analysis.regressions[e];
    out << ev.subject_id << ',' << ev.onset_month << ',' << format_edss(ev.trigger_edss) << ','
        << format_edss(ev.threshold_edss) << ',' << (reg ? "true" : "false") << ',';
    if (reg) out << reg->month;
    out << '\n';
  }
  write_text_file(path, out.str());
}

void write_regression_table_csv(const std::string& path, const RegressionTable& table) {
  std::ostringstream out;
  out << "label,expected,observed,n,t_value,p_value\n";
  for (const RegressionRow& row : table.rows) {
    out << row.label << ',' << fmt_double(row.expected) << ',' << fmt_double(row.observed) << ','
        << row.n_cdw << ',';
    if (row.t_value) out << fmt_double(*row.t_value);
    out << ',';
    if (row.p_value) out << fmt_double(*row.p_value);
    out << '\n';
  }
  write_text_file(path, out.str());
}

void write_labels_csv(const std::string& path, const Cohort& cohort,
                      const std::vector<std::optional<PathLabel>>& labels) {
  std::ostringstream out;
  out << "subject_id,label\n";
  for (std::size_t k = 0; k < cohort.subjects.size(); ++k) {
    out << cohort.subjects[k].id << ','
        << (labels[k] ? path_name(*labels[k]) : "excluded") << '\n';
  }
  write_text_file(path, out.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::IoError, "cannot write " + path);
  out << content;
  if (!out) throw Error(Err::IoError, "failed writing " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace edss
