#pragma once

#include <stdexcept>
#include <string>

namespace edss {

enum class Err {
  NotHalfStep,
  InvalidHalf,
  OutOfRange,
  DuplicateVisit,
  EmptyCohort,
  InsufficientSubjects,
  NoTransitionsObserved,
  EmptyInput,
  DimensionMismatch,
  NonContiguousSpans,
  NoConvergence,
  MissingIntervalMatrix,
  AllCellsExcluded,
  NoPostBaselineVisits,
  EmptyRegressionSet,
  EmptyTargetSet,
  DegenerateExpected,
  NoCdwEvents,
  InvalidConfig,
  ParseError,
  IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

  // Exit-status category used by the command line tool:
  // 2 = data/input error, 3 = analysis produced a degenerate result.
  int exit_status() const;

 private:
  Err code_;
};

}  // namespace edss
