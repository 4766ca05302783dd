#include "edss/errors.hpp"

namespace edss {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotHalfStep: return "NotHalfStep";
    case Err::InvalidHalf: return "InvalidHalf";
    case Err::OutOfRange: return "OutOfRange";
    case Err::DuplicateVisit: return "DuplicateVisit";
    case Err::EmptyCohort: return "EmptyCohort";
    case Err::InsufficientSubjects: return "InsufficientSubjects";
    case Err::NoTransitionsObserved: return "NoTransitionsObserved";
    case Err::EmptyInput: return "EmptyInput";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NonContiguousSpans: return "NonContiguousSpans";
    case Err::NoConvergence: return "NoConvergence";
    case Err::MissingIntervalMatrix: return "MissingIntervalMatrix";
    case Err::AllCellsExcluded: return "AllCellsExcluded";
    case Err::NoPostBaselineVisits: return "NoPostBaselineVisits";
    case Err::EmptyRegressionSet: return "EmptyRegressionSet";
    case Err::EmptyTargetSet: return "EmptyTargetSet";
    case Err::DegenerateExpected: return "DegenerateExpected";
    case Err::NoCdwEvents: return "NoCdwEvents";
    case Err::InvalidConfig: return "InvalidConfig";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
  }
  return "Unknown";
}

int Error::exit_status() const {
  switch (code_) {
    case Err::NoConvergence:
    case Err::NoTransitionsObserved:
    case Err::AllCellsExcluded:
    case Err::NoCdwEvents:
    case Err::EmptyRegressionSet:
    case Err::EmptyTargetSet:
    case Err::DegenerateExpected:
      return 3;  // analysis ran but produced nothing usable
    default:
      return 2;  // malformed input, bad config, unusable data
  }
}

}  // namespace edss
