#pragma once

#include <vector>

#include "edss/cohort.hpp"
#include "edss/grouping.hpp"
#include "edss/matrix.hpp"

namespace edss {

// Transition matrix for the interval [t, t+interval], tallied over subjects
// observed at BOTH endpoints.  Rows with no observations become self-loops
// and are listed in zero_rows.  Errors: NoTransitionsObserved (all rows
// empty), OutOfRange (interval outside the horizon).
TransitionMatrix interval_matrix(const Cohort& cohort, const GroupScheme& scheme, int t);

// One matrix per interval from from_month to the cohort horizon.
std::vector<TransitionMatrix> all_interval_matrices(const Cohort& cohort,
                                                    const GroupScheme& scheme,
                                                    int from_month = 0);

// Element-wise unweighted mean of the probability entries.
// Errors: EmptyInput, DimensionMismatch.
TransitionMatrix average_matrices(const std::vector<TransitionMatrix>& matrices);

// Count-pooled alternative: sums the raw tallies across intervals and
// row-normalizes once, weighting intervals by sample size.  Requires counts.
// Errors: EmptyInput, DimensionMismatch, MissingIntervalMatrix (no counts).
TransitionMatrix average_matrices_pooled(const std::vector<TransitionMatrix>& matrices);

// Ordinary matrix product in time order; spans must be contiguous
// (each to_month equals the next from_month).  Errors: EmptyInput,
// NonContiguousSpans, DimensionMismatch.
TransitionMatrix chain_product(const std::vector<TransitionMatrix>& matrices);

// M^k by repeated squaring; M^0 is the identity.
TransitionMatrix matrix_power(const TransitionMatrix& m, unsigned k);

// Row vector times matrix; month advances by the matrix span.
// Errors: DimensionMismatch.
Distribution propagate(const Distribution& d, const TransitionMatrix& m);

struct StationaryResult {
  Distribution pi;
  int iterations = 0;
  // True when a probe run from a different start converged to the same
  // vector; false means uniqueness could not be certified (e.g. identity or
  // periodic chains).
  bool unique = true;
};

// Power iteration from the uniform start until the L1 change per step drops
// below tol.  Errors: NoConvergence (max_iter reached).
StationaryResult stationary(const TransitionMatrix& m, double tol = 1e-10, int max_iter = 100000);

// Same iteration from a caller-chosen start.
StationaryResult stationary_from(const TransitionMatrix& m, const Distribution& start,
                                 double tol = 1e-10, int max_iter = 100000, bool probe = true);

}  // namespace edss
