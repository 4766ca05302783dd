#pragma once

#include <cstdint>
#include <vector>

#include "edss/errors.hpp"

namespace edss {

// Probability vector over state groups at one study month.
struct Distribution {
  std::vector<double> probs;
  int month = 0;

  std::size_t size() const { return probs.size(); }
  // Entries must be non-negative and sum to 1 within tol.
  void validate(double tol = 1e-12) const;
};

// Row-stochastic transition matrix over state groups: entry (i, j) is the
// probability of being in group j at to_month given group i at from_month.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(std::size_t n, int from_month, int to_month);

  static TransitionMatrix identity(std::size_t n, int from_month = 0, int to_month = 0);

  std::size_t size() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  int from_month = 0;
  int to_month = 0;

  // Raw transition tallies when the matrix came from data (empty otherwise);
  // counts[i*n+j] subjects moved i -> j.
  std::vector<std::int64_t> counts;
  bool has_counts() const { return !counts.empty(); }
  std::int64_t row_occupancy(std::size_t i) const;

  // Rows that had no observed transitions and were made self-loops.
  std::vector<std::size_t> zero_rows;

  double row_sum(std::size_t i) const;
  // Every row sums to 1 within tol, every entry in [0, 1].
  void validate_stochastic(double tol = 1e-12) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

}  // namespace edss
