#include "edss/matrix.hpp"

#include <cmath>
#include <string>

namespace edss {

void Distribution::validate(double tol) const {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw Error(Err::OutOfRange, "distribution entry negative or NaN");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > tol) {
    throw Error(Err::OutOfRange, "distribution sums to " + std::to_string(sum) + ", not 1");
  }
}

TransitionMatrix::TransitionMatrix(std::size_t n, int from, int to)
    : from_month(from), to_month(to), n_(n), entries_(n * n, 0.0) {}

TransitionMatrix TransitionMatrix::identity(std::size_t n, int from, int to) {
  TransitionMatrix m(n, from, to);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

std::int64_t TransitionMatrix::row_occupancy(std::size_t i) const {
  if (!has_counts()) return 0;
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n_; ++j) total += counts[i * n_ + j];
  return total;
}

double TransitionMatrix::row_sum(std::size_t i) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < n_; ++j) sum += at(i, j);
  return sum;
}

void TransitionMatrix::validate_stochastic(double tol) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      double p = at(i, j);
      if (!(p >= 0.0) || p > 1.0 + tol) {
        throw Error(Err::OutOfRange, "matrix entry outside [0, 1]");
      }
    }
    if (std::fabs(row_sum(i) - 1.0) > tol) {
      throw Error(Err::OutOfRange, "matrix row " + std::to_string(i) + " sums to " +
                                       std::to_string(row_sum(i)) + ", not 1");
    }
  }
}

}  // namespace edss
