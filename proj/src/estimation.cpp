#include "edss/estimation.hpp"

#include <cmath>
#include <string>

namespace edss {

TransitionMatrix interval_matrix(const Cohort& cohort, const GroupScheme& scheme, int t) {
  int next = t + cohort.interval_months;
  if (t < 0 || next > cohort.horizon_months || t % cohort.interval_months != 0) {
    throw Error(Err::OutOfRange,
                "interval " + std::to_string(t) + ".." + std::to_string(next) +
                    " is off-schedule or outside the horizon");
  }
  std::size_t n = scheme.size();
  TransitionMatrix m(n, t, next);
  m.counts.assign(n * n, 0);

  for (const Subject& s : cohort.subjects) {
    const Visit* a = s.at_month(t);
    const Visit* b = s.at_month(next);
    if (a == nullptr || b == nullptr) continue;  // complete pairs only
    std::size_t i = static_cast<std::size_t>(scheme.group_of(a->edss));
    std::size_t j = static_cast<std::size_t>(scheme.group_of(b->edss));
    ++m.counts[i * n + j];
  }

  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t row_total = m.row_occupancy(i);
    if (row_total == 0) {
      m.at(i, i) = 1.0;  // self-loop keeps the matrix stochastic
      m.zero_rows.push_back(i);
      continue;
    }
    any = true;
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = static_cast<double>(m.counts[i * n + j]) / static_cast<double>(row_total);
    }
  }
  if (!any) {
    throw Error(Err::NoTransitionsObserved, "no subject observed at both month " +
                                                std::to_string(t) + " and month " +
                                                std::to_string(next));
  }
  return m;
}

std::vector<TransitionMatrix> all_interval_matrices(const Cohort& cohort,
                                                    const GroupScheme& scheme, int from_month) {
  std::vector<TransitionMatrix> out;
  for (int t = from_month; t + cohort.interval_months <= cohort.horizon_months;
       t += cohort.interval_months) {
    out.push_back(interval_matrix(cohort, scheme, t));
  }
  return out;
}

namespace {

void check_same_size(const std::vector<TransitionMatrix>& matrices) {
  if (matrices.empty()) throw Error(Err::EmptyInput, "no matrices given");
  for (const TransitionMatrix& m : matrices) {
    if (m.size() != matrices.front().size()) {
      throw Error(Err::DimensionMismatch, "matrices differ in dimension");
    }
  }
}

}  // namespace

TransitionMatrix average_matrices(const std::vector<TransitionMatrix>& matrices) {
  check_same_size(matrices);
  std::size_t n = matrices.front().size();
  TransitionMatrix avg(n, matrices.front().from_month, matrices.back().to_month);
  for (const TransitionMatrix& m : matrices) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) avg.at(i, j) += m.at(i, j);
    }
  }
  double inv = 1.0 / static_cast<double>(matrices.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) avg.at(i, j) *= inv;
  }
  avg.validate_stochastic(1e-12);
  return avg;
}

TransitionMatrix average_matrices_pooled(const std::vector<TransitionMatrix>& matrices) {
  check_same_size(matrices);
  std::size_t n = matrices.front().size();
  TransitionMatrix pooled(n, matrices.front().from_month, matrices.back().to_month);
  pooled.counts.assign(n * n, 0);
  for (const TransitionMatrix& m : matrices) {
    if (!m.has_counts()) {
      throw Error(Err::MissingIntervalMatrix, "pooled averaging needs raw counts");
    }
    for (std::size_t k = 0; k < n * n; ++k) pooled.counts[k] += m.counts[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t row_total = pooled.row_occupancy(i);
    if (row_total == 0) {
      pooled.at(i, i) = 1.0;
      pooled.zero_rows.push_back(i);
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      pooled.at(i, j) =
          static_cast<double>(pooled.counts[i * n + j]) / static_cast<double>(row_total);
    }
  }
  return pooled;
}

TransitionMatrix chain_product(const std::vector<TransitionMatrix>& matrices) {
  check_same_size(matrices);
  std::size_t n = matrices.front().size();
  for (std::size_t k = 1; k < matrices.size(); ++k) {
    if (matrices[k].from_month != matrices[k - 1].to_month) {
      throw Error(Err::NonContiguousSpans,
                  "matrix spans must chain: got ..." + std::to_string(matrices[k - 1].to_month) +
                      " then " + std::to_string(matrices[k].from_month) + "...");
    }
  }
  TransitionMatrix prod = TransitionMatrix::identity(n, matrices.front().from_month,
                                                     matrices.front().from_month);
  for (const TransitionMatrix& m : matrices) {
    TransitionMatrix next(n, prod.from_month, m.to_month);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        double p = prod.at(i, k);
        if (p == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) next.at(i, j) += p * m.at(k, j);
      }
    }
    prod = std::move(next);
  }
  return prod;
}

TransitionMatrix matrix_power(const TransitionMatrix& m, unsigned k) {
  std::size_t n = m.size();
  TransitionMatrix result = TransitionMatrix::identity(n, m.from_month, m.from_month);
  TransitionMatrix base = m;
  unsigned exponent = k;
  while (exponent > 0) {
    if (exponent & 1u) {
      TransitionMatrix next(n, 0, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < n; ++x) {
          double p = result.at(i, x);
          if (p == 0.0) continue;
          for (std::size_t j = 0; j < n; ++j) next.at(i, j) += p * base.at(x, j);
        }
      }
      next.from_month = result.from_month;
      next.to_month = result.to_month + (base.to_month - base.from_month);
      result = std::move(next);
    }
    exponent >>= 1u;
    if (exponent == 0) break;
    TransitionMatrix sq(n, base.from_month, base.to_month + (base.to_month - base.from_month));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t x = 0; x < n; ++x) {
        double p = base.at(i, x);
        if (p == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) sq.at(i, j) += p * base.at(x, j);
      }
    }
    base = std::move(sq);
  }
  // Span of M^k is k spans of M laid end to end.
  result.from_month = m.from_month;
  result.to_month = m.from_month + static_cast<int>(k) * (m.to_month - m.from_month);
  return result;
}

Distribution propagate(const Distribution& d, const TransitionMatrix& m) {
  if (d.size() != m.size()) {
    throw Error(Err::DimensionMismatch, "distribution and matrix dimensions differ");
  }
  Distribution out;
  out.month = d.month + (m.to_month - m.from_month);
  out.probs.assign(d.size(), 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    double p = d.probs[i];
    if (p == 0.0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) out.probs[j] += p * m.at(i, j);
  }
  return out;
}

namespace {

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return sum;
}

// Core loop; returns true with pi filled on convergence.
bool iterate(const TransitionMatrix& m, std::vector<double>& pi, double tol, int max_iter,
             int& iterations) {
  std::size_t n = m.size();
  std::vector<double> next(n);
  for (int it = 1; it <= max_iter; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double p = pi[i];
      if (p == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) next[j] += p * m.at(i, j);
    }
    double change = l1_diff(pi, next);
    pi.swap(next);
    if (change < tol) {
      iterations = it;
      return true;
    }
  }
  iterations = max_iter;
  return false;
}

}  // namespace

StationaryResult stationary(const TransitionMatrix& m, double tol, int max_iter) {
  Distribution uniform;
  uniform.probs.assign(m.size(), 1.0 / static_cast<double>(m.size()));
  return stationary_from(m, uniform, tol, max_iter, /*probe=*/true);
}

StationaryResult stationary_from(const TransitionMatrix& m, const Distribution& start, double tol,
                                 int max_iter, bool probe) {
  if (start.size() != m.size()) {
    throw Error(Err::DimensionMismatch, "start vector and matrix dimensions differ");
  }
  start.validate(1e-9);
  StationaryResult result;
  std::vector<double> pi = start.probs;
  if (!iterate(m, pi, tol, max_iter, result.iterations)) {
    throw Error(Err::NoConvergence, "power iteration did not converge in " +
                                        std::to_string(max_iter) + " iterations");
  }
  result.pi.probs = pi;
  result.pi.month = 0;

  if (probe) {
    // A second run from a basis vector certifies (or refutes) uniqueness;
    // probe non-convergence (periodic chains) just clears the flag.
    std::vector<double> probe_pi(m.size(), 0.0);
    probe_pi[0] = 1.0;
    int probe_iters = 0;
    if (!iterate(m, probe_pi, tol, max_iter, probe_iters)) {
      result.unique = false;
    } else {
      // Both runs have stalled (per-step change < tol) but each may still sit
      // O(tol / spectral gap) away from its limit, so comparing them once
      // would misreport slowly mixing chains.  Instead iterate the pair
      // jointly: the mutual gap contracts geometrically iff the limits
      // coincide, and plateaus at a nonzero value otherwise (identity,
      // reducible chains).
      std::vector<double> a = pi, b = probe_pi;
      std::vector<double> scratch(m.size());
      double gap = l1_diff(a, b);
      auto advance = [&](std::vector<double>& v) {
        std::fill(scratch.begin(), scratch.end(), 0.0);
        for (std::size_t i = 0; i < m.size(); ++i) {
          double p = v[i];
          if (p == 0.0) continue;
          for (std::size_t j = 0; j < m.size(); ++j) scratch[j] += p * m.at(i, j);
        }
        v.swap(scratch);
      };
      for (int it = 0; it < max_iter && gap >= 10.0 * tol; ++it) {
        advance(a);
        advance(b);
        double next_gap = l1_diff(a, b);
        if (next_gap >= gap * 0.999999) break;  // plateau: distinct limits
        gap = next_gap;
      }
      result.unique = gap < 10.0 * tol;
    }
  }
  return result;
}

}  // namespace edss
