#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "rgrover/errors.hpp"
#include "rgrover/linalg.hpp"

namespace rgrover {

// A marked-item set with one priority per item. Priorities live in [-1, 0]:
// 0 is a full sign flip, -1 leaves the item indistinguishable from unmarked.
struct PriorityOracle {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, double>> marked;  // (index, priority)

  PriorityOracle(std::size_t n_, std::vector<std::pair<std::size_t, double>> marked_)
      : n(n_), marked(std::move(marked_)) {
    if (n < 1 || marked.empty() || marked.size() > n)
      throw InvalidCounts("oracle needs 1 <= |marked| <= n");
    std::vector<std::size_t> seen;
    for (auto& [x, eps] : marked) {
      if (x >= n) throw OutOfRange("marked index out of range");
      if (eps < -1.0 || eps > 0.0)
        throw OutOfRange("priority must lie in [-1, 0]");
      seen.push_back(x);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw OutOfRange("marked indices must be distinct");
  }

  Complex phase(double eps) const { return -std::polar(1.0, M_PI * eps); }
};

// Two equal-size classes at priorities 0 and eps_tilde, occupying the first
// m indices (class 0 first). The class split used throughout the reduced
// three-level analysis.
inline PriorityOracle two_class_oracle(std::size_t n, std::size_t m,
                                       double eps_tilde) {
  if (m < 2 || m % 2 != 0)
    throw InvalidClassSplit("two equal classes need an even m >= 2");
  std::vector<std::pair<std::size_t, double>> marked;
  marked.reserve(m);
  for (std::size_t i = 0; i < m / 2; ++i) marked.emplace_back(i, 0.0);
  for (std::size_t i = m / 2; i < m; ++i) marked.emplace_back(i, eps_tilde);
  return PriorityOracle(n, std::move(marked));
}

struct ProbabilityTrace {
  struct Row {
    std::vector<double> marked;  // aligned with marked_indices
    double failure = 0.0;
  };
  std::vector<std::size_t> marked_indices;
  std::vector<Row> steps;  // steps[t] is the distribution after t iterations

  double total_marked(std::size_t t) const {
    double s = 0.0;
    for (double p : steps[t].marked) s += p;
    return s;
  }
};

// Rank-2-friendly mixed state: a convex mixture of pure branches.
struct DensityState {
  struct Branch {
    double weight;
    CVector state;
  };
  std::vector<Branch> branches;
};

inline double grover_angle(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1 || m > n)
    throw InvalidCounts("grover_angle needs 1 <= m <= n");
  return 2.0 * std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(n)));
}

inline CVector uniform_initial(std::size_t n) {
  return CVector::Constant(n, Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
}

inline CVector apply_oracle(const CVector& state, const PriorityOracle& oracle) {
  if (static_cast<std::size_t>(state.size()) != oracle.n)
    throw DimensionMismatch("state dimension differs from oracle size");
  CVector out = state;
  for (auto& [x, eps] : oracle.marked) out(x) *= oracle.phase(eps);
  return out;
}

// 2|psi(0)><psi(0)| - I applied as a rank-1 update; the reflection is never
// materialized, so a step is O(n).
inline CVector apply_diffusion(const CVector& state) {
  const Complex twice_mean = 2.0 * state.mean();
  return CVector::Constant(state.size(), twice_mean) - state;
}

inline CVector evolve_vector(CVector state, const PriorityOracle& oracle,
                             std::size_t t) {
  for (std::size_t k = 0; k < t; ++k)
    state = apply_diffusion(apply_oracle(state, oracle));
  return state;
}

namespace detail {

inline ProbabilityTrace::Row trace_row(const CVector& state,
                                       const PriorityOracle& oracle) {
  ProbabilityTrace::Row row;
  row.marked.reserve(oracle.marked.size());
  double marked_sum = 0.0;
  for (auto& [x, eps] : oracle.marked) {
    double p = std::norm(state(x));
    row.marked.push_back(p);
    marked_sum += p;
  }
  row.failure = state.squaredNorm() - marked_sum;
  return row;
}

}  // namespace detail

inline ProbabilityTrace evolve(const PriorityOracle& oracle, std::size_t t_max) {
  ProbabilityTrace trace;
  for (auto& [x, eps] : oracle.marked) trace.marked_indices.push_back(x);
  trace.steps.reserve(t_max + 1);
  CVector psi = uniform_initial(oracle.n);
  trace.steps.push_back(detail::trace_row(psi, oracle));
  for (std::size_t t = 1; t <= t_max; ++t) {
    psi = apply_diffusion(apply_oracle(psi, oracle));
    trace.steps.push_back(detail::trace_row(psi, oracle));
  }
  return trace;
}

inline ProbabilityTrace evolve_density(const DensityState& rho,
                                       const PriorityOracle& oracle,
                                       std::size_t t_max) {
  ProbabilityTrace trace;
  for (auto& [x, eps] : oracle.marked) trace.marked_indices.push_back(x);
  std::vector<CVector> states;
  std::vector<double> weights;
  for (const auto& branch : rho.branches) {
    if (static_cast<std::size_t>(branch.state.size()) != oracle.n)
      throw DimensionMismatch("mixture branch dimension differs from oracle size");
    states.push_back(branch.state);
    weights.push_back(branch.weight);
  }
  auto mixed_row = [&]() {
    ProbabilityTrace::Row row;
    row.marked.assign(oracle.marked.size(), 0.0);
    row.failure = 0.0;
    for (std::size_t b = 0; b < states.size(); ++b) {
      auto part = detail::trace_row(states[b], oracle);
      for (std::size_t i = 0; i < row.marked.size(); ++i)
        row.marked[i] += weights[b] * part.marked[i];
      row.failure += weights[b] * part.failure;
    }
    return row;
  };
  trace.steps.push_back(mixed_row());
  for (std::size_t t = 1; t <= t_max; ++t) {
    for (auto& s : states) s = apply_diffusion(apply_oracle(s, oracle));
    trace.steps.push_back(mixed_row());
  }
  return trace;
}

struct LocalMax {
  std::size_t t;
  double value;
};

// Smallest t >= 1 with series[t] >= series[t-1] and series[t] > series[t+1];
// a plateau therefore resolves to its last index. t = 0 never qualifies.
inline LocalMax first_local_max(const std::vector<double>& series) {
  if (series.size() < 3)
    throw NoLocalMax("series needs at least three entries");
  for (std::size_t t = 1; t + 1 < series.size(); ++t)
    if (series[t] >= series[t - 1] && series[t] > series[t + 1])
      return {t, series[t]};
  throw NoLocalMax("no interior local maximum in the series");
}

}  // namespace rgrover
