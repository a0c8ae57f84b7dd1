#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rgrover/errors.hpp"
#include "rgrover/simulator.hpp"

namespace rgrover {

// Experiments contrasting the coherent uniform start with an incoherent
// two-branch mixture that has the same per-item success probability at t = 0.

// l1-norm of coherence of rho restricted to a basis-index subset: project,
// renormalize by the projected trace, then sum absolute off-diagonals.
inline double l1_coherence(const DensityState& rho,
                           const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw ZeroMass("empty basis subset");
  const std::size_t k = subset.size();
  CMatrix c = CMatrix::Zero(k, k);
  for (const auto& branch : rho.branches)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        c(i, j) += branch.weight * branch.state(subset[i]) *
                   std::conj(branch.state(subset[j]));
  const double trace = c.trace().real();
  if (trace < 1e-15) throw ZeroMass("projection has zero trace");
  double off = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) off += std::abs(c(i, j));
  return off / trace;
}

// Equal mixture of (sqrt(n-1)|unmarked uniform> + |x_i>)/sqrt(n) for the two
// marked items at indices 0 and 1. Projected onto {0, 1} it is diagonal, so
// its l1 coherence there is exactly zero.
inline DensityState incoherent_initial(std::size_t n = 1000) {
  if (n < 3) throw InvalidCounts("mixture needs n >= 3");
  const double unmarked_amp =
      std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n - 2)) /
      std::sqrt(static_cast<double>(n));
  DensityState rho;
  for (std::size_t item = 0; item < 2; ++item) {
    CVector v = CVector::Constant(n, Complex{unmarked_amp, 0.0});
    v(0) = v(1) = 0.0;
    v(item) = 1.0 / std::sqrt(static_cast<double>(n));
    rho.branches.push_back({0.5, std::move(v)});
  }
  return rho;
}

struct FidelityMax {
  std::size_t a_star;
  double f_star;
};

// F(a) = (sqrt(a(n-2)) + sqrt(n-a))^2 / n^2 maximized over integers
// a = 0..n: the best fidelity an incoherent state of this family can have
// with the coherent start.
inline double incoherent_fidelity(std::size_t n, std::size_t a) {
  const double nd = static_cast<double>(n), ad = static_cast<double>(a);
  const double root = std::sqrt(ad * (nd - 2)) + std::sqrt(nd - ad);
  return root * root / (nd * nd);
}

inline FidelityMax best_incoherent_fidelity(std::size_t n = 1000) {
  FidelityMax best{0, incoherent_fidelity(n, 0)};
  for (std::size_t a = 1; a <= n; ++a) {
    const double f = incoherent_fidelity(n, a);
    if (f > best.f_star) best = {a, f};
  }
  return best;
}

struct CoherencePoint {
  double eps;
  // Index 0 is the class-0 item, index 1 the class-eps item.
  std::array<double, 2> p_opt, h_opt;
  std::array<std::size_t, 2> t_coherent, t_incoherent;
};

struct CoherenceReport {
  std::size_t n;
  std::vector<CoherencePoint> points;
};

inline std::vector<double> default_eps_grid(std::size_t count = 100,
                                            double lo = -1.0,
                                            double hi = -0.01) {
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k)
    grid[k] = lo + (hi - lo) * static_cast<double>(k) /
                       static_cast<double>(count - 1);
  grid.back() = hi;
  return grid;
}

namespace detail {

inline std::array<std::vector<double>, 2> item_series(
    const ProbabilityTrace& trace) {
  std::array<std::vector<double>, 2> out;
  for (const auto& row : trace.steps) {
    out[0].push_back(row.marked[0]);
    out[1].push_back(row.marked[1]);
  }
  return out;
}

}  // namespace detail

inline CoherenceReport coherence_sweep(const std::vector<double>& eps_grid,
                                       std::size_t n = 1000) {
  CoherenceReport report{n, {}};
  for (double eps : eps_grid) {
    const PriorityOracle oracle(n, {{0, 0.0}, {1, eps}});
    CoherencePoint point{};
    point.eps = eps;
    for (std::size_t t_cap = 512; t_cap <= 4096; t_cap *= 2) {
      try {
        const auto coherent = detail::item_series(evolve(oracle, t_cap));
        const auto incoherent = detail::item_series(
            evolve_density(incoherent_initial(n), oracle, t_cap));
        for (int i = 0; i < 2; ++i) {
          const LocalMax p = first_local_max(coherent[i]);
          const LocalMax h = first_local_max(incoherent[i]);
          point.p_opt[i] = p.value;
          point.t_coherent[i] = p.t;
          point.h_opt[i] = h.value;
          point.t_incoherent[i] = h.t;
        }
        break;
      } catch (const NoLocalMax&) {
        if (t_cap * 2 > 4096) throw;
      }
    }
    report.points.push_back(point);
  }
  return report;
}

}  // namespace rgrover
