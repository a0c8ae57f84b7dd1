#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "rgrover/errors.hpp"
#include "rgrover/linalg.hpp"

namespace rgrover {

// Head-to-head at n = 8, m = 2 between the phase-encoded priority oracle
// (t = 2 closed forms) and an amplitude-encoded oracle that reflects about a
// weighted superposition of the two marked items (t = 1 closed forms). The
// marked items sit at basis indices 0 and 7.

inline constexpr std::size_t kFirstItem = 0;
inline constexpr std::size_t kSecondItem = 7;

namespace detail {

inline void require_amplitude_range(double eps) {
  if (eps < -1.0 || eps > 0.0)
    throw OutOfRange("amplitude parameter must lie in [-1, 0]");
}

}  // namespace detail

// I - 2|w><w| with |w> = sqrt(1+eps)|x1> + sqrt(-eps)|x2>; unitary because
// ||w|| = 1.
inline CMatrix amplitude_oracle(double eps) {
  detail::require_amplitude_range(eps);
  CVector w = CVector::Zero(8);
  w(kFirstItem) = std::sqrt(1.0 + eps);
  w(kSecondItem) = std::sqrt(-eps);
  return CMatrix::Identity(8, 8) - 2.0 * w * w.adjoint();
}

// Nearest integer (half away from zero) to acos(k) / (2 asin(k)) with
// k = sqrt((1+eps)/n) + sqrt(-eps/n).
inline long long amplitude_query_count(std::size_t n, double eps) {
  detail::require_amplitude_range(eps);
  const double nd = static_cast<double>(n);
  const double k = std::sqrt((1.0 + eps) / nd) + std::sqrt(-eps / nd);
  return static_cast<long long>(std::llround(std::acos(k) / (2.0 * std::asin(k))));
}

struct ItemProbs {
  double first;
  double second;
  double total() const { return first + second; }
};

// Success probabilities of the amplitude-encoded search at n = 8 after its
// single optimal query.
inline ItemProbs amplitude_probs(double eps) {
  detail::require_amplitude_range(eps);
  const double cross = 2.0 * std::sqrt(-eps * (1.0 + eps));
  const double q1 = 1.0 + cross + 4.0 * (1.0 + eps);
  const double q2 = 1.0 + cross - 4.0 * eps;
  return {q1 * q1 / 32.0, q2 * q2 / 32.0};
}

// Success probabilities of the phase-encoded two-class search at n = 8 after
// t = 2 queries, as polynomials in c = cos(pi * eps_tilde).
inline ItemProbs ranked_probs_n8(double eps_tilde) {
  const double c = std::cos(M_PI * eps_tilde);
  return {(373.0 - 210.0 * c - 99.0 * c * c) / 512.0,
          (61.0 + 30.0 * c - 27.0 * c * c) / 512.0};
}

struct ComparisonRow {
  double r;
  double eps;        // amplitude-encoded parameter achieving ratio r
  double eps_tilde;  // phase-encoded parameter achieving ratio r
  double q_total;    // amplitude-encoded total success probability
  double p_total;    // phase-encoded total success probability
};

namespace detail {

// Solve ratio(x) = r on [lo, hi] by bisection after a monotonicity scan; if
// the sampled ratio is not monotone, bisect the first sampled bracket that
// straddles r instead.
inline double solve_ratio(const std::function<double(double)>& ratio, double lo,
                          double hi, double r, const char* side) {
  // A boundary root can be a tangential crossing, where bisection stalls at
  // the rounding floor; take an exactly attained endpoint as is.
  if (ratio(lo) == r) return lo;
  if (ratio(hi) == r) return hi;
  constexpr int kSamples = 199;
  double prev = ratio(lo);
  double lo_attain = prev, hi_attain = prev;
  bool nondecreasing = true, nonincreasing = true;
  double bracket_lo = lo, bracket_hi = hi;
  bool bracketed = false;
  double x_prev = lo;
  for (int i = 1; i < kSamples; ++i) {
    const double x = lo + (hi - lo) * i / (kSamples - 1);
    const double f = ratio(x);
    nondecreasing = nondecreasing && f >= prev;
    nonincreasing = nonincreasing && f <= prev;
    lo_attain = std::min(lo_attain, f);
    hi_attain = std::max(hi_attain, f);
    if (!bracketed && (prev - r) * (f - r) <= 0.0) {
      bracket_lo = x_prev;
      bracket_hi = x;
      bracketed = true;
    }
    prev = f;
    x_prev = x;
  }
  if (!(nondecreasing || nonincreasing) && !bracketed) {
    throw NoSolution(std::string(side) + ": ratio not attained; attainable range [" +
                     std::to_string(lo_attain) + ", " + std::to_string(hi_attain) + "]");
  }
  double a = bracketed ? bracket_lo : lo;
  double b = bracketed ? bracket_hi : hi;
  double fa = ratio(a) - r, fb = ratio(b) - r;
  if (fa * fb > 0.0) {
    throw NoSolution(std::string(side) + ": ratio not attained; attainable range [" +
                     std::to_string(lo_attain) + ", " + std::to_string(hi_attain) + "]");
  }
  while (b - a > 1e-12) {
    const double mid = (a + b) / 2;
    const double fm = ratio(mid) - r;
    if (fa * fm <= 0.0) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  (void)fb;
  return (a + b) / 2;
}

}  // namespace detail

// Equalize the per-item ratio on both sides at a common value r, then report
// the total success probabilities each side achieves there.
inline ComparisonRow match_ratio(double r) {
  if (r < 1.0) throw OutOfRange("ratio must be >= 1");
  const double eps = detail::solve_ratio(
      [](double e) {
        const ItemProbs q = amplitude_probs(e);
        return q.first / q.second;
      },
      -0.99, -0.01, r, "amplitude side");
  const double eps_tilde = detail::solve_ratio(
      [](double e) {
        const ItemProbs p = ranked_probs_n8(e);
        return p.first / p.second;
      },
      -0.99, 0.0, r, "phase side");
  return {r, eps, eps_tilde, amplitude_probs(eps).total(),
          ranked_probs_n8(eps_tilde).total()};
}

}  // namespace rgrover
