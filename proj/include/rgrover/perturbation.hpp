#pragma once

#include <cmath>
#include <cstddef>

#include "rgrover/errors.hpp"

namespace rgrover {

// Second-order closed forms for the two class probabilities of the
// three-level engine, valid for small |eps_tilde|. The s-terms are the
// building blocks; s2 and s4 keep their literal O(t^2) double sums, and only
// their sum has a closed simplification (used as a cross-check in tests).

struct PerturbationTerms {
  double s1, s2, s3, s4;
  double theta;
  std::size_t t;
};

namespace detail {

inline void require_nondegenerate_angle(double theta) {
  if (std::abs(std::sin(theta / 2)) < 1e-12)
    throw DegenerateAngle("sin(theta/2) vanishes; use the direct sum");
}

}  // namespace detail

// Closed form of sum_{j=0}^{t-1} sin(a + j*theta).
inline double dirichlet_sum(double a, double theta, std::size_t t) {
  detail::require_nondegenerate_angle(theta);
  const double td = static_cast<double>(t);
  return std::sin(td * theta / 2) * std::sin(a + (td - 1) * theta / 2) /
         std::sin(theta / 2);
}

inline PerturbationTerms s_terms(double theta, std::size_t t) {
  detail::require_nondegenerate_angle(theta);
  PerturbationTerms out{0.0, 0.0, 0.0, 0.0, theta, t};
  if (t == 0) return out;
  const double td = static_cast<double>(t);
  const double sh = std::sin(theta / 2);
  const double kernel = std::sin(td * theta / 2) * std::sin(td * theta / 2) / sh;
  const double swing = (td / 2) * std::sin((td + 0.5) * theta);
  const double tail = std::sin(td * theta) * sh / (2 * std::sin(theta));
  out.s1 = kernel - swing + tail;
  out.s3 = kernel + swing - tail;
  for (std::size_t j = 0; j + 1 < t; ++j) {
    const double cj = std::cos((j + 1) * theta);
    for (std::size_t k = 0; k + j + 1 < t; ++k) {
      const double ck = std::cos((k + 1) * theta);
      const double sn = std::sin((td - j - k - 1.5) * theta);
      out.s2 += (1 + ck) * (1 - cj) * sn;
      out.s4 += (1 + ck) * (1 + cj) * sn;
    }
  }
  return out;
}

struct ApproxProbs {
  double p0;
  double p_eps;
};

inline ApproxProbs approx_probs(double theta, std::size_t t, double eps_tilde) {
  const PerturbationTerms s = s_terms(theta, t);
  const double sn = std::sin((t + 0.5) * theta);
  const double q = (M_PI * M_PI / 4) * eps_tilde * eps_tilde;
  const double p0 = (sn * sn + q * (2 * (s.s1 + s.s2) * sn + s.s1 * s.s1)) / 2;
  const double pe = (sn * sn + q * (-2 * (s.s3 + s.s4) * sn + s.s3 * s.s3)) / 2;
  return {p0, pe};
}

// p0 - p_eps through second order; positive means class 0 is favored.
inline double class_gap(double theta, std::size_t t, double eps_tilde) {
  detail::require_nondegenerate_angle(theta);
  const double td = static_cast<double>(t);
  const double sn = std::sin((td + 0.5) * theta);
  const double term1 = (td * std::sin(theta) - std::sin(td * theta) * std::cos(theta)) /
                       (2 * std::sin(theta) * std::sin(theta / 2)) * sn;
  const double shalf = std::sin(td * theta / 2);
  const double term2 = shalf * shalf * std::sin(td * theta) / std::sin(theta);
  return (M_PI * M_PI / 4) * (term1 + term2) * eps_tilde * eps_tilde;
}

// Sufficient condition for the gap to favor class 0 (for any eps_tilde != 0).
inline bool prioritization_condition(double theta, std::size_t t) {
  const double td = static_cast<double>(t);
  return std::min(std::sin(td * theta), std::cos(td * theta)) >= 0.0 &&
         td > 1.0 / std::tan(theta);
}

}  // namespace rgrover
