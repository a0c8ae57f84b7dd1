#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rgrover/errors.hpp"
#include "rgrover/linalg.hpp"
#include "rgrover/simulator.hpp"

namespace rgrover {

// Three-level engine for the two-equal-class split: the search dynamics stays
// in span{uniform unmarked, uniform class-0, uniform class-eps}, so one
// diagonalization answers every t in O(1) regardless of n.

struct LogicalSystem {
  double theta;
  double eps_tilde;
  std::size_t n;
  std::size_t m;
};

struct ReducedSystem {
  CVector initial;  // dim 3
  CMatrix d3, o3, g3;
};

struct Eigensystem {
  std::array<Complex, 3> lambdas;
  std::array<CVector, 3> vectors;  // unit norm, dim 3
  Complex a;
  bool degenerate = false;  // eigenvalues closer than 1e-8; dense fallback used
};

namespace detail {

inline ReducedSystem reduce_from_theta(double theta, double eps_tilde) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double r2 = std::sqrt(2.0);
  ReducedSystem sys;
  sys.initial = CVector(3);
  sys.initial << Complex{std::cos(theta / 2), 0},
      Complex{std::sin(theta / 2) / r2, 0}, Complex{std::sin(theta / 2) / r2, 0};
  sys.d3 = CMatrix(3, 3);
  sys.d3 << Complex{c, 0}, Complex{s / r2, 0}, Complex{s / r2, 0},
      Complex{s / r2, 0}, Complex{-(1 + c) / 2, 0}, Complex{(1 - c) / 2, 0},
      Complex{s / r2, 0}, Complex{(1 - c) / 2, 0}, Complex{-(1 + c) / 2, 0};
  sys.o3 = CMatrix::Zero(3, 3);
  sys.o3(0, 0) = 1.0;
  sys.o3(1, 1) = -1.0;
  sys.o3(2, 2) = -std::polar(1.0, M_PI * eps_tilde);
  sys.g3 = sys.d3 * sys.o3;
  return sys;
}

inline void validate_class_split(std::size_t n, std::size_t m) {
  if (m == 0 || m % 2 != 0)
    throw InvalidClassSplit("two equal classes need an even m >= 2");
  if (2 * m > n) throw OutOfRange("class split needs m <= n/2");
}

}  // namespace detail

inline ReducedSystem reduce(std::size_t n, std::size_t m, double eps_tilde) {
  detail::validate_class_split(n, m);
  return detail::reduce_from_theta(grover_angle(n, m), eps_tilde);
}

inline Complex coefficient_a(double theta, double eps_tilde) {
  const double c = std::cos(theta);
  return Complex{(1 + 3 * c) / 2, 0} +
         std::polar(1.0, M_PI * eps_tilde) * ((1 + c) / 2);
}

namespace detail {

// Orthonormalize eigenvector clusters that share an eigenvalue (within tol).
inline void orthonormalize_clusters(std::array<Complex, 3>& lambdas,
                                    std::array<CVector, 3>& vectors,
                                    double tol) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < i; ++j) {
      if (std::abs(lambdas[i] - lambdas[j]) < tol) {
        Complex overlap = vectors[j].adjoint() * vectors[i];
        vectors[i] -= overlap * vectors[j];
        vectors[i] /= vectors[i].norm();
      }
    }
  }
}

}  // namespace detail

inline Eigensystem eigensystem(double theta, double eps_tilde) {
  constexpr double kDegenerateTol = 1e-8;
  Eigensystem out;
  out.a = coefficient_a(theta, eps_tilde);
  const Complex u = std::polar(1.0, M_PI * eps_tilde);
  const CubicRoots cubic = solve_cubic(-out.a, u * std::conj(out.a), -u);
  out.lambdas = cubic.roots;

  const auto any_pair_close = [](const std::array<Complex, 3>& lam,
                                 double tol) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (std::abs(lam[i] - lam[j]) < tol) return true;
    return false;
  };
  out.degenerate = any_pair_close(out.lambdas, kDegenerateTol);

  const double c = std::cos(theta), s = std::sin(theta);
  const CMatrix g3 = detail::reduce_from_theta(theta, eps_tilde).g3;
  bool closed_form_ok = !out.degenerate && cubic.precise;
  if (closed_form_ok) {
    for (int i = 0; i < 3; ++i) {
      const Complex lam = out.lambdas[i];
      const Complex denom = (1.0 + c) - lam * (1.0 + 3.0 * c - 2.0 * lam);
      if (std::abs(denom) < 1e-10) {
        closed_form_ok = false;
        break;
      }
      const Complex pre = u * (std::abs(denom) / denom);
      CVector v(3);
      v << std::sqrt(2.0) * (1.0 - lam) * s * pre,
          -(1.0 + lam) * (1.0 - c) * pre, Complex{std::abs(denom), 0};
      v /= v.norm();
      // A clustered spectrum can pass the pairwise check when root scatter
      // exceeds the true splitting, so accept the closed form only if the
      // vector actually solves the eigenproblem.
      if ((g3 * v - lam * v).norm() > 1e-8) {
        closed_form_ok = false;
        break;
      }
      out.vectors[i] = v;
    }
  }
  if (!closed_form_ok) {
    auto pairs = eig_unitary3(g3);
    for (int i = 0; i < 3; ++i) {
      out.lambdas[i] = pairs[i].first;
      out.vectors[i] = pairs[i].second;
    }
    out.degenerate = any_pair_close(out.lambdas, kDegenerateTol);
    detail::orthonormalize_clusters(out.lambdas, out.vectors, kDegenerateTol);
  }
  return out;
}

inline CVector final_state(double theta, double eps_tilde, std::size_t t) {
  const Eigensystem es = eigensystem(theta, eps_tilde);
  const CVector psi0 = detail::reduce_from_theta(theta, eps_tilde).initial;
  CVector psi = CVector::Zero(3);
  for (int j = 0; j < 3; ++j) {
    const Complex coef = (es.vectors[j].adjoint() * psi0)(0);
    // Unit-modulus eigenvalues are powered through the phase so that large t
    // does not drift off the unit circle.
    const Complex lam_t =
        std::polar(1.0, static_cast<double>(t) * std::arg(es.lambdas[j]));
    psi += lam_t * coef * es.vectors[j];
  }
  return psi;
}

struct ClassProbs {
  double p_class0;
  double p_class_eps;
  double p_fail;
};

inline ClassProbs success_probs(std::size_t n, std::size_t m, double eps_tilde,
                                std::size_t t) {
  detail::validate_class_split(n, m);
  const CVector psi = final_state(grover_angle(n, m), eps_tilde, t);
  return {std::norm(psi(1)), std::norm(psi(2)), std::norm(psi(0))};
}

// One diagonalization, then every t in O(1): the per-step trace used by the
// sweep commands and the m-scaling study.
inline std::vector<ClassProbs> success_probs_trace(std::size_t n, std::size_t m,
                                                   double eps_tilde,
                                                   std::size_t t_max) {
  detail::validate_class_split(n, m);
  const double theta = grover_angle(n, m);
  const Eigensystem es = eigensystem(theta, eps_tilde);
  const CVector psi0 = detail::reduce_from_theta(theta, eps_tilde).initial;
  std::array<Complex, 3> coef;
  std::array<double, 3> phase;
  for (int j = 0; j < 3; ++j) {
    coef[j] = (es.vectors[j].adjoint() * psi0)(0);
    phase[j] = std::arg(es.lambdas[j]);
  }
  std::vector<ClassProbs> out;
  out.reserve(t_max + 1);
  for (std::size_t t = 0; t <= t_max; ++t) {
    CVector psi = CVector::Zero(3);
    for (int j = 0; j < 3; ++j)
      psi += std::polar(1.0, static_cast<double>(t) * phase[j]) * coef[j] *
             es.vectors[j];
    out.push_back({std::norm(psi(1)), std::norm(psi(2)), std::norm(psi(0))});
  }
  return out;
}

}  // namespace rgrover
