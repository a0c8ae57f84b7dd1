#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "rgrover/errors.hpp"

namespace rgrover {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

// Principal argument in (-pi, pi]; std::arg returns -pi for some inputs on
// the negative real axis, which would make sort order ambiguous there.
inline double principal_arg(Complex z) {
  double a = std::arg(z);
  if (a == -M_PI) a = M_PI;
  return a;
}

namespace detail {

inline bool arg_then_modulus_less(Complex x, Complex y) {
  double ax = principal_arg(x), ay = principal_arg(y);
  if (ax != ay) return ax < ay;
  return std::abs(x) < std::abs(y);
}

// Eigenvalues of a general (not necessarily unitary) 3x3 complex matrix.
inline std::array<Complex, 3> eig3_values(const Eigen::Matrix3cd& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(m, false);
  std::array<Complex, 3> out{solver.eigenvalues()(0), solver.eigenvalues()(1),
                             solver.eigenvalues()(2)};
  std::sort(out.begin(), out.end(), arg_then_modulus_less);
  return out;
}

}  // namespace detail

inline bool is_unitary(const CMatrix& u, double tol = kDefaultTol) {
  if (u.rows() != u.cols())
    throw DimensionMismatch("is_unitary expects a square matrix");
  CMatrix gram = u.adjoint() * u;
  gram -= CMatrix::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff() < tol;
}

struct CubicRoots {
  std::array<Complex, 3> roots;  // sorted by principal argument, then modulus
  bool precise;                  // false if some residual exceeds tolerance
};

// Roots of lambda^3 + c2 lambda^2 + c1 lambda + c0 = 0. Closed form on the
// depressed cubic; near a vanishing discriminant (repeated roots) the closed
// form loses accuracy, so the roots are recomputed as eigenvalues of the
// companion matrix instead.
inline CubicRoots solve_cubic(Complex c2, Complex c1, Complex c0) {
  const double residual_limit = 1e-10 * std::max(1.0, std::abs(c0));
  auto residual_ok = [&](const std::array<Complex, 3>& rs) {
    for (Complex r : rs)
      if (std::abs(((r + c2) * r + c1) * r + c0) >= residual_limit) return false;
    return true;
  };

  const Complex p = c1 - c2 * c2 / 3.0;
  const Complex q = (2.0 / 27.0) * c2 * c2 * c2 - c2 * c1 / 3.0 + c0;
  const Complex disc = 0.25 * q * q + p * p * p / 27.0;
  const double disc_scale =
      std::max(0.25 * std::norm(q), std::pow(std::abs(p), 3) / 27.0);

  std::array<Complex, 3> roots{};
  bool closed_form_valid = std::abs(disc) >= 1e-12 * std::max(1.0, disc_scale);
  if (closed_form_valid) {
    Complex s = std::sqrt(disc);
    // Pick the branch that avoids cancellation in -q/2 +- s.
    Complex u3 = (std::abs(-q / 2.0 + s) >= std::abs(-q / 2.0 - s))
                     ? -q / 2.0 + s
                     : -q / 2.0 - s;
    if (u3 == Complex{0.0, 0.0}) {
      roots.fill(-c2 / 3.0);
    } else {
      const Complex u = std::pow(u3, 1.0 / 3.0);
      const Complex v = -p / (3.0 * u);
      const Complex w{-0.5, std::sqrt(3.0) / 2.0};
      Complex uk = u, vk = v;
      for (int k = 0; k < 3; ++k) {
        roots[k] = uk + vk - c2 / 3.0;
        uk *= w;
        vk *= std::conj(w);
      }
    }
    closed_form_valid = residual_ok(roots);
  }
  if (!closed_form_valid) {
    Eigen::Matrix3cd companion;
    companion << Complex{0, 0}, Complex{0, 0}, -c0,  //
        Complex{1, 0}, Complex{0, 0}, -c1,           //
        Complex{0, 0}, Complex{1, 0}, -c2;
    roots = detail::eig3_values(companion);
  }
  std::sort(roots.begin(), roots.end(), detail::arg_then_modulus_less);
  return CubicRoots{roots, residual_ok(roots)};
}

using EigenPair = std::pair<Complex, CVector>;

// Eigendecomposition of a 3x3 unitary matrix, pairs sorted like solve_cubic
// roots. Eigenvectors are unit norm; vectors of a (numerically) degenerate
// eigenvalue cluster are not orthogonalized here.
inline std::array<EigenPair, 3> eig_unitary3(const CMatrix& u,
                                             double tol = kDefaultTol) {
  if (u.rows() != 3 || u.cols() != 3)
    throw DimensionMismatch("eig_unitary3 expects a 3x3 matrix");
  if (!is_unitary(u, tol)) throw NotUnitary("input fails the unitarity check");
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(u, true);
  std::array<EigenPair, 3> pairs;
  for (int i = 0; i < 3; ++i) {
    CVector v = solver.eigenvectors().col(i);
    v /= v.norm();
    pairs[i] = {solver.eigenvalues()(i), std::move(v)};
  }
  std::sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    return detail::arg_then_modulus_less(a.first, b.first);
  });
  return pairs;
}

}  // namespace rgrover
