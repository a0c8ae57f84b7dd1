#include <cmath>

#include <gtest/gtest.h>

#include "rgrover/coherence.hpp"

namespace {

using rgrover::Complex;
using rgrover::CVector;
using rgrover::DensityState;

DensityState pure(const CVector& v) {
  DensityState rho;
  rho.branches.push_back({1.0, v});
  return rho;
}

TEST(L1Coherence, UniformPureStateOverSubset) {
  // For a flat k-subset of a flat pure state, off/trace = k - 1.
  const CVector v = rgrover::uniform_initial(8);
  EXPECT_NEAR(rgrover::l1_coherence(pure(v), {0, 1}), 1.0, 1e-13);
  EXPECT_NEAR(rgrover::l1_coherence(pure(v), {0, 3, 5}), 2.0, 1e-13);
}

TEST(L1Coherence, BasisStateHasNone) {
  CVector v = CVector::Zero(4);
  v(1) = 1.0;
  EXPECT_NEAR(rgrover::l1_coherence(pure(v), {0, 1, 2}), 0.0, 1e-15);
}

TEST(L1Coherence, HandComputedTwoByTwo) {
  CVector v = CVector::Zero(3);
  v(0) = 0.6;
  v(1) = Complex(0.0, 0.8);
  // Block: diag(0.36, 0.64), off-diagonals of modulus 0.48 each.
  EXPECT_NEAR(rgrover::l1_coherence(pure(v), {0, 1}), 0.96, 1e-13);
}

TEST(L1Coherence, MixtureAveragesBeforeTakingModulus) {
  // Two branches with opposite off-diagonal signs cancel: a classical
  // mixture of |+> and |-> has no coherence although each branch does.
  CVector plus(2), minus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  minus << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  DensityState rho;
  rho.branches.push_back({0.5, plus});
  rho.branches.push_back({0.5, minus});
  EXPECT_NEAR(rgrover::l1_coherence(rho, {0, 1}), 0.0, 1e-14);
  EXPECT_NEAR(rgrover::l1_coherence(pure(plus), {0, 1}), 1.0, 1e-14);
}

TEST(L1Coherence, RejectsEmptyOrMasslessSubsets) {
  const CVector v = rgrover::uniform_initial(4);
  EXPECT_THROW(rgrover::l1_coherence(pure(v), {}), rgrover::ZeroMass);
  CVector w = CVector::Zero(4);
  w(3) = 1.0;
  EXPECT_THROW(rgrover::l1_coherence(pure(w), {0, 1}), rgrover::ZeroMass);
}

TEST(IncoherentInitial, BranchStructure) {
  const std::size_t n = 1000;
  const auto rho = rgrover::incoherent_initial(n);
  ASSERT_EQ(rho.branches.size(), 2u);
  const double unmarked = std::sqrt(999.0 / 998.0) / std::sqrt(1000.0);
  for (int b = 0; b < 2; ++b) {
    EXPECT_DOUBLE_EQ(rho.branches[b].weight, 0.5);
    EXPECT_NEAR(rho.branches[b].state.norm(), 1.0, 1e-12);
    const std::size_t own = static_cast<std::size_t>(b);
    const std::size_t other = 1 - own;
    EXPECT_NEAR(std::abs(rho.branches[b].state(own)), 1.0 / std::sqrt(1000.0), 1e-15);
    EXPECT_NEAR(std::abs(rho.branches[b].state(other)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(rho.branches[b].state(500)), unmarked, 1e-15);
  }
  EXPECT_THROW(rgrover::incoherent_initial(2), rgrover::InvalidCounts);
}

TEST(IncoherentInitial, NoItemCoherenceButSameStartProbability) {
  const auto rho = rgrover::incoherent_initial(1000);
  EXPECT_NEAR(rgrover::l1_coherence(rho, {0, 1}), 0.0, 1e-14);
  const auto trace = rgrover::evolve_density(
      rho, rgrover::PriorityOracle(1000, {{0, 0.0}, {1, -0.3}}), 0);
  EXPECT_NEAR(trace.steps[0].marked[0], 1.0 / 2000.0, 1e-15);
  EXPECT_NEAR(trace.steps[0].marked[1], 1.0 / 2000.0, 1e-15);
}

TEST(IncoherentFidelity, ClosedFormAndArgmax) {
  const std::size_t n = 1000;
  EXPECT_NEAR(rgrover::incoherent_fidelity(n, 0), 1.0 / 1000.0, 1e-15);
  const auto best = rgrover::best_incoherent_fidelity(n);
  EXPECT_EQ(best.a_star, 999u);
  EXPECT_NEAR(best.f_star, (997003.0 + 6.0 * std::sqrt(110778.0)) / 1e6, 1e-14);
  // Neighbors are strictly worse.
  EXPECT_GT(best.f_star, rgrover::incoherent_fidelity(n, 998));
  EXPECT_GT(best.f_star, rgrover::incoherent_fidelity(n, 1000));
}

TEST(DefaultEpsGrid, EndpointsAndSize) {
  const auto grid = rgrover::default_eps_grid();
  ASSERT_EQ(grid.size(), 100u);
  EXPECT_DOUBLE_EQ(grid.front(), -1.0);
  EXPECT_DOUBLE_EQ(grid.back(), -0.01);
  EXPECT_LT(grid[0], grid[1]);
}

TEST(CoherenceSweep, PinnedSpotValues) {
  const auto report = rgrover::coherence_sweep({-0.3, -0.5, -0.7}, 1000);
  ASSERT_EQ(report.points.size(), 3u);

  // eps = -0.3
  EXPECT_EQ(report.points[0].t_coherent[0], 24u);
  EXPECT_EQ(report.points[0].t_incoherent[0], 25u);
  EXPECT_NEAR(report.points[0].p_opt[0], 0.994136722941945, 1e-9);
  EXPECT_NEAR(report.points[0].h_opt[0], 0.993344012623075, 1e-9);
  EXPECT_EQ(report.points[0].t_coherent[1], 3u);
  EXPECT_EQ(report.points[0].t_incoherent[1], 3u);

  // eps = -0.5
  EXPECT_EQ(report.points[1].t_coherent[0], 24u);
  EXPECT_EQ(report.points[1].t_incoherent[0], 25u);
  EXPECT_EQ(report.points[1].t_coherent[1], 1u);
  EXPECT_EQ(report.points[1].t_incoherent[1], 2u);
  EXPECT_NEAR(report.points[1].p_opt[1], 0.004972040000000, 1e-12);

  // eps = -0.7
  EXPECT_EQ(report.points[2].t_coherent[0], 24u);
  EXPECT_EQ(report.points[2].t_incoherent[0], 25u);
  EXPECT_EQ(report.points[2].t_coherent[1], 1u);
  EXPECT_EQ(report.points[2].t_incoherent[1], 1u);

  // The coherent start beats the mixture on the top item at each spot.
  for (const auto& pt : report.points) {
    EXPECT_GE(pt.p_opt[0] / pt.h_opt[0], 1.0);
    EXPECT_LE(pt.t_coherent[0], pt.t_incoherent[0]);
    EXPECT_LE(pt.t_coherent[1], pt.t_incoherent[1]);
  }
}

}  // namespace
