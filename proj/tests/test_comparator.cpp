#include <cmath>

#include <gtest/gtest.h>

#include "rgrover/comparator.hpp"
#include "rgrover/simulator.hpp"

namespace {

using rgrover::amplitude_oracle;
using rgrover::amplitude_probs;
using rgrover::amplitude_query_count;
using rgrover::match_ratio;
using rgrover::ranked_probs_n8;
using rgrover::CVector;

TEST(AmplitudeOracle, IsAReflection) {
  for (double eps : {-0.9, -0.5, -0.1, 0.0, -1.0}) {
    const auto o = amplitude_oracle(eps);
    EXPECT_TRUE(rgrover::is_unitary(o));
    EXPECT_LT((o * o - rgrover::CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(),
              1e-12);
  }
  EXPECT_THROW(amplitude_oracle(0.5), rgrover::OutOfRange);
  EXPECT_THROW(amplitude_oracle(-1.2), rgrover::OutOfRange);
}

TEST(AmplitudeProbs, MatchesOneRoundSimulation) {
  for (int i = 0; i <= 98; ++i) {
    const double eps = -0.99 + 0.98 * i / 98.0;
    CVector state = rgrover::uniform_initial(8);
    state = amplitude_oracle(eps) * state;
    state = rgrover::apply_diffusion(state);
    const auto probs = amplitude_probs(eps);
    EXPECT_NEAR(std::norm(state(rgrover::kFirstItem)), probs.first, 1e-10)
        << "eps=" << eps;
    EXPECT_NEAR(std::norm(state(rgrover::kSecondItem)), probs.second, 1e-10)
        << "eps=" << eps;
  }
}

TEST(AmplitudeQueryCount, OneQuerySufficesAtNEight) {
  for (int i = 0; i <= 98; ++i) {
    const double eps = -0.99 + 0.98 * i / 98.0;
    EXPECT_EQ(amplitude_query_count(8, eps), 1) << "eps=" << eps;
  }
}

TEST(RankedProbsN8, MatchesTwoRoundSimulation) {
  for (int i = 0; i <= 100; ++i) {
    const double eps_tilde = -1.0 + i / 100.0;
    const rgrover::PriorityOracle oracle(
        8, {{rgrover::kFirstItem, 0.0}, {rgrover::kSecondItem, eps_tilde}});
    const auto trace = rgrover::evolve(oracle, 2);
    const auto probs = ranked_probs_n8(eps_tilde);
    EXPECT_NEAR(trace.steps[2].marked[0], probs.first, 1e-10)
        << "eps_tilde=" << eps_tilde;
    EXPECT_NEAR(trace.steps[2].marked[1], probs.second, 1e-10)
        << "eps_tilde=" << eps_tilde;
  }
}

TEST(RankedProbsN8, FullDemotionEndpoint) {
  const auto probs = ranked_probs_n8(-1.0);
  EXPECT_NEAR(probs.first, 484.0 / 512.0, 1e-15);
  EXPECT_NEAR(probs.second, 4.0 / 512.0, 1e-15);
}

TEST(RatioCurves, OppositeMonotonicity) {
  double prev_q = -1.0;
  double prev_p = 1e9;
  for (int i = 0; i <= 50; ++i) {
    const double x = -0.99 + 0.98 * i / 50.0;
    const auto q = amplitude_probs(x);
    const double qr = q.first / q.second;
    EXPECT_GT(qr, prev_q);
    prev_q = qr;
    const auto p = ranked_probs_n8(x);
    const double pr = p.first / p.second;
    EXPECT_LT(pr, prev_p);
    prev_p = pr;
  }
  EXPECT_NEAR(amplitude_probs(-0.99).first / amplitude_probs(-0.99).second,
              0.0577, 1e-3);
  EXPECT_GT(prev_q, 17.0);
  EXPECT_GT(ranked_probs_n8(-0.99).first / ranked_probs_n8(-0.99).second,
            100.0);
}

TEST(MatchRatio, EqualRatioPoint) {
  const auto row = match_ratio(1.0);
  EXPECT_NEAR(row.eps, -0.5, 1e-9);
  EXPECT_NEAR(row.eps_tilde, 0.0, 1e-9);
  EXPECT_NEAR(row.q_total, 1.0, 1e-9);
  EXPECT_NEAR(row.p_total, 0.25, 1e-9);
}

TEST(MatchRatio, RFourClosedForms) {
  const auto row = match_ratio(4.0);
  EXPECT_NEAR(row.eps, (2.0 * std::sqrt(7.0) - 19.0) / 74.0, 1e-10);
  EXPECT_NEAR(std::cos(M_PI * row.eps_tilde),
              (55.0 - 4.0 * std::sqrt(181.0)) / 3.0, 1e-10);
  EXPECT_NEAR(row.q_total, 0.99068, 1e-4);
  EXPECT_NEAR(row.p_total, 0.67030, 1e-4);
}

TEST(MatchRatio, LopsidedTargetPoint) {
  const auto row = match_ratio(16.81);
  EXPECT_NEAR(row.eps, (62.0 * std::sqrt(679.0) - 1879.0) / 22730.0, 1e-10);
  EXPECT_NEAR(std::cos(M_PI * row.eps_tilde),
              (11905.0 - 4.0 * std::sqrt(24935893.0)) / 11829.0, 1e-10);
  EXPECT_NEAR(row.eps_tilde, -0.738962, 1e-5);
  EXPECT_NEAR(row.q_total, 0.88418, 1e-4);
  EXPECT_NEAR(row.p_total, 0.97296, 1e-4);
  // Both sides really do sit at the requested ratio.
  const auto q = amplitude_probs(row.eps);
  EXPECT_NEAR(q.first / q.second, 16.81, 1e-8);
  const auto p = ranked_probs_n8(row.eps_tilde);
  EXPECT_NEAR(p.first / p.second, 16.81, 1e-8);
}

TEST(MatchRatio, RejectsUnattainableRatios) {
  EXPECT_THROW(match_ratio(0.5), rgrover::OutOfRange);
  try {
    match_ratio(20.0);
    FAIL() << "expected NoSolution";
  } catch (const rgrover::NoSolution& e) {
    EXPECT_NE(std::string(e.what()).find("attainable"), std::string::npos);
  }
}

}  // namespace
