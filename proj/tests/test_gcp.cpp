#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rgrover/gcp.hpp"

namespace {

using rgrover::Complex;
using rgrover::CVector;
using rgrover::gcp::Assignment;
using rgrover::gcp::RewardGraph;

RewardGraph path_graph() {
  RewardGraph g;
  g.vertices = 2;
  g.colors = 2;
  g.edges = {{0, 1}};
  g.rewards = {{1.0, 2.0}, {3.0, 1.0}};
  return g;
}

const char* kPathText =
    "# two vertices, one edge\n"
    "vertices 2\n"
    "colors 2\n"
    "edge 1 2\n"
    "reward 1 1 1\n"
    "reward 1 2 2\n"
    "reward 2 1 3\n"
    "reward 2 2 1\n";

TEST(ValidateGraph, CatchesStructuralMistakes) {
  RewardGraph g = path_graph();
  EXPECT_NO_THROW(rgrover::gcp::validate_graph(g));

  RewardGraph empty;
  EXPECT_THROW(rgrover::gcp::validate_graph(empty), rgrover::InvalidCounts);

  RewardGraph short_rows = path_graph();
  short_rows.rewards.pop_back();
  EXPECT_THROW(rgrover::gcp::validate_graph(short_rows), rgrover::DimensionMismatch);

  RewardGraph short_cols = path_graph();
  short_cols.rewards[0].pop_back();
  EXPECT_THROW(rgrover::gcp::validate_graph(short_cols), rgrover::DimensionMismatch);

  RewardGraph bad_edge = path_graph();
  bad_edge.edges[0] = {0, 5};
  EXPECT_THROW(rgrover::gcp::validate_graph(bad_edge), rgrover::OutOfRange);

  RewardGraph loop = path_graph();
  loop.edges[0] = {1, 1};
  EXPECT_THROW(rgrover::gcp::validate_graph(loop), rgrover::OutOfRange);
}

TEST(AssignmentIndexing, LittleEndianRoundTrip) {
  const RewardGraph g = path_graph();
  EXPECT_EQ(rgrover::gcp::assignment_count(g), 4u);

  const Assignment a1 = rgrover::gcp::assignment_at(g, 1);
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0], 2u);
  EXPECT_EQ(a1[1], 1u);

  for (std::uint64_t idx = 0; idx < 4; ++idx)
    EXPECT_EQ(rgrover::gcp::index_of(g, rgrover::gcp::assignment_at(g, idx)), idx);

  EXPECT_THROW(rgrover::gcp::index_of(g, {1}), rgrover::DimensionMismatch);
  EXPECT_THROW(rgrover::gcp::index_of(g, {0, 1}), rgrover::OutOfRange);
  EXPECT_THROW(rgrover::gcp::index_of(g, {3, 1}), rgrover::OutOfRange);
}

TEST(AssignmentIndexing, RefusesOversizedSpaces) {
  RewardGraph g;
  g.vertices = 21;
  g.colors = 2;
  g.rewards.assign(21, std::vector<double>(2, 0.0));
  EXPECT_THROW(rgrover::gcp::assignment_count(g), rgrover::TooLarge);
}

TEST(Reward, EdgeVetoThenSum) {
  const RewardGraph g = path_graph();
  EXPECT_DOUBLE_EQ(rgrover::gcp::reward(g, {1, 1}), 0.0);
  EXPECT_DOUBLE_EQ(rgrover::gcp::reward(g, {2, 1}), 5.0);
  EXPECT_DOUBLE_EQ(rgrover::gcp::reward(g, {1, 2}), 2.0);
  EXPECT_DOUBLE_EQ(rgrover::gcp::reward(g, {2, 2}), 0.0);
  EXPECT_THROW(rgrover::gcp::reward(g, {3, 1}), rgrover::OutOfRange);

  const std::vector<double> all = rgrover::gcp::all_rewards(g);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_DOUBLE_EQ(all[1], 5.0);
  EXPECT_DOUBLE_EQ(rgrover::gcp::max_reward(g), 5.0);
}

TEST(PriorityParams, LinearInReward) {
  const auto eps = rgrover::gcp::priority_params(path_graph());
  ASSERT_EQ(eps.size(), 4u);
  EXPECT_DOUBLE_EQ(eps[0], -1.0);
  EXPECT_DOUBLE_EQ(eps[1], 0.0);
  EXPECT_DOUBLE_EQ(eps[2], -0.6);
  EXPECT_DOUBLE_EQ(eps[3], -1.0);

  RewardGraph hopeless = path_graph();
  hopeless.rewards = {{0.0, 0.0}, {0.0, 0.0}};
  EXPECT_THROW(rgrover::gcp::priority_params(hopeless), rgrover::ZeroMax);
  EXPECT_THROW(rgrover::gcp::gcp_oracle_direct(hopeless), rgrover::ZeroMax);
}

TEST(OracleDirect, PhasesTrackReward) {
  const CVector diag = rgrover::gcp::gcp_oracle_direct(path_graph());
  ASSERT_EQ(diag.size(), 4);
  EXPECT_LT(std::abs(diag(0) - Complex(1.0, 0.0)), 1e-15);
  EXPECT_LT(std::abs(diag(1) - Complex(-1.0, 0.0)), 1e-15);
  EXPECT_LT(std::abs(diag(2) - std::polar(1.0, 0.4 * M_PI)), 1e-15);
  EXPECT_LT(std::abs(diag(3) - Complex(1.0, 0.0)), 1e-15);
}

TEST(OracleAncilla, ReproducesDirectDiagonalExactly) {
  const RewardGraph g = path_graph();
  const auto oracle = rgrover::gcp::gcp_oracle_ancilla(g, 3);
  const CVector direct = rgrover::gcp::gcp_oracle_direct(g);
  EXPECT_LT((oracle.diag - direct).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(oracle.ancilla_residual, 1e-12);
}

TEST(OracleAncilla, RejectsUnrepresentableRewards) {
  const RewardGraph g = path_graph();
  // 2^2 = 4 slots cannot hold the reward 5.
  EXPECT_THROW(rgrover::gcp::gcp_oracle_ancilla(g, 2), rgrover::NotExactlyRepresentable);

  RewardGraph frac = path_graph();
  frac.rewards[0][0] = 1.5;
  EXPECT_THROW(rgrover::gcp::gcp_oracle_ancilla(frac, 4), rgrover::NotExactlyRepresentable);

  EXPECT_THROW(rgrover::gcp::gcp_oracle_ancilla(g, 0), rgrover::OutOfRange);
  EXPECT_THROW(rgrover::gcp::gcp_oracle_ancilla(g, 21), rgrover::OutOfRange);
}

TEST(GcpSearch, OneRoundFavoursTheBestColouring) {
  const RewardGraph g = path_graph();
  const auto probs = rgrover::gcp::gcp_search(g, 1);
  ASSERT_EQ(probs.size(), 4u);

  // Literal one-round evolution with the hand-listed rewards (0, 5, 2, 0).
  const double jmax = 5.0;
  std::vector<Complex> state(4, Complex(0.5, 0.0));
  const double js[4] = {0.0, 5.0, 2.0, 0.0};
  Complex mean(0.0, 0.0);
  for (int i = 0; i < 4; ++i) {
    state[static_cast<std::size_t>(i)] *= std::polar(1.0, M_PI * js[i] / jmax);
    mean += state[static_cast<std::size_t>(i)] / 4.0;
  }
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Complex amp = 2.0 * mean - state[static_cast<std::size_t>(i)];
    EXPECT_NEAR(probs[static_cast<std::size_t>(i)], std::norm(amp), 1e-14) << "i=" << i;
    total += probs[static_cast<std::size_t>(i)];
  }
  EXPECT_NEAR(total, 1.0, 1e-13);
  EXPECT_NEAR(probs[1], 0.740881, 1e-5);
  EXPECT_GT(probs[1], 0.7);

  const auto flat = rgrover::gcp::gcp_search(g, 0);
  for (double p : flat) EXPECT_DOUBLE_EQ(p, 0.25);
  EXPECT_THROW(rgrover::gcp::gcp_search(g, -1), rgrover::OutOfRange);
}

TEST(ParseInstance, ReadsAnnotatedText) {
  const RewardGraph g = rgrover::gcp::parse_instance(std::string(kPathText));
  EXPECT_EQ(g.vertices, 2u);
  EXPECT_EQ(g.colors, 2u);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0].first, 0u);
  EXPECT_EQ(g.edges[0].second, 1u);
  EXPECT_DOUBLE_EQ(g.rewards[0][1], 2.0);
  EXPECT_DOUBLE_EQ(g.rewards[1][0], 3.0);

  // Omitted rewards default to zero.
  const RewardGraph bare =
      rgrover::gcp::parse_instance(std::string("vertices 2\ncolors 3\nedge 1 2\n"));
  EXPECT_DOUBLE_EQ(bare.rewards[1][2], 0.0);
}

TEST(ParseInstance, RejectsMalformedText) {
  using rgrover::gcp::parse_instance;
  EXPECT_THROW(parse_instance(std::string("")), rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\n")), rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\ncolors 2\nvertices 2\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("edge 1 2\nvertices 2\ncolors 2\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\nreward 1 1 1\ncolors 2\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\ncolors 2\nedge 1 1\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\ncolors 2\nedge 1 3\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\ncolors 2\nreward 1 3 1\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\ncolors 2\nreward 1 1 -2\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\ncolors 2\nreward 1 1 abc\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 0\ncolors 2\n")),
               rgrover::ParseError);
  EXPECT_THROW(parse_instance(std::string("vertices 2\ncolors 2\nfrobnicate\n")),
               rgrover::ParseError);
}

}  // namespace
