// Reward-graph colouring on a two-vertex path: the best colouring gets the
// full sign flip and dominates after a single round.

#include <cstdio>

#include "rgrover/rgrover.hpp"

int main() {
  rgrover::gcp::RewardGraph graph;
  graph.vertices = 2;
  graph.colors = 2;
  graph.edges = {{0, 1}};
  graph.rewards = {{1.0, 2.0}, {3.0, 1.0}};

  const auto rewards = rgrover::gcp::all_rewards(graph);
  const auto eps = rgrover::gcp::priority_params(graph);
  const auto probs = rgrover::gcp::gcp_search(graph, 1);

  std::printf("colouring   reward   priority   P(after 1 round)\n");
  for (std::size_t idx = 0; idx < probs.size(); ++idx) {
    const auto a = rgrover::gcp::assignment_at(graph, idx);
    std::printf("   %zu:%zu      %5.1f   %8.2f   %16.6f\n", a[0], a[1], rewards[idx],
                eps[idx], probs[idx]);
  }

  std::size_t best = 0;
  for (std::size_t idx = 1; idx < probs.size(); ++idx)
    if (probs[idx] > probs[best]) best = idx;
  const auto a = rgrover::gcp::assignment_at(graph, best);
  std::printf("\nmost likely colouring: %zu:%zu (reward %.1f)\n", a[0], a[1], rewards[best]);
  return 0;
}
