// Two marked items with different priorities in a 256-item space: the full
// sign flip races ahead of the weakened one, and both engines agree.

#include <cstdio>

#include "rgrover/rgrover.hpp"

int main() {
  const std::size_t n = 256;
  const double eps = -0.3;
  const std::size_t t_max = 30;

  const auto trace = rgrover::evolve(rgrover::two_class_oracle(n, 2, eps), t_max);
  const auto reduced = rgrover::success_probs_trace(n, 2, eps, t_max);

  std::printf("  t   P(top item)   P(second item)   reduced top\n");
  for (std::size_t t = 0; t <= t_max; t += 3)
    std::printf("%3zu   %11.6f   %14.6f   %11.6f\n", t, trace.steps[t].marked[0],
                trace.steps[t].marked[1], reduced[t].p_class0);

  std::vector<double> top, second;
  for (const auto& row : trace.steps) {
    top.push_back(row.marked[0]);
    second.push_back(row.marked[1]);
  }
  const auto peak_top = rgrover::first_local_max(top);
  const auto peak_second = rgrover::first_local_max(second);
  std::printf("\ntop item peaks at t = %zu with P = %.6f\n", peak_top.t, peak_top.value);
  std::printf("second item peaks at t = %zu with P = %.6f\n", peak_second.t,
              peak_second.value);
  return 0;
}
