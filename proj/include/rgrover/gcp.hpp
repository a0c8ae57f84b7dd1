#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rgrover/errors.hpp"
#include "rgrover/linalg.hpp"
#include "rgrover/simulator.hpp"

namespace rgrover::gcp {

/// Vertex-colouring instance with per-vertex colour rewards.  A colouring
/// scores the sum of its picked rewards, voided entirely when any edge is
/// monochromatic.  Vertices and edges are stored zero-based; colours are
/// one-based everywhere, matching the text format.
struct RewardGraph {
  std::size_t vertices = 0;
  std::size_t colors = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<double>> rewards;  // [vertex][color-1]
};

using Assignment = std::vector<std::size_t>;

constexpr std::uint64_t kMaxSearchSpace = std::uint64_t{1} << 20;

inline void validate_graph(const RewardGraph& g) {
  if (g.vertices == 0 || g.colors == 0) throw InvalidCounts("graph needs vertices and colors");
  if (g.rewards.size() != g.vertices) throw DimensionMismatch("reward table rows != vertices");
  for (const auto& row : g.rewards)
    if (row.size() != g.colors) throw DimensionMismatch("reward table cols != colors");
  for (const auto& [u, v] : g.edges) {
    if (u >= g.vertices || v >= g.vertices) throw OutOfRange("edge endpoint outside graph");
    if (u == v) throw OutOfRange("self-loop edge");
  }
}

/// Number of colourings, i.e. the search-space dimension.
inline std::uint64_t assignment_count(const RewardGraph& g) {
  validate_graph(g);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < g.vertices; ++i) {
    if (count > kMaxSearchSpace / g.colors)
      throw TooLarge("assignment space exceeds " + std::to_string(kMaxSearchSpace));
    count *= g.colors;
  }
  return count;
}

/// Colourings are indexed little-endian in base |colors|: vertex 0 is the
/// least significant digit.
inline Assignment assignment_at(const RewardGraph& g, std::uint64_t index) {
  Assignment a(g.vertices);
  for (std::size_t i = 0; i < g.vertices; ++i) {
    a[i] = static_cast<std::size_t>(index % g.colors) + 1;
    index /= g.colors;
  }
  return a;
}

inline std::uint64_t index_of(const RewardGraph& g, const Assignment& a) {
  if (a.size() != g.vertices) throw DimensionMismatch("assignment length != vertices");
  std::uint64_t index = 0;
  std::uint64_t stride = 1;
  for (std::size_t i = 0; i < g.vertices; ++i) {
    if (a[i] < 1 || a[i] > g.colors) throw OutOfRange("color outside palette");
    index += (a[i] - 1) * stride;
    stride *= g.colors;
  }
  return index;
}

inline double reward(const RewardGraph& g, const Assignment& a) {
  if (a.size() != g.vertices) throw DimensionMismatch("assignment length != vertices");
  for (const auto& [u, v] : g.edges)
    if (a[u] == a[v]) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < g.vertices; ++i) {
    if (a[i] < 1 || a[i] > g.colors) throw OutOfRange("color outside palette");
    total += g.rewards[i][a[i] - 1];
  }
  return total;
}

inline std::vector<double> all_rewards(const RewardGraph& g) {
  const std::uint64_t count = assignment_count(g);
  std::vector<double> values(count);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    values[idx] = reward(g, assignment_at(g, idx));
  return values;
}

inline double max_reward(const RewardGraph& g) {
  double best = 0.0;
  for (double j : all_rewards(g)) best = std::max(best, j);
  return best;
}

/// Priority parameter per colouring: 0 for a maximal-reward colouring,
/// falling linearly to -1 at reward 0.
inline std::vector<double> priority_params(const RewardGraph& g) {
  std::vector<double> values = all_rewards(g);
  double best = 0.0;
  for (double j : values) best = std::max(best, j);
  if (best <= 0.0) throw ZeroMax("no colouring has positive reward");
  // j/best - 1 rather than -(1 - j/best): the best colouring gets +0, not -0.
  for (double& j : values) j = j / best - 1.0;
  return values;
}

/// Diagonal of the reward oracle: entry e^{i pi J/Jmax} per colouring, so a
/// maximal-reward colouring gets -1 and a voided one gets +1.
inline CVector gcp_oracle_direct(const RewardGraph& g) {
  std::vector<double> values = all_rewards(g);
  double best = 0.0;
  for (double j : values) best = std::max(best, j);
  if (best <= 0.0) throw ZeroMax("no colouring has positive reward");
  CVector diag(static_cast<Eigen::Index>(values.size()));
  for (std::size_t idx = 0; idx < values.size(); ++idx)
    diag(static_cast<Eigen::Index>(idx)) = std::polar(1.0, M_PI * values[idx] / best);
  return diag;
}

struct AncillaOracle {
  CVector diag;
  double ancilla_residual = 0.0;
};

/// Simulates the oracle the way hardware would run it: two `ancilla_bits`-wide
/// registers take the reward by XOR arithmetic, a ladder of doubly controlled
/// phase rotations kicks back e^{i pi J/Jmax}, and the arithmetic is undone.
/// Requires every reward to be an integer below 2^ancilla_bits.
inline AncillaOracle gcp_oracle_ancilla(const RewardGraph& g, int ancilla_bits) {
  if (ancilla_bits < 1 || ancilla_bits > 20) throw OutOfRange("ancilla_bits out of range");
  const std::uint64_t n = assignment_count(g);
  const std::uint64_t a_dim = std::uint64_t{1} << ancilla_bits;
  if (n > kMaxSearchSpace / a_dim / a_dim)
    throw TooLarge("ancilla simulation exceeds " + std::to_string(kMaxSearchSpace) + " slots");

  std::vector<double> values = all_rewards(g);
  double best = 0.0;
  for (double j : values) best = std::max(best, j);
  if (best <= 0.0) throw ZeroMax("no colouring has positive reward");
  std::vector<std::uint64_t> integer_rewards(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const double j = values[idx];
    const double rounded = std::round(j);
    if (std::abs(j - rounded) >= 1e-9 || rounded < 0 || rounded >= static_cast<double>(a_dim))
      throw NotExactlyRepresentable("reward " + std::to_string(j) + " needs more ancilla bits");
    integer_rewards[idx] = static_cast<std::uint64_t>(rounded);
  }

  const auto slot = [a_dim](std::uint64_t a, std::uint64_t b1, std::uint64_t b2) {
    return (a * a_dim + b1) * a_dim + b2;
  };
  CVector state = CVector::Zero(static_cast<Eigen::Index>(n * a_dim * a_dim));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::uint64_t a = 0; a < n; ++a)
    state(static_cast<Eigen::Index>(slot(a, 0, 0))) = amp;

  const auto xor_register = [&](bool second) {
    CVector next = CVector::Zero(state.size());
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b1 = 0; b1 < a_dim; ++b1)
        for (std::uint64_t b2 = 0; b2 < a_dim; ++b2) {
          const std::uint64_t j = integer_rewards[a];
          const std::uint64_t nb1 = second ? b1 : (b1 ^ j);
          const std::uint64_t nb2 = second ? (b2 ^ j) : b2;
          next(static_cast<Eigen::Index>(slot(a, nb1, nb2))) =
              state(static_cast<Eigen::Index>(slot(a, b1, b2)));
        }
    state.swap(next);
  };

  xor_register(false);
  xor_register(true);
  for (int k = 1; k <= ancilla_bits; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (k - 1);
    const Complex phase = std::polar(1.0, static_cast<double>(bit) * M_PI / best);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b1 = 0; b1 < a_dim; ++b1) {
        if (!(b1 & bit)) continue;
        for (std::uint64_t b2 = 0; b2 < a_dim; ++b2)
          if (b2 & bit) state(static_cast<Eigen::Index>(slot(a, b1, b2))) *= phase;
      }
  }
  xor_register(true);
  xor_register(false);

  AncillaOracle result;
  result.diag.resize(static_cast<Eigen::Index>(n));
  const double scale = std::sqrt(static_cast<double>(n));
  double leaked = 0.0;
  for (std::uint64_t a = 0; a < n; ++a) {
    result.diag(static_cast<Eigen::Index>(a)) =
        scale * state(static_cast<Eigen::Index>(slot(a, 0, 0)));
    for (std::uint64_t b1 = 0; b1 < a_dim; ++b1)
      for (std::uint64_t b2 = 0; b2 < a_dim; ++b2)
        if (b1 != 0 || b2 != 0)
          leaked += std::norm(state(static_cast<Eigen::Index>(slot(a, b1, b2))));
  }
  result.ancilla_residual = std::sqrt(leaked);
  return result;
}

/// Amplitude-amplified colouring distribution after t rounds.
inline std::vector<double> gcp_search(const RewardGraph& g, long t) {
  if (t < 0) throw OutOfRange("round count must be nonnegative");
  const CVector diag = gcp_oracle_direct(g);
  const auto n = diag.size();
  CVector state = CVector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  for (long round = 0; round < t; ++round) {
    state = diag.cwiseProduct(state);
    state = apply_diffusion(state);
  }
  std::vector<double> probs(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) probs[static_cast<std::size_t>(i)] = std::norm(state(i));
  return probs;
}

/// Text format: `vertices N` and `colors K` first, then any number of
/// `edge u v` and `reward v c value` lines, all indices one-based.  Missing
/// rewards default to zero; `#` starts a comment.
inline RewardGraph parse_instance(std::istream& in) {
  RewardGraph g;
  bool have_vertices = false;
  bool have_colors = false;
  std::string line;
  const auto parse_size = [](const std::string& token) -> std::size_t {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError("expected integer, got '" + token + "'");
    }
    if (used != token.size() || value < 1)
      throw ParseError("expected positive integer, got '" + token + "'");
    return static_cast<std::size_t>(value);
  };
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(tok);
    if (fields.empty()) continue;
    if (fields[0] == "vertices") {
      if (fields.size() != 2 || have_vertices) throw ParseError("bad vertices line");
      g.vertices = parse_size(fields[1]);
      have_vertices = true;
    } else if (fields[0] == "colors") {
      if (fields.size() != 2 || have_colors) throw ParseError("bad colors line");
      g.colors = parse_size(fields[1]);
      have_colors = true;
    } else if (fields[0] == "edge") {
      if (!have_vertices) throw ParseError("edge before vertices");
      if (fields.size() != 3) throw ParseError("bad edge line");
      const std::size_t u = parse_size(fields[1]);
      const std::size_t v = parse_size(fields[2]);
      if (u > g.vertices || v > g.vertices) throw ParseError("edge endpoint outside graph");
      if (u == v) throw ParseError("self-loop edge");
      g.edges.emplace_back(u - 1, v - 1);
    } else if (fields[0] == "reward") {
      if (!have_vertices || !have_colors) throw ParseError("reward before vertices/colors");
      if (fields.size() != 4) throw ParseError("bad reward line");
      const std::size_t v = parse_size(fields[1]);
      const std::size_t c = parse_size(fields[2]);
      if (v > g.vertices || c > g.colors) throw ParseError("reward index outside graph");
      if (g.rewards.empty()) g.rewards.assign(g.vertices, std::vector<double>(g.colors, 0.0));
      double value = 0;
      std::size_t used = 0;
      try {
        value = std::stod(fields[3], &used);
      } catch (const std::exception&) {
        throw ParseError("bad reward value '" + fields[3] + "'");
      }
      if (used != fields[3].size() || !(value >= 0) || !std::isfinite(value))
        throw ParseError("reward value must be finite and nonnegative");
      g.rewards[v - 1][c - 1] = value;
    } else {
      throw ParseError("unknown directive '" + fields[0] + "'");
    }
  }
  if (!have_vertices || !have_colors) throw ParseError("instance needs vertices and colors");
  if (g.rewards.empty()) g.rewards.assign(g.vertices, std::vector<double>(g.colors, 0.0));
  validate_graph(g);
  return g;
}

inline RewardGraph parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

}  // namespace rgrover::gcp
