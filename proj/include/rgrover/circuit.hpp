#pragma once

#include <bit>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rgrover/errors.hpp"
#include "rgrover/linalg.hpp"

namespace rgrover {

enum class GateKind { X, H, Z, Ry, Rz, CNOT, Toffoli, ControlledRz };

/// One gate acting on named wires.  Wire 0 is the most significant bit of
/// the basis-state index.  Rz(a) = diag(1, e^{ia}); Ry(a) rotates by a/2 in
/// the real plane.  `angle` is ignored for non-rotation kinds.
struct Gate {
  GateKind kind = GateKind::X;
  int target = 0;
  std::vector<int> controls;
  double angle = 0.0;
};

inline Gate x_gate(int target) { return {GateKind::X, target, {}, 0.0}; }
inline Gate h_gate(int target) { return {GateKind::H, target, {}, 0.0}; }
inline Gate z_gate(int target) { return {GateKind::Z, target, {}, 0.0}; }
inline Gate ry_gate(int target, double angle) { return {GateKind::Ry, target, {}, angle}; }
inline Gate rz_gate(int target, double angle) { return {GateKind::Rz, target, {}, angle}; }
inline Gate cnot_gate(int target, int control) { return {GateKind::CNOT, target, {control}, 0.0}; }
inline Gate toffoli_gate(int target, int control_a, int control_b) {
  return {GateKind::Toffoli, target, {control_a, control_b}, 0.0};
}
inline Gate crz_gate(int target, int control, double angle) {
  return {GateKind::ControlledRz, target, {control}, angle};
}

/// Gate list in application order, plus a scalar prefactor.
struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
  Complex global_phase{1.0, 0.0};
};

namespace detail {

inline int required_controls(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::ControlledRz:
      return 1;
    case GateKind::Toffoli:
      return 2;
    default:
      return 0;
  }
}

inline bool takes_angle(GateKind kind) {
  return kind == GateKind::Ry || kind == GateKind::Rz || kind == GateKind::ControlledRz;
}

inline void validate_gate(const Gate& g, int width) {
  if (g.target < 0 || g.target >= width)
    throw OutOfRange("gate target " + std::to_string(g.target) + " outside width " +
                     std::to_string(width));
  if (static_cast<int>(g.controls.size()) != required_controls(g.kind))
    throw OutOfRange("wrong control count for gate");
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    const int c = g.controls[i];
    if (c < 0 || c >= width)
      throw OutOfRange("gate control " + std::to_string(c) + " outside width " +
                       std::to_string(width));
    if (c == g.target) throw OutOfRange("gate control equals target");
    for (std::size_t j = 0; j < i; ++j)
      if (g.controls[j] == c) throw OutOfRange("repeated gate control");
  }
}

inline std::array<Complex, 4> single_wire_matrix(GateKind kind, double angle) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (kind) {
    case GateKind::H:
      return {Complex(inv_sqrt2), Complex(inv_sqrt2), Complex(inv_sqrt2), Complex(-inv_sqrt2)};
    case GateKind::Z:
      return {Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)};
    case GateKind::Ry:
      return {Complex(std::cos(angle / 2)), Complex(-std::sin(angle / 2)),
              Complex(std::sin(angle / 2)), Complex(std::cos(angle / 2))};
    case GateKind::Rz:
    case GateKind::ControlledRz:
      return {Complex(1.0), Complex(0.0), Complex(0.0), std::polar(1.0, angle)};
    default:  // X, CNOT, Toffoli
      return {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)};
  }
}

inline void apply_gate(CVector& state, int width, const Gate& g) {
  validate_gate(g, width);
  const auto m = single_wire_matrix(g.kind, g.angle);
  const std::uint64_t target_bit = std::uint64_t{1} << (width - 1 - g.target);
  std::uint64_t control_mask = 0;
  for (int c : g.controls) control_mask |= std::uint64_t{1} << (width - 1 - c);
  const std::uint64_t dim = std::uint64_t{1} << width;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & target_bit) continue;
    if ((i & control_mask) != control_mask) continue;
    const std::uint64_t j = i | target_bit;
    const Complex a = state(static_cast<Eigen::Index>(i));
    const Complex b = state(static_cast<Eigen::Index>(j));
    state(static_cast<Eigen::Index>(i)) = m[0] * a + m[1] * b;
    state(static_cast<Eigen::Index>(j)) = m[2] * a + m[3] * b;
  }
}

}  // namespace detail

constexpr int kMaxCircuitWidth = 12;

inline void validate_circuit(const Circuit& c) {
  if (c.width < 1) throw OutOfRange("circuit width must be positive");
  if (c.width > kMaxCircuitWidth)
    throw TooWide("circuit width " + std::to_string(c.width) + " exceeds " +
                  std::to_string(kMaxCircuitWidth));
  for (const Gate& g : c.gates) detail::validate_gate(g, c.width);
}

/// Runs the circuit on a state vector of dimension 2^width.
inline CVector apply_circuit(const Circuit& c, CVector state) {
  validate_circuit(c);
  if (state.size() != (Eigen::Index{1} << c.width))
    throw DimensionMismatch("state dimension does not match circuit width");
  for (const Gate& g : c.gates) detail::apply_gate(state, c.width, g);
  return c.global_phase * state;
}

/// Dense unitary of the whole circuit, global phase included.
inline CMatrix to_matrix(const Circuit& c) {
  validate_circuit(c);
  const Eigen::Index dim = Eigen::Index{1} << c.width;
  CMatrix u = CMatrix::Identity(dim, dim);
  CVector column(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    column = u.col(k);
    for (const Gate& g : c.gates) detail::apply_gate(column, c.width, g);
    u.col(k) = column;
  }
  return c.global_phase * u;
}

/// CNOTs needed once every gate is expressed over the {CNOT, one-wire} set.
inline long cnot_equivalents(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
      return 1;
    case GateKind::Toffoli:
      return 6;
    case GateKind::ControlledRz:
      return 2;
    default:
      return 0;
  }
}

inline long cnot_count(const Circuit& c) {
  long total = 0;
  for (const Gate& g : c.gates) total += cnot_equivalents(g.kind);
  return total;
}

/// Inversion about the mean on three wires: conjugate a controlled reflection
/// by Hadamards, with X gates steering the reflection onto the all-ones row.
inline Circuit diffusion_circuit_3q() {
  Circuit c{3, {}, Complex(-1.0, 0.0)};
  c.gates = {h_gate(0),       h_gate(1), z_gate(2), x_gate(0), x_gate(1),
             toffoli_gate(2, 0, 1),      x_gate(0), x_gate(1), h_gate(0),
             h_gate(1),       z_gate(2)};
  return c;
}

namespace detail {

/// Phase e^{i angle} on the all-ones subspace of `wires`, spelled with CNOTs
/// and plain Rz only.  Each parity subset carries angle/2^{k-1} with an
/// alternating sign.
inline void append_multi_controlled_phase(Circuit& c, const std::vector<int>& wires,
                                          double angle) {
  const std::size_t k = wires.size();
  const double unit = angle / static_cast<double>(std::uint64_t{1} << (k - 1));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> subset;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::uint64_t{1} << b)) subset.push_back(wires[b]);
    const double beta = (std::popcount(mask) % 2 == 1) ? unit : -unit;
    if (subset.size() == 1) {
      c.gates.push_back(rz_gate(subset[0], beta));
      continue;
    }
    const int last = subset.back();
    for (std::size_t i = 0; i + 1 < subset.size(); ++i)
      c.gates.push_back(cnot_gate(last, subset[i]));
    c.gates.push_back(rz_gate(last, beta));
    for (std::size_t i = subset.size() - 1; i-- > 0;)
      c.gates.push_back(cnot_gate(last, subset[i]));
  }
}

}  // namespace detail

/// Builds the diagonal unitary that multiplies each listed basis state by its
/// unit-modulus factor and leaves every other state alone.  Exact, no ancilla.
inline Circuit synthesize_priority_oracle(int width,
                                          const std::vector<std::pair<std::size_t, Complex>>& items) {
  Circuit c{width, {}, Complex(1.0, 0.0)};
  validate_circuit(c);
  std::vector<int> all_wires(static_cast<std::size_t>(width));
  for (int q = 0; q < width; ++q) all_wires[static_cast<std::size_t>(q)] = q;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [index, factor] = items[i];
    if (index >= (std::size_t{1} << width))
      throw OutOfRange("marked index outside register");
    for (std::size_t j = 0; j < i; ++j)
      if (items[j].first == index) throw OutOfRange("repeated marked index");
    if (std::abs(std::abs(factor) - 1.0) > 1e-9)
      throw OutOfRange("marked factor must have unit modulus");
    double alpha = principal_arg(factor);
    if (alpha < 0) alpha += 2 * M_PI;
    if (alpha < 1e-15) continue;
    std::vector<int> zero_wires;
    for (int q = 0; q < width; ++q)
      if (((index >> (width - 1 - q)) & 1u) == 0) zero_wires.push_back(q);
    for (int q : zero_wires) c.gates.push_back(x_gate(q));
    detail::append_multi_controlled_phase(c, all_wires, alpha);
    for (int q : zero_wires) c.gates.push_back(x_gate(q));
  }
  return c;
}

/// Rewrites every Toffoli as the standard 6-CNOT network over H, Rz(pi/4)
/// and CNOT.  Other gates pass through untouched.
inline Circuit lower_toffoli(const Circuit& c) {
  validate_circuit(c);
  constexpr double quarter = M_PI / 4;
  Circuit out{c.width, {}, c.global_phase};
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::Toffoli) {
      out.gates.push_back(g);
      continue;
    }
    const int t = g.target;
    const int ca = g.controls[0];
    const int cb = g.controls[1];
    out.gates.push_back(h_gate(t));
    out.gates.push_back(cnot_gate(t, cb));
    out.gates.push_back(rz_gate(t, -quarter));
    out.gates.push_back(cnot_gate(t, ca));
    out.gates.push_back(rz_gate(t, quarter));
    out.gates.push_back(cnot_gate(t, cb));
    out.gates.push_back(rz_gate(t, -quarter));
    out.gates.push_back(cnot_gate(t, ca));
    out.gates.push_back(rz_gate(cb, quarter));
    out.gates.push_back(rz_gate(t, quarter));
    out.gates.push_back(h_gate(t));
    out.gates.push_back(cnot_gate(cb, ca));
    out.gates.push_back(rz_gate(ca, quarter));
    out.gates.push_back(rz_gate(cb, -quarter));
    out.gates.push_back(cnot_gate(cb, ca));
  }
  return out;
}

/// Three-wire reflection I - 2|w><w| about the two-item superposition
/// |w> = sqrt(1+eps)|000> + sqrt(-eps)|111>: map |w> onto |000> with CNOTs
/// and one Ry, flip the sign of |000>, and undo the mapping.
inline Circuit amplitude_oracle_circuit(double eps) {
  if (!(eps >= -1.0 && eps <= 0.0)) throw OutOfRange("eps must lie in [-1, 0]");
  const double zeta = 2.0 * std::acos(std::sqrt(1.0 + eps));
  Circuit c{3, {}, Complex(1.0, 0.0)};
  c.gates = {cnot_gate(2, 0), cnot_gate(1, 0), ry_gate(0, -zeta),
             x_gate(0),       x_gate(1),       x_gate(2),
             h_gate(2),       toffoli_gate(2, 0, 1),
             h_gate(2),       x_gate(0),       x_gate(1),
             x_gate(2),       ry_gate(0, zeta), cnot_gate(1, 0),
             cnot_gate(2, 0)};
  return c;
}

inline const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Z: return "Z";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::CNOT: return "CNOT";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::ControlledRz: return "ControlledRz";
  }
  return "X";
}

namespace detail {

inline GateKind gate_kind_from_name(const std::string& name) {
  for (GateKind kind : {GateKind::X, GateKind::H, GateKind::Z, GateKind::Ry, GateKind::Rz,
                        GateKind::CNOT, GateKind::Toffoli, GateKind::ControlledRz})
    if (name == gate_kind_name(kind)) return kind;
  throw ParseError("unknown gate kind '" + name + "'");
}

inline std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

inline long parse_int_token(const std::string& token) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError("expected integer, got '" + token + "'");
  return value;
}

inline double parse_real_token(const std::string& token) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected number, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError("expected number, got '" + token + "'");
  return value;
}

}  // namespace detail

/// Plain-text form: one `width N` line, then one line per gate written as
/// `KIND target [controls...] [angle]`, with an optional `phase re im` line
/// for the scalar prefactor.  `#` starts a comment.
inline std::string format_circuit(const Circuit& c) {
  validate_circuit(c);
  std::ostringstream out;
  out << "width " << c.width << "\n";
  if (c.global_phase != Complex(1.0, 0.0))
    out << "phase " << detail::format_number(c.global_phase.real()) << " "
        << detail::format_number(c.global_phase.imag()) << "\n";
  for (const Gate& g : c.gates) {
    out << gate_kind_name(g.kind) << " " << g.target;
    for (int ctrl : g.controls) out << " " << ctrl;
    if (detail::takes_angle(g.kind)) out << " " << detail::format_number(g.angle);
    out << "\n";
  }
  return out.str();
}

inline Circuit parse_circuit(std::istream& in) {
  Circuit c;
  bool have_width = false;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(tok);
    if (fields.empty()) continue;
    if (!have_width) {
      if (fields[0] != "width" || fields.size() != 2)
        throw ParseError("circuit must start with 'width N'");
      const long w = detail::parse_int_token(fields[1]);
      if (w < 1 || w > kMaxCircuitWidth) throw ParseError("width out of range");
      c.width = static_cast<int>(w);
      have_width = true;
      continue;
    }
    if (fields[0] == "phase") {
      if (fields.size() != 3) throw ParseError("phase line needs two numbers");
      c.global_phase = Complex(detail::parse_real_token(fields[1]),
                               detail::parse_real_token(fields[2]));
      continue;
    }
    Gate g;
    g.kind = detail::gate_kind_from_name(fields[0]);
    const std::size_t expected =
        2 + static_cast<std::size_t>(detail::required_controls(g.kind)) +
        (detail::takes_angle(g.kind) ? 1 : 0);
    if (fields.size() != expected)
      throw ParseError("wrong field count for gate '" + fields[0] + "'");
    g.target = static_cast<int>(detail::parse_int_token(fields[1]));
    for (int i = 0; i < detail::required_controls(g.kind); ++i)
      g.controls.push_back(
          static_cast<int>(detail::parse_int_token(fields[2 + static_cast<std::size_t>(i)])));
    if (detail::takes_angle(g.kind)) g.angle = detail::parse_real_token(fields.back());
    detail::validate_gate(g, c.width);
    c.gates.push_back(std::move(g));
  }
  if (!have_width) throw ParseError("empty circuit text");
  return c;
}

inline Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

}  // namespace rgrover
