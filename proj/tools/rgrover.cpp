// Command-line front end: every subcommand writes one CSV table to --out or
// stdout, with diagnostics on stderr.  Exit codes: 0 success, 1 computation
// error, 2 usage error.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgrover/rgrover.hpp"

namespace {

using rgrover::CsvWriter;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> uniform_grid(std::size_t count, double lo, double hi) {
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k)
    grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  return grid;
}

std::string resolve_engine(const std::string& engine, std::size_t n) {
  if (engine != "auto") return engine;
  return n > 4096 ? "logical" : "statevector";
}

struct ClassSeries {
  std::vector<double> class0, class_eps, fail;
};

ClassSeries class_series(std::size_t n, std::size_t m, double eps, std::size_t t_max,
                         const std::string& engine) {
  ClassSeries out;
  if (engine == "logical") {
    for (const auto& p : rgrover::success_probs_trace(n, m, eps, t_max)) {
      out.class0.push_back(p.p_class0);
      out.class_eps.push_back(p.p_class_eps);
      out.fail.push_back(p.p_fail);
    }
    return out;
  }
  const auto trace = rgrover::evolve(rgrover::two_class_oracle(n, m, eps), t_max);
  for (const auto& row : trace.steps) {
    double c0 = 0.0, ce = 0.0;
    for (std::size_t i = 0; i < m / 2; ++i) c0 += row.marked[i];
    for (std::size_t i = m / 2; i < m; ++i) ce += row.marked[i];
    out.class0.push_back(c0);
    out.class_eps.push_back(ce);
    out.fail.push_back(row.failure);
  }
  return out;
}

struct SweepTOptions {
  std::size_t n = 256, m = 2;
  double eps = -0.05;
  std::size_t t_max = 50;
  std::string engine = "auto", out;
};

int run_sweep_t(const SweepTOptions& o) {
  Output sink(o.out);
  const double theta = rgrover::grover_angle(o.n, o.m);
  const auto grover_ref = [theta](std::size_t t) {
    const double s = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta / 2.0);
    return s * s;
  };
  if (o.engine == "both") {
    const ClassSeries sv = class_series(o.n, o.m, o.eps, o.t_max, "statevector");
    const ClassSeries lg = class_series(o.n, o.m, o.eps, o.t_max, "logical");
    CsvWriter csv(sink.stream(),
                  {"t", "p_class0_statevector", "p_class_eps_statevector",
                   "p_fail_statevector", "p_class0_logical", "p_class_eps_logical",
                   "p_fail_logical", "max_abs_diff", "grover_ref"});
    for (std::size_t t = 0; t <= o.t_max; ++t) {
      const double diff = std::max({std::abs(sv.class0[t] - lg.class0[t]),
                                    std::abs(sv.class_eps[t] - lg.class_eps[t]),
                                    std::abs(sv.fail[t] - lg.fail[t])});
      csv.row(t, sv.class0[t], sv.class_eps[t], sv.fail[t], lg.class0[t], lg.class_eps[t],
              lg.fail[t], diff, grover_ref(t));
    }
    return 0;
  }
  const ClassSeries s = class_series(o.n, o.m, o.eps, o.t_max, resolve_engine(o.engine, o.n));
  CsvWriter csv(sink.stream(),
                {"t", "p_class0", "p_class_eps", "p_fail", "p_total", "grover_ref"});
  for (std::size_t t = 0; t <= o.t_max; ++t)
    csv.row(t, s.class0[t], s.class_eps[t], s.fail[t], s.class0[t] + s.class_eps[t],
            grover_ref(t));
  return 0;
}

struct SweepEpsOptions {
  std::size_t n = 256, m = 2;
  long t = -1;
  std::size_t eps_grid = 100;
  std::string engine = "auto", out;
};

int run_sweep_eps(const SweepEpsOptions& o) {
  Output sink(o.out);
  const double theta = rgrover::grover_angle(o.n, o.m);
  const std::size_t t =
      o.t >= 0 ? static_cast<std::size_t>(o.t)
               : static_cast<std::size_t>(std::floor(M_PI / (2.0 * theta)));
  const std::string engine = resolve_engine(o.engine, o.n);
  std::cerr << "sweep-eps: t=" << t << " engine=" << engine << "\n";
  CsvWriter csv(sink.stream(), {"eps", "p_class0", "p_class_eps", "ratio", "p_total"});
  for (double eps : uniform_grid(o.eps_grid, -1.0, 0.0)) {
    const ClassSeries s = class_series(o.n, o.m, eps, t, engine);
    const double c0 = s.class0[t], ce = s.class_eps[t];
    csv.row(eps, c0, ce, c0 / ce, c0 + ce);
  }
  return 0;
}

struct LocalMaxOptions {
  std::size_t n = 0, m = 2;
  double eps = -0.01;
  std::size_t eps_grid = 100, t_max = 0, m_max = 0;
  std::string engine = "auto", out;
};

struct ClassMaxima {
  rgrover::LocalMax class0{0, 0.0}, class_eps{0, 0.0};
  bool found = false;
};

ClassMaxima class_maxima(std::size_t n, std::size_t m, double eps, std::size_t t_cap,
                         const std::string& engine) {
  // t_cap == 0 asks for the adaptive ladder.
  ClassMaxima out;
  std::size_t cap = t_cap > 0 ? t_cap : 512;
  const std::size_t cap_limit = t_cap > 0 ? t_cap : 4096;
  while (true) {
    const ClassSeries s = class_series(n, m, eps, cap, engine);
    try {
      out.class0 = rgrover::first_local_max(s.class0);
      out.class_eps = rgrover::first_local_max(s.class_eps);
      out.found = true;
      return out;
    } catch (const rgrover::NoLocalMax&) {
      if (cap * 2 > cap_limit) return out;
      cap *= 2;
    }
  }
}

int run_local_max(const LocalMaxOptions& o) {
  Output sink(o.out);
  if (o.m_max >= 2) {
    const std::size_t n = o.n > 0 ? o.n : 65536;
    const std::string engine = resolve_engine(o.engine, n);
    CsvWriter csv(sink.stream(), {"m", "t_class0", "p_class0_max", "t_class_eps",
                                  "p_class_eps_max", "status"});
    for (std::size_t m = 2; m <= o.m_max; m += 2) {
      std::size_t cap = o.t_max;
      if (cap == 0) {
        const double theta = rgrover::grover_angle(n, m);
        cap = static_cast<std::size_t>(std::ceil(3.0 * M_PI / (2.0 * theta))) + 10;
      }
      const ClassMaxima found = class_maxima(n, m, o.eps, cap, engine);
      csv.row(m, found.class0.t, found.class0.value, found.class_eps.t,
              found.class_eps.value, found.found ? "ok" : "no_local_max");
    }
    return 0;
  }
  const std::size_t n = o.n > 0 ? o.n : 1000;
  const std::string engine = resolve_engine(o.engine, n);
  CsvWriter csv(sink.stream(), {"eps", "t_class0", "p_class0_max", "t_class_eps",
                                "p_class_eps_max", "status"});
  for (double eps : uniform_grid(o.eps_grid, -1.0, -0.01)) {
    const ClassMaxima found = class_maxima(n, o.m, eps, o.t_max, engine);
    csv.row(eps, found.class0.t, found.class0.value, found.class_eps.t,
            found.class_eps.value, found.found ? "ok" : "no_local_max");
  }
  return 0;
}

struct ComparePsOptions {
  std::vector<double> ratios;
  std::string out;
};

int run_compare_ps(const ComparePsOptions& o) {
  Output sink(o.out);
  std::vector<double> ratios = o.ratios;
  if (ratios.empty()) ratios = {1.0, 4.0, 16.81};
  CsvWriter csv(sink.stream(), {"r", "eps", "eps_tilde", "q1", "q2", "q_total", "p1",
                                "p2", "p_total"});
  for (double r : ratios) {
    const rgrover::ComparisonRow row = rgrover::match_ratio(r);
    const rgrover::ItemProbs q = rgrover::amplitude_probs(row.eps);
    const rgrover::ItemProbs p = rgrover::ranked_probs_n8(row.eps_tilde);
    csv.row(r, row.eps, row.eps_tilde, q.first, q.second, row.q_total, p.first, p.second,
            row.p_total);
  }
  return 0;
}

struct CoherenceOptions {
  std::size_t n = 1000, eps_grid = 100;
  std::string out;
};

int run_coherence(const CoherenceOptions& o) {
  Output sink(o.out);
  const auto grid = rgrover::default_eps_grid(o.eps_grid);
  const rgrover::CoherenceReport report = rgrover::coherence_sweep(grid, o.n);
  CsvWriter csv(sink.stream(),
                {"eps", "p_opt_x1", "t_p_x1", "h_opt_x1", "t_h_x1", "ratio_x1", "p_opt_x2",
                 "t_p_x2", "h_opt_x2", "t_h_x2", "ratio_x2"});
  std::size_t wins = 0;
  for (const auto& pt : report.points) {
    if (pt.p_opt[0] >= pt.h_opt[0]) ++wins;
    csv.row(pt.eps, pt.p_opt[0], pt.t_coherent[0], pt.h_opt[0], pt.t_incoherent[0],
            pt.p_opt[0] / pt.h_opt[0], pt.p_opt[1], pt.t_coherent[1], pt.h_opt[1],
            pt.t_incoherent[1], pt.p_opt[1] / pt.h_opt[1]);
  }
  const rgrover::FidelityMax fid = rgrover::best_incoherent_fidelity(o.n);
  std::cerr << "coherence: p_opt >= h_opt for the top item at " << wins << "/"
            << report.points.size() << " grid points; best start fidelity F(" << fid.a_star
            << ") = " << fid.f_star << "\n";
  return 0;
}

struct CircuitOptions {
  double eps = -0.5;
  std::string out;
};

int run_circuit(const CircuitOptions& o) {
  Output sink(o.out);
  CsvWriter csv(sink.stream(),
                {"circuit", "cnot_count", "reference_cnot_count", "max_abs_error"});
  const auto max_err = [](const rgrover::CMatrix& a, const rgrover::CMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
  };

  rgrover::Circuit toffoli{3, {rgrover::toffoli_gate(2, 0, 1)}, {1.0, 0.0}};
  const rgrover::Circuit toffoli_low = rgrover::lower_toffoli(toffoli);
  csv.row("toffoli", rgrover::cnot_count(toffoli_low), 6,
          max_err(rgrover::to_matrix(toffoli_low), rgrover::to_matrix(toffoli)));

  const rgrover::Circuit diffusion = rgrover::diffusion_circuit_3q();
  const rgrover::Circuit diffusion_low = rgrover::lower_toffoli(diffusion);
  const rgrover::CMatrix d_dense =
      rgrover::CMatrix::Constant(8, 8, {0.25, 0.0}) - rgrover::CMatrix::Identity(8, 8);
  csv.row("diffusion_3q", rgrover::cnot_count(diffusion_low), 6,
          max_err(rgrover::to_matrix(diffusion_low), d_dense));

  const rgrover::Complex second_phase = -std::polar(1.0, M_PI * o.eps);
  const rgrover::Circuit oracle = rgrover::synthesize_priority_oracle(
      3, {{rgrover::kFirstItem, {-1.0, 0.0}}, {rgrover::kSecondItem, second_phase}});
  rgrover::CMatrix oracle_dense = rgrover::CMatrix::Identity(8, 8);
  oracle_dense(0, 0) = -1.0;
  oracle_dense(7, 7) = second_phase;
  csv.row("priority_oracle_n8", rgrover::cnot_count(oracle), 20,
          max_err(rgrover::to_matrix(oracle), oracle_dense));

  const rgrover::Circuit amp_low =
      rgrover::lower_toffoli(rgrover::amplitude_oracle_circuit(o.eps));
  csv.row("amplitude_oracle_n8", rgrover::cnot_count(amp_low), 42,
          max_err(rgrover::to_matrix(amp_low), rgrover::amplitude_oracle(o.eps)));

  rgrover::CVector state = rgrover::uniform_initial(8);
  for (int round = 0; round < 2; ++round) {
    state = rgrover::apply_circuit(oracle, state);
    state = rgrover::apply_circuit(diffusion, state);
  }
  const rgrover::ItemProbs ref = rgrover::ranked_probs_n8(o.eps);
  const double run_err = std::max(std::abs(std::norm(state(0)) - ref.first),
                                  std::abs(std::norm(state(7)) - ref.second));
  csv.row("algorithm_n8_t2",
          2 * (rgrover::cnot_count(oracle) + rgrover::cnot_count(diffusion_low)), 52,
          run_err);
  return 0;
}

struct GcpOptions {
  std::string instance, out;
  long t = -1;
  int ell = 0;
};

int run_gcp(const GcpOptions& o) {
  Output sink(o.out);
  std::ifstream in(o.instance);
  if (!in) throw std::runtime_error("cannot open instance file: " + o.instance);
  const rgrover::gcp::RewardGraph graph = rgrover::gcp::parse_instance(in);

  rgrover::CVector diag = rgrover::gcp::gcp_oracle_direct(graph);
  if (o.ell > 0) {
    const rgrover::gcp::AncillaOracle anc = rgrover::gcp::gcp_oracle_ancilla(graph, o.ell);
    const double diff = (anc.diag - diag).cwiseAbs().maxCoeff();
    std::cerr << "gcp: ancilla register check max|diff|=" << diff
              << " residual=" << anc.ancilla_residual << "\n";
    diag = anc.diag;
  }

  const std::vector<double> rewards = rgrover::gcp::all_rewards(graph);
  const std::vector<double> eps = rgrover::gcp::priority_params(graph);
  std::size_t best = 0;
  for (std::size_t i = 1; i < rewards.size(); ++i)
    if (rewards[i] > rewards[best]) best = i;

  const auto n = diag.size();
  rgrover::CVector state = rgrover::uniform_initial(static_cast<std::size_t>(n));
  long t = o.t;
  if (t < 0) {
    std::vector<double> series;
    rgrover::CVector walker = state;
    series.push_back(std::norm(walker(static_cast<Eigen::Index>(best))));
    for (int step = 0; step < 256; ++step) {
      walker = rgrover::apply_diffusion(diag.cwiseProduct(walker).eval());
      series.push_back(std::norm(walker(static_cast<Eigen::Index>(best))));
    }
    t = static_cast<long>(rgrover::first_local_max(series).t);
  }
  for (long step = 0; step < t; ++step)
    state = rgrover::apply_diffusion(diag.cwiseProduct(state).eval());
  std::cerr << "gcp: t=" << t << " j_max=" << rgrover::gcp::max_reward(graph)
            << " best_index=" << best << "\n";

  CsvWriter csv(sink.stream(), {"index", "assignment", "reward", "eps", "probability"});
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    const rgrover::gcp::Assignment a = rgrover::gcp::assignment_at(graph, idx);
    std::string colors;
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (v) colors += ':';
      colors += std::to_string(a[v]);
    }
    csv.row(idx, colors, rewards[idx], eps[idx], std::norm(state(i)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for rank-aware amplitude amplification"};
  app.require_subcommand(1);
  const auto engine_check = CLI::IsMember({"auto", "statevector", "logical"});
  const auto engine_check_both = CLI::IsMember({"auto", "statevector", "logical", "both"});

  SweepTOptions sweep_t;
  CLI::App* cmd_sweep_t =
      app.add_subcommand("sweep-t", "success probabilities per round at fixed priorities");
  cmd_sweep_t->add_option("--n", sweep_t.n, "search space size")->check(CLI::PositiveNumber);
  cmd_sweep_t->add_option("--m", sweep_t.m, "marked item count (even)");
  cmd_sweep_t->add_option("--eps", sweep_t.eps, "priority of the second class");
  cmd_sweep_t->add_option("--t-max", sweep_t.t_max, "last round to report");
  cmd_sweep_t->add_option("--engine", sweep_t.engine, "statevector, logical, both or auto")
      ->check(engine_check_both);
  cmd_sweep_t->add_option("--out", sweep_t.out, "output CSV path (default stdout)");

  SweepEpsOptions sweep_eps;
  CLI::App* cmd_sweep_eps =
      app.add_subcommand("sweep-eps", "success probabilities across the priority range");
  cmd_sweep_eps->add_option("--n", sweep_eps.n, "search space size")->check(CLI::PositiveNumber);
  cmd_sweep_eps->add_option("--m", sweep_eps.m, "marked item count (even)");
  cmd_sweep_eps->add_option("--t", sweep_eps.t, "round to report (default: best unranked round)");
  cmd_sweep_eps->add_option("--eps-grid", sweep_eps.eps_grid, "grid point count")
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));
  cmd_sweep_eps->add_option("--engine", sweep_eps.engine, "statevector, logical or auto")
      ->check(engine_check);
  cmd_sweep_eps->add_option("--out", sweep_eps.out, "output CSV path (default stdout)");

  LocalMaxOptions local_max;
  CLI::App* cmd_local_max =
      app.add_subcommand("local-max", "first interior success-probability peak");
  cmd_local_max->add_option("--n", local_max.n, "search space size (default 1000, or 65536 with --m-max)");
  cmd_local_max->add_option("--m", local_max.m, "marked item count (even)");
  cmd_local_max->add_option("--eps", local_max.eps, "priority of the second class (with --m-max)");
  cmd_local_max->add_option("--eps-grid", local_max.eps_grid, "grid point count")
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));
  cmd_local_max->add_option("--t-max", local_max.t_max, "round cap (0 = adaptive)");
  cmd_local_max->add_option("--m-max", local_max.m_max, "sweep m = 2,4,... up to this instead of eps");
  cmd_local_max->add_option("--engine", local_max.engine, "statevector, logical or auto")
      ->check(engine_check);
  cmd_local_max->add_option("--out", local_max.out, "output CSV path (default stdout)");

  ComparePsOptions compare_ps;
  CLI::App* cmd_compare_ps = app.add_subcommand(
      "compare-ps", "amplitude-encoded versus phase-encoded oracle at matched rank ratio");
  cmd_compare_ps->add_option("--r", compare_ps.ratios, "target probability ratios");
  cmd_compare_ps->add_option("--out", compare_ps.out, "output CSV path (default stdout)");

  CoherenceOptions coherence;
  CLI::App* cmd_coherence =
      app.add_subcommand("coherence", "coherent versus incoherent start across priorities");
  cmd_coherence->add_option("--n", coherence.n, "search space size")
      ->check(CLI::Range(static_cast<std::size_t>(3), static_cast<std::size_t>(1 << 20)));
  cmd_coherence->add_option("--eps-grid", coherence.eps_grid, "grid point count")
      ->check(CLI::Range(static_cast<std::size_t>(2), static_cast<std::size_t>(1000000)));
  cmd_coherence->add_option("--out", coherence.out, "output CSV path (default stdout)");

  CircuitOptions circuit;
  CLI::App* cmd_circuit =
      app.add_subcommand("circuit", "gate-level constructions checked against dense forms");
  cmd_circuit->add_option("--eps", circuit.eps, "priority / amplitude parameter");
  cmd_circuit->add_option("--out", circuit.out, "output CSV path (default stdout)");

  GcpOptions gcp;
  CLI::App* cmd_gcp =
      app.add_subcommand("gcp", "reward-graph colouring search from an instance file");
  cmd_gcp->add_option("--instance", gcp.instance, "instance file path")->required();
  cmd_gcp->add_option("--t", gcp.t, "rounds to run (default: first peak of the best colouring)");
  cmd_gcp->add_option("--ell", gcp.ell, "ancilla bits; > 0 simulates the register oracle")
      ->check(CLI::Range(0, 20));
  cmd_gcp->add_option("--out", gcp.out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_sweep_t->parsed()) return run_sweep_t(sweep_t);
    if (cmd_sweep_eps->parsed()) return run_sweep_eps(sweep_eps);
    if (cmd_local_max->parsed()) return run_local_max(local_max);
    if (cmd_compare_ps->parsed()) return run_compare_ps(compare_ps);
    if (cmd_coherence->parsed()) return run_coherence(coherence);
    if (cmd_circuit->parsed()) return run_circuit(circuit);
    if (cmd_gcp->parsed()) return run_gcp(gcp);
  } catch (const rgrover::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
