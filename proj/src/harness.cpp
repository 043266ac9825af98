#include "kinwave/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "kinwave/analysis.hpp"
#include "kinwave/engine.hpp"
#include "kinwave/exact.hpp"
#include "kinwave/flux.hpp"
#include "kinwave/io.hpp"

namespace kinwave {

namespace {

namespace fs = std::filesystem;

// Reference convergence rates for the four standard two-state problems on
// the default grid ladder (rho_m = 0.5, gamma = 0.5, t_end = 0.2).
struct ReferenceRates {
  double rho_l;
  double rho_r;
  double godunov_l1;
  double godunov_l2;
  double highres_l1;
  double highres_l2;
};

constexpr ReferenceRates kReferenceRates[] = {
    {0.9, 0.2, 0.643, 0.367, 1.022, 0.569},
    {0.4, 0.9, 0.488, 0.232, 0.832, 0.375},
    {0.3, 0.98, 0.754, 0.373, 1.053, 0.627},
    {0.1, 0.4, 0.487, 0.145, 0.700, 0.238},
};
constexpr double kRateTol = 0.15;

// Upstream-plateau detector parameters (verified on a fine grid).
constexpr double kPlateauTol = 0.01;
constexpr Eigen::Index kPlateauRun = 5;

// Smoothing width used for the regularized comparison scheme when the
// config does not provide one.
constexpr double kDefaultComparisonEpsilon = 0.01;

class WallClock {
 public:
  double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void ensure_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + dir +
                             "': " + ec.message());
  }
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::string indexed_name(const std::string& stem, std::size_t i) {
  char suffix[16];
  std::snprintf(suffix, sizeof suffix, "_%03zu.csv", i);
  return stem + suffix;
}

std::string list_to_string(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_float(values[i]);
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ',';
    out += names[i];
  }
  return out;
}

// Every parameter under its config-file key, so the manifest records the
// exact setup needed to reproduce the run.
Manifest config_manifest(const ExperimentConfig& cfg) {
  Manifest m;
  m.set("experiment", to_string(cfg.experiment));
  m.set("ic.kind", to_string(cfg.ic.kind));
  if (cfg.ic.kind == InitialConditionKind::Riemann) {
    m.set("ic.rho_l", cfg.ic.riemann.rho_l);
    m.set("ic.rho_r", cfg.ic.riemann.rho_r);
    m.set("ic.x0", cfg.ic.riemann.x0);
  } else {
    m.set("ic.sigma", cfg.ic.sigma);
    m.set("ic.amplitude", cfg.ic.amplitude);
    m.set("ic.offset", cfg.ic.offset);
  }
  m.set("domain.x_lo", cfg.x_lo);
  m.set("domain.x_hi", cfg.x_hi);
  m.set("domain.n_cells", static_cast<long>(cfg.n_cells));
  m.set("domain.bc", to_string(cfg.bc));
  m.set("model.kind", to_string(cfg.solver.model.kind));
  m.set("model.rho_m", cfg.solver.model.rho_m);
  m.set("model.gamma", cfg.solver.model.gamma);
  m.set("model.epsilon", cfg.solver.model.epsilon);
  m.set("solver.cfl", cfg.solver.cfl);
  m.set("solver.delta", cfg.solver.delta);
  m.set("solver.limiter", to_string(cfg.solver.limiter));
  m.set("solver.scheme", to_string(cfg.solver.scheme));
  m.set("solver.t_end", cfg.solver.t_end);
  if (!cfg.output_times.empty()) {
    m.set("output.times", list_to_string(cfg.output_times));
  }
  m.set("output.dir", cfg.output_dir);
  if (cfg.experiment == ExperimentKind::Convergence) {
    if (!cfg.convergence_dx.empty()) {
      m.set("convergence.dx", list_to_string(cfg.convergence_dx));
    }
    m.set("convergence.n0", static_cast<long>(cfg.convergence_n0));
    m.set("convergence.levels", static_cast<long>(cfg.convergence_levels));
  }
  if (cfg.experiment == ExperimentKind::MollifierReport) {
    m.set("report.epsilons", list_to_string(cfg.report_epsilons));
  }
  if (cfg.experiment == ExperimentKind::Conservation) {
    m.set("conservation.deltas", list_to_string(cfg.conservation_deltas));
  }
  return m;
}

// Cell centers of a snapshot, for the x column.
Eigen::ArrayXd cell_centers(const GridState& state) {
  Eigen::ArrayXd x(state.n_cells);
  for (Eigen::Index j = 0; j < state.n_cells; ++j) x[j] = state.cell_center(j);
  return x;
}

// Writes one snapshot as x,q[,exact]; the exact column holds the cell
// averages of the closed-form profile, matching what q discretizes.
void write_snapshot_csv(const std::string& path, const GridState& snap,
                        const StepProfile* exact) {
  Table t;
  t.header = {"x", "q"};
  t.columns = {cell_centers(snap), snap.q};
  if (exact != nullptr) {
    Eigen::ArrayXd ex(snap.n_cells);
    for (Eigen::Index j = 0; j < snap.n_cells; ++j) {
      ex[j] = exact->average(snap.interface_position(j),
                             snap.interface_position(j + 1));
    }
    t.header.push_back("exact");
    t.columns.push_back(ex);
  }
  write_csv(path, t);
}

std::vector<GridState> with_initial(const GridState& initial,
                                    const RunResult& result) {
  std::vector<GridState> all;
  all.reserve(result.snapshots.size() + 1);
  all.push_back(initial);
  all.insert(all.end(), result.snapshots.begin(), result.snapshots.end());
  return all;
}

void set_er_series(Manifest& m,
                   const std::vector<std::pair<double, double>>& series) {
  std::vector<double> times, values;
  times.reserve(series.size());
  values.reserve(series.size());
  for (const auto& [time, er] : series) {
    times.push_back(time);
    values.push_back(er);
  }
  m.set("result.er_times", list_to_string(times));
  m.set("result.er_values", list_to_string(values));
}

void require_experiment(const ExperimentConfig& cfg, ExperimentKind expected,
                        const char* command) {
  if (cfg.experiment != expected) {
    throw std::invalid_argument("experiment '" + to_string(cfg.experiment) +
                                "' is not driven by '" + command +
                                "'; use the matching subcommand");
  }
}

const ReferenceRates* reference_rates(const ExperimentConfig& cfg,
                                      const std::vector<double>& ladder) {
  const FluxModel& model = cfg.solver.model;
  const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  if (model.kind != FluxKind::DiscontinuousPL) return nullptr;
  if (!close(model.rho_m, 0.5) || !close(model.gamma, 0.5)) return nullptr;
  if (!close(cfg.solver.t_end, 0.2)) return nullptr;
  const std::vector<double> reference_ladder = default_convergence_ladder();
  if (ladder.size() != reference_ladder.size()) return nullptr;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!close(ladder[i], reference_ladder[i])) return nullptr;
  }
  for (const ReferenceRates& row : kReferenceRates) {
    if (close(cfg.ic.riemann.rho_l, row.rho_l) &&
        close(cfg.ic.riemann.rho_r, row.rho_r)) {
      return &row;
    }
  }
  return nullptr;
}

void write_report_csv(const std::string& path, const RunReport& report) {
  Eigen::ArrayXd dx(static_cast<Eigen::Index>(report.levels.size()));
  Eigen::ArrayXd l1(dx.size());
  Eigen::ArrayXd l2(dx.size());
  for (Eigen::Index i = 0; i < dx.size(); ++i) {
    dx[i] = report.levels[static_cast<std::size_t>(i)].dx;
    l1[i] = report.levels[static_cast<std::size_t>(i)].l1;
    l2[i] = report.levels[static_cast<std::size_t>(i)].l2;
  }
  write_csv(path, Table{{"dx", "l1", "l2"}, {dx, l1, l2}});
}

}  // namespace

void cmd_run(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::Riemann:
    case ExperimentKind::Gaussian:
    case ExperimentKind::RingCongestion:
    case ExperimentKind::Conservation:
      break;
    default:
      throw std::invalid_argument(
          "experiment '" + to_string(cfg.experiment) +
          "' is not a time-stepping run; use the matching subcommand");
  }
  ensure_output_dir(cfg.output_dir);
  const WallClock clock;
  Manifest m = config_manifest(cfg);
  const GridState initial = make_initial_state(cfg);

  if (cfg.experiment == ExperimentKind::Conservation) {
    // The same run repeated for each plateau band width; the quantity of
    // interest is the final relative mass drift as a function of the width.
    const std::vector<double>& deltas = cfg.conservation_deltas;
    const Eigen::Index n = static_cast<Eigen::Index>(deltas.size());
    Eigen::ArrayXd col_delta(n), col_er(n), col_abs(n);
    long total_steps = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      SolverConfig sc = cfg.solver;
      sc.delta = deltas[static_cast<std::size_t>(i)];
      const RunResult result = run(initial, sc, {});
      const auto series = conservation_error(with_initial(initial, result));
      col_delta[i] = sc.delta;
      col_er[i] = series.back().second;
      col_abs[i] = std::abs(series.back().second);
      total_steps += result.steps;
    }
    write_csv(join_path(cfg.output_dir, "conservation.csv"),
              Table{{"delta", "er_final", "abs_er_final"},
                    {col_delta, col_er, col_abs}});
    // Is the drift monotone in the band width?  Judged over widths in
    // ascending order regardless of how the config lists them.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
      return col_delta[a] < col_delta[b];
    });
    bool monotone = true;
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (!(col_abs[order[k - 1]] < col_abs[order[k]])) monotone = false;
    }
    m.set("result.steps", total_steps);
    m.set("result.monotone_in_delta", monotone);
    m.set("result.wall_ms", clock.elapsed_ms());
    m.write(join_path(cfg.output_dir, "manifest.txt"));
    std::printf(
        "conservation: %lld band widths, |mass drift| monotone in width: "
        "%s\n",
        static_cast<long long>(n), monotone ? "yes" : "no");
    return;
  }

  const bool oracle = cfg.ic.kind == InitialConditionKind::Riemann &&
                      cfg.solver.model.kind == FluxKind::DiscontinuousPL;
  const RunResult result = run(initial, cfg.solver, cfg.output_times);
  std::vector<std::string> files;
  if (!cfg.output_times.empty()) {
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
      const GridState& snap = result.snapshots[i];
      const std::string name = indexed_name("snapshot", i);
      if (oracle) {
        const StepProfile exact =
            riemann_profile(cfg.solver.model, cfg.ic.riemann, snap.time);
        write_snapshot_csv(join_path(cfg.output_dir, name), snap, &exact);
      } else {
        write_snapshot_csv(join_path(cfg.output_dir, name), snap, nullptr);
      }
      files.push_back(name);
    }
  }

  const GridState& final_state = result.snapshots.back();
  m.set("result.steps", result.steps);
  m.set("result.halvings", result.halvings);
  m.set("result.lookahead_fallbacks", result.sentinel_fallbacks);
  m.set("result.final_time", final_state.time);
  m.set("result.final_mass", total_mass(final_state));
  set_er_series(m, conservation_error(with_initial(initial, result)));
  if (!files.empty()) m.set("result.snapshots", join_names(files));
  m.set("result.wall_ms", clock.elapsed_ms());
  m.write(join_path(cfg.output_dir, "manifest.txt"));
  std::printf("run: %ld steps to t=%g, %zu snapshot file(s) in %s\n",
              result.steps, final_state.time, files.size(),
              cfg.output_dir.c_str());
}

void cmd_convergence(const ExperimentConfig& cfg) {
  require_experiment(cfg, ExperimentKind::Convergence, "convergence");
  ensure_output_dir(cfg.output_dir);
  const WallClock clock;
  Manifest m = config_manifest(cfg);

  if (cfg.ic.kind == InitialConditionKind::Riemann) {
    const std::vector<double> ladder = cfg.convergence_dx.empty()
                                           ? default_convergence_ladder()
                                           : cfg.convergence_dx;
    m.set("result.ladder", list_to_string(ladder));
    const ReferenceRates* ref = reference_rates(cfg, ladder);
    const struct {
      Scheme scheme;
      const char* name;
    } legs[] = {{Scheme::Godunov, "godunov"},
                {Scheme::HighResolution, "high_resolution"}};
    for (const auto& leg : legs) {
      SolverConfig sc = cfg.solver;
      sc.scheme = leg.scheme;
      const RunReport report = riemann_convergence(
          cfg.ic.riemann, sc, cfg.x_lo, cfg.x_hi, cfg.bc, ladder);
      write_report_csv(
          join_path(cfg.output_dir, std::string("convergence_") + leg.name +
                                        ".csv"),
          report);
      const std::string prefix = std::string("result.") + leg.name;
      m.set(prefix + ".rate_l1", report.rate_l1);
      m.set(prefix + ".rate_l2", report.rate_l2);
      if (ref != nullptr) {
        const double target_l1 =
            leg.scheme == Scheme::Godunov ? ref->godunov_l1 : ref->highres_l1;
        const double target_l2 =
            leg.scheme == Scheme::Godunov ? ref->godunov_l2 : ref->highres_l2;
        const bool pass_l1 = std::abs(report.rate_l1 - target_l1) <= kRateTol;
        const bool pass_l2 = std::abs(report.rate_l2 - target_l2) <= kRateTol;
        m.set(prefix + ".target_l1", target_l1);
        m.set(prefix + ".target_l2", target_l2);
        m.set(prefix + ".pass_l1", pass_l1);
        m.set(prefix + ".pass_l2", pass_l2);
        std::printf(
            "[%s] %s: L1 rate %.3f (reference %.3f +- %.2f), L2 rate %.3f "
            "(reference %.3f +- %.2f)\n",
            pass_l1 && pass_l2 ? "PASS" : "FAIL", leg.name, report.rate_l1,
            target_l1, kRateTol, report.rate_l2, target_l2, kRateTol);
      } else {
        std::printf("%s: L1 rate %g, L2 rate %g\n", leg.name, report.rate_l1,
                    report.rate_l2);
      }
    }
  } else {
    // Smooth IC: fine-grid self-convergence.  The comparison scheme is the
    // same engine on the regularized continuous flux.
    const auto make_initial = [&cfg](Eigen::Index n) {
      return make_gaussian_state(cfg.ic.sigma, cfg.ic.amplitude, cfg.ic.offset,
                                 cfg.x_lo, cfg.x_hi, n, cfg.bc);
    };
    const RunReport report =
        self_convergence(make_initial, cfg.solver, cfg.convergence_n0,
                         cfg.convergence_levels);
    write_report_csv(join_path(cfg.output_dir, "self_convergence.csv"),
                     report);
    m.set("result.rate_l1", report.rate_l1);
    m.set("result.rate_l2", report.rate_l2);
    std::printf("self-convergence (%s): L1 rate %.3f, L2 rate %.3f\n",
                to_string(cfg.solver.model.kind).c_str(), report.rate_l1,
                report.rate_l2);
    if (cfg.solver.model.kind != FluxKind::RegularizedPL) {
      SolverConfig rc = cfg.solver;
      rc.model.kind = FluxKind::RegularizedPL;
      if (!(rc.model.epsilon > 0.0)) {
        rc.model.epsilon = kDefaultComparisonEpsilon;
      }
      const RunReport regularized = self_convergence(
          make_initial, rc, cfg.convergence_n0, cfg.convergence_levels);
      write_report_csv(
          join_path(cfg.output_dir, "self_convergence_regularized.csv"),
          regularized);
      m.set("comparison.kind", to_string(rc.model.kind));
      m.set("comparison.epsilon", rc.model.epsilon);
      m.set("result.regularized.rate_l1", regularized.rate_l1);
      m.set("result.regularized.rate_l2", regularized.rate_l2);
      std::printf("self-convergence (regularized): L1 rate %.3f, L2 rate "
                  "%.3f\n",
                  regularized.rate_l1, regularized.rate_l2);
    }
  }

  m.set("result.wall_ms", clock.elapsed_ms());
  m.write(join_path(cfg.output_dir, "manifest.txt"));
}

void cmd_flux_compare(const ExperimentConfig& cfg) {
  require_experiment(cfg, ExperimentKind::FluxCompare, "flux-compare");
  ensure_output_dir(cfg.output_dir);
  const WallClock clock;
  Manifest m = config_manifest(cfg);
  const GridState initial = make_initial_state(cfg);

  const struct {
    FluxKind kind;
    const char* name;
  } legs[] = {{FluxKind::DiscontinuousPL, "discontinuous"},
              {FluxKind::ContinuousPL, "continuous"}};
  bool plateau[2] = {false, false};
  for (int leg = 0; leg < 2; ++leg) {
    SolverConfig sc = cfg.solver;
    sc.model.kind = legs[leg].kind;
    const RunResult result = run(initial, sc, cfg.output_times);
    std::vector<std::string> files;
    for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
      const std::string name = indexed_name(legs[leg].name, i);
      write_snapshot_csv(join_path(cfg.output_dir, name), result.snapshots[i],
                         nullptr);
      files.push_back(name);
    }
    const GridState& final_state = result.snapshots.back();
    plateau[leg] = has_left_plateau(final_state, sc.model.rho_m, kPlateauTol,
                                    kPlateauRun);
    const std::string prefix = std::string("result.") + legs[leg].name;
    m.set(prefix + ".left_plateau", plateau[leg]);
    m.set(prefix + ".final_mass", total_mass(final_state));
    m.set(prefix + ".steps", result.steps);
    m.set(prefix + ".snapshots", join_names(files));
  }
  m.set("result.plateau_tol", kPlateauTol);
  m.set("result.plateau_run", static_cast<long>(kPlateauRun));
  m.set("result.structural_difference", plateau[0] && !plateau[1]);
  m.set("result.wall_ms", clock.elapsed_ms());
  m.write(join_path(cfg.output_dir, "manifest.txt"));
  std::printf(
      "flux-compare: upstream plateau -- discontinuous: %s, continuous: %s "
      "(structural difference: %s)\n",
      plateau[0] ? "yes" : "no", plateau[1] ? "yes" : "no",
      plateau[0] && !plateau[1] ? "yes" : "no");
}

void cmd_mollifier_report(const ExperimentConfig& cfg) {
  require_experiment(cfg, ExperimentKind::MollifierReport, "mollifier-report");
  ensure_output_dir(cfg.output_dir);
  const WallClock clock;
  Manifest m = config_manifest(cfg);
  const double rho_m = cfg.solver.model.rho_m;
  const double gamma = cfg.solver.model.gamma;
  const std::vector<double>& epsilons = cfg.report_epsilons;

  // Kernel samples on [-1, 1].
  {
    const Eigen::Index n = 401;
    Eigen::ArrayXd s(n), eta(n), eta_prime(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      s[k] = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(n - 1);
      eta[k] = mollifier(s[k]);
      eta_prime[k] = mollifier_derivative(s[k]);
    }
    write_csv(join_path(cfg.output_dir, "mollifier.csv"),
              Table{{"s", "eta", "eta_prime"}, {s, eta, eta_prime}});
  }

  // Smoothed flux and its derivatives, one block of rho samples per width.
  {
    const Eigen::Index per_block = 1001;
    const Eigen::Index n =
        per_block * static_cast<Eigen::Index>(epsilons.size());
    Eigen::ArrayXd col_eps(n), col_rho(n), col_f(n), col_f1(n), col_f2(n);
    Eigen::Index row = 0;
    for (double eps : epsilons) {
      FluxModel model{FluxKind::Mollified, rho_m, gamma, eps};
      validate(model);
      for (Eigen::Index k = 0; k < per_block; ++k, ++row) {
        const double rho =
            static_cast<double>(k) / static_cast<double>(per_block - 1);
        col_eps[row] = eps;
        col_rho[row] = rho;
        col_f[row] = mollified_flux(model, rho);
        col_f1[row] = mollified_flux_derivative(model, rho);
        col_f2[row] = mollified_flux_second_derivative(model, rho);
      }
    }
    write_csv(join_path(cfg.output_dir, "flux.csv"),
              Table{{"epsilon", "rho", "f", "f_prime", "f_second"},
                    {col_eps, col_rho, col_f, col_f1, col_f2}});
  }

  // Inflection offset y* and its small-width ratio y* M / eps^2 per width,
  // plus the sign-tracking quartic sampled across the band.
  const double coeff = convexity_coefficient(
      FluxModel{FluxKind::DiscontinuousPL, rho_m, gamma, 0.0});
  {
    const Eigen::Index n = static_cast<Eigen::Index>(epsilons.size());
    Eigen::ArrayXd col_eps(n), col_root(n), col_ratio(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double eps = epsilons[static_cast<std::size_t>(i)];
      const double root = convexity_root(coeff, eps);
      col_eps[i] = eps;
      col_root[i] = root;
      col_ratio[i] = root * coeff / (eps * eps);
    }
    write_csv(join_path(cfg.output_dir, "convexity.csv"),
              Table{{"epsilon", "root", "ratio"},
                    {col_eps, col_root, col_ratio}});
  }
  {
    const Eigen::Index per_block = 201;
    const Eigen::Index n =
        per_block * static_cast<Eigen::Index>(epsilons.size());
    Eigen::ArrayXd col_eps(n), col_z(n), col_p(n);
    Eigen::Index row = 0;
    for (double eps : epsilons) {
      for (Eigen::Index k = 0; k < per_block; ++k, ++row) {
        const double z = -1.0 + 2.0 * static_cast<double>(k) /
                                    static_cast<double>(per_block - 1);
        col_eps[row] = eps;
        col_z[row] = z;
        col_p[row] = convexity_polynomial(coeff, eps, eps * z);
      }
    }
    write_csv(join_path(cfg.output_dir, "convexity_curve.csv"),
              Table{{"epsilon", "z", "p"}, {col_eps, col_z, col_p}});
  }

  // Anisotropy margins for the base discontinuous model and each width.
  const int kAnisotropySamples = 201;
  bool all_pass = true;
  {
    const AnisotropyReport base = anisotropy_check(
        FluxModel{FluxKind::DiscontinuousPL, rho_m, gamma, 0.0},
        kAnisotropySamples);
    m.set("result.anisotropy.discontinuous.margin", base.worst_margin);
    m.set("result.anisotropy.discontinuous.pass", base.pass);
    all_pass = all_pass && base.pass;
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
      const AnisotropyReport rep = anisotropy_check(
          FluxModel{FluxKind::Mollified, rho_m, gamma, epsilons[i]},
          kAnisotropySamples);
      const std::string prefix =
          "result.anisotropy.mollified_" + std::to_string(i);
      m.set(prefix + ".epsilon", epsilons[i]);
      m.set(prefix + ".margin", rep.worst_margin);
      m.set(prefix + ".pass", rep.pass);
      all_pass = all_pass && rep.pass;
    }
  }

  m.set("result.mollifier_constant", mollifier_constant());
  m.set("result.mollifier_mass", mollifier_mass());
  m.set("result.convexity_coefficient", coeff);
  m.set("result.anisotropy_all_pass", all_pass);
  m.set("result.wall_ms", clock.elapsed_ms());
  m.write(join_path(cfg.output_dir, "manifest.txt"));
  std::printf(
      "mollifier-report: %zu width(s), anisotropy %s, tables in %s\n",
      epsilons.size(), all_pass ? "pass" : "FAIL", cfg.output_dir.c_str());
}

}  // namespace kinwave
