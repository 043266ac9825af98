#pragma once

#include <string>
#include <vector>

#include "kinwave/analysis.hpp"
#include "kinwave/engine.hpp"

namespace kinwave {

enum class ExperimentKind {
  Riemann,
  Gaussian,
  RingCongestion,
  Convergence,
  Conservation,
  MollifierReport,
  FluxCompare,
};

enum class InitialConditionKind { Riemann, Gaussian };

// Initial profile: a two-state jump or a Gaussian bump
// offset + amplitude * exp(-x^2/(2 sigma^2)).
struct InitialCondition {
  InitialConditionKind kind = InitialConditionKind::Riemann;
  RiemannData riemann{0.9, 0.2, 0.0};
  double sigma = 0.1;
  double amplitude = 1.0;
  double offset = 0.0;
};

// One experiment, as described by a flat key-value config file with dotted
// section prefixes (e.g. "solver.cfl=0.9").  See parse_config for the key
// set and defaults.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Riemann;
  InitialCondition ic;
  double x_lo = -1.0;
  double x_hi = 1.0;
  Eigen::Index n_cells = 400;
  BoundaryCondition bc = BoundaryCondition::Periodic;
  SolverConfig solver;
  std::vector<double> output_times;
  std::string output_dir = ".";
  std::vector<double> convergence_dx;    // two-state refinement ladder
  Eigen::Index convergence_n0 = 10;      // coarsest self-convergence grid
  int convergence_levels = 6;            // refinement depth (factor 3)
  std::vector<double> report_epsilons;   // smoothing widths for the report
  std::vector<double> conservation_deltas;  // plateau-band sweep
};

// Parses and fully validates a config document; throws
// std::invalid_argument with line/key context on malformed input, unknown
// keys, or violated invariants.
ExperimentConfig parse_config(const std::string& text);

// Reads the file and parses it.
ExperimentConfig load_config(const std::string& path);

// The grid ladder used when a two-state convergence config gives none.
std::vector<double> default_convergence_ladder();

// Builds the initial grid state described by the config.
GridState make_initial_state(const ExperimentConfig& config);

// Enum <-> config-value spellings (lower_snake_case in files).
std::string to_string(ExperimentKind kind);
std::string to_string(InitialConditionKind kind);
std::string to_string(BoundaryCondition bc);
std::string to_string(Limiter limiter);
std::string to_string(Scheme scheme);
std::string to_string(FluxKind kind);

}  // namespace kinwave
