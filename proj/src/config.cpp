#include "kinwave/config.hpp"

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kinwave {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " +
                              what);
}

double parse_double(std::size_t line, const std::string& key,
                    const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size() || value.empty()) {
    fail(line, "key '" + key + "' expects a number, got '" + value + "'");
  }
  return v;
}

long parse_long(std::size_t line, const std::string& key,
                const std::string& value) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size() || value.empty()) {
    fail(line, "key '" + key + "' expects an integer, got '" + value + "'");
  }
  return v;
}

std::vector<double> parse_double_list(std::size_t line, const std::string& key,
                                      const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(line, key, trim(item)));
  }
  if (out.empty()) fail(line, "key '" + key + "' expects a list of numbers");
  return out;
}

ExperimentKind parse_experiment(std::size_t line, const std::string& value) {
  if (value == "riemann") return ExperimentKind::Riemann;
  if (value == "gaussian") return ExperimentKind::Gaussian;
  if (value == "ring_congestion") return ExperimentKind::RingCongestion;
  if (value == "convergence") return ExperimentKind::Convergence;
  if (value == "conservation") return ExperimentKind::Conservation;
  if (value == "mollifier_report") return ExperimentKind::MollifierReport;
  if (value == "flux_compare") return ExperimentKind::FluxCompare;
  fail(line, "unknown experiment '" + value + "'");
}

InitialConditionKind parse_ic_kind(std::size_t line,
                                   const std::string& value) {
  if (value == "riemann") return InitialConditionKind::Riemann;
  if (value == "gaussian") return InitialConditionKind::Gaussian;
  fail(line, "unknown ic.kind '" + value + "'");
}

BoundaryCondition parse_bc(std::size_t line, const std::string& value) {
  if (value == "periodic") return BoundaryCondition::Periodic;
  if (value == "outflow") return BoundaryCondition::Outflow;
  fail(line, "unknown domain.bc '" + value + "'");
}

Limiter parse_limiter(std::size_t line, const std::string& value) {
  if (value == "none") return Limiter::None;
  if (value == "minmod") return Limiter::Minmod;
  if (value == "superbee") return Limiter::Superbee;
  if (value == "mc") return Limiter::MC;
  fail(line, "unknown solver.limiter '" + value + "'");
}

Scheme parse_scheme(std::size_t line, const std::string& value) {
  if (value == "godunov") return Scheme::Godunov;
  if (value == "high_resolution") return Scheme::HighResolution;
  fail(line, "unknown solver.scheme '" + value + "'");
}

FluxKind parse_flux_kind(std::size_t line, const std::string& value) {
  if (value == "discontinuous") return FluxKind::DiscontinuousPL;
  if (value == "continuous") return FluxKind::ContinuousPL;
  if (value == "regularized") return FluxKind::RegularizedPL;
  if (value == "mollified") return FluxKind::Mollified;
  fail(line, "unknown model.kind '" + value + "'");
}

bool ic_defaults_to_gaussian(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Gaussian:
    case ExperimentKind::RingCongestion:
    case ExperimentKind::Conservation:
    case ExperimentKind::FluxCompare:
      return true;
    default:
      return false;
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  bool experiment_seen = false;
  bool ic_kind_seen = false;
  std::set<std::string> seen;

  std::stringstream stream(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (!seen.insert(key).second) fail(line_no, "duplicate key '" + key + "'");

    if (key == "experiment") {
      cfg.experiment = parse_experiment(line_no, value);
      experiment_seen = true;
    } else if (key == "ic.kind") {
      cfg.ic.kind = parse_ic_kind(line_no, value);
      ic_kind_seen = true;
    } else if (key == "ic.rho_l") {
      cfg.ic.riemann.rho_l = parse_double(line_no, key, value);
    } else if (key == "ic.rho_r") {
      cfg.ic.riemann.rho_r = parse_double(line_no, key, value);
    } else if (key == "ic.x0") {
      cfg.ic.riemann.x0 = parse_double(line_no, key, value);
    } else if (key == "ic.sigma") {
      cfg.ic.sigma = parse_double(line_no, key, value);
    } else if (key == "ic.amplitude") {
      cfg.ic.amplitude = parse_double(line_no, key, value);
    } else if (key == "ic.offset") {
      cfg.ic.offset = parse_double(line_no, key, value);
    } else if (key == "domain.x_lo") {
      cfg.x_lo = parse_double(line_no, key, value);
    } else if (key == "domain.x_hi") {
      cfg.x_hi = parse_double(line_no, key, value);
    } else if (key == "domain.n_cells") {
      cfg.n_cells = static_cast<Eigen::Index>(parse_long(line_no, key, value));
    } else if (key == "domain.bc") {
      cfg.bc = parse_bc(line_no, value);
    } else if (key == "model.kind") {
      cfg.solver.model.kind = parse_flux_kind(line_no, value);
    } else if (key == "model.rho_m") {
      cfg.solver.model.rho_m = parse_double(line_no, key, value);
    } else if (key == "model.gamma") {
      cfg.solver.model.gamma = parse_double(line_no, key, value);
    } else if (key == "model.epsilon") {
      cfg.solver.model.epsilon = parse_double(line_no, key, value);
    } else if (key == "solver.cfl") {
      cfg.solver.cfl = parse_double(line_no, key, value);
    } else if (key == "solver.delta") {
      cfg.solver.delta = parse_double(line_no, key, value);
    } else if (key == "solver.limiter") {
      cfg.solver.limiter = parse_limiter(line_no, value);
    } else if (key == "solver.scheme") {
      cfg.solver.scheme = parse_scheme(line_no, value);
    } else if (key == "solver.t_end") {
      cfg.solver.t_end = parse_double(line_no, key, value);
    } else if (key == "output.times") {
      cfg.output_times = parse_double_list(line_no, key, value);
    } else if (key == "output.dir") {
      cfg.output_dir = value;
    } else if (key == "convergence.dx") {
      cfg.convergence_dx = parse_double_list(line_no, key, value);
    } else if (key == "convergence.n0") {
      cfg.convergence_n0 =
          static_cast<Eigen::Index>(parse_long(line_no, key, value));
    } else if (key == "convergence.levels") {
      cfg.convergence_levels =
          static_cast<int>(parse_long(line_no, key, value));
    } else if (key == "report.epsilons") {
      cfg.report_epsilons = parse_double_list(line_no, key, value);
    } else if (key == "conservation.deltas") {
      cfg.conservation_deltas = parse_double_list(line_no, key, value);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }

  if (!experiment_seen) {
    throw std::invalid_argument("config: missing required key 'experiment'");
  }
  if (!ic_kind_seen && ic_defaults_to_gaussian(cfg.experiment)) {
    cfg.ic.kind = InitialConditionKind::Gaussian;
  }
  if (cfg.report_epsilons.empty()) cfg.report_epsilons = {1e-1, 1e-2, 1e-3};
  if (cfg.conservation_deltas.empty()) {
    cfg.conservation_deltas = {1e-6, 1e-5, 1e-4};
  }

  // Cross-field validation against the module preconditions.
  validate(cfg.solver);
  if (!(cfg.x_hi > cfg.x_lo)) {
    throw std::invalid_argument("config: domain.x_hi must exceed domain.x_lo");
  }
  if (cfg.n_cells < 1) {
    throw std::invalid_argument("config: domain.n_cells must be >= 1");
  }
  if (cfg.ic.kind == InitialConditionKind::Gaussian && !(cfg.ic.sigma > 0.0)) {
    throw std::invalid_argument("config: ic.sigma must be positive");
  }
  for (std::size_t i = 0; i < cfg.output_times.size(); ++i) {
    const double t = cfg.output_times[i];
    if (t < 0.0 || t > cfg.solver.t_end) {
      throw std::invalid_argument(
          "config: output.times must lie within [0, solver.t_end]");
    }
    if (i > 0 && t < cfg.output_times[i - 1]) {
      throw std::invalid_argument("config: output.times must be ascending");
    }
  }
  for (double dx : cfg.convergence_dx) {
    if (!(dx > 0.0)) {
      throw std::invalid_argument("config: convergence.dx must be positive");
    }
  }
  if (cfg.convergence_n0 < 1) {
    throw std::invalid_argument("config: convergence.n0 must be >= 1");
  }
  for (double e : cfg.report_epsilons) {
    if (!(e > 0.0)) {
      throw std::invalid_argument("config: report.epsilons must be positive");
    }
  }
  for (double d : cfg.conservation_deltas) {
    if (!(d > 0.0)) {
      throw std::invalid_argument(
          "config: conservation.deltas must be positive");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<double> default_convergence_ladder() {
  return {0.05, 0.025, 0.0125, 0.00625, 0.003125, 0.0025};
}

GridState make_initial_state(const ExperimentConfig& config) {
  if (config.ic.kind == InitialConditionKind::Riemann) {
    return make_riemann_state(config.ic.riemann, config.x_lo, config.x_hi,
                              config.n_cells, config.bc);
  }
  return make_gaussian_state(config.ic.sigma, config.ic.amplitude,
                             config.ic.offset, config.x_lo, config.x_hi,
                             config.n_cells, config.bc);
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Riemann:
      return "riemann";
    case ExperimentKind::Gaussian:
      return "gaussian";
    case ExperimentKind::RingCongestion:
      return "ring_congestion";
    case ExperimentKind::Convergence:
      return "convergence";
    case ExperimentKind::Conservation:
      return "conservation";
    case ExperimentKind::MollifierReport:
      return "mollifier_report";
    case ExperimentKind::FluxCompare:
      return "flux_compare";
  }
  return "unknown";
}

std::string to_string(InitialConditionKind kind) {
  return kind == InitialConditionKind::Riemann ? "riemann" : "gaussian";
}

std::string to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::Periodic ? "periodic" : "outflow";
}

std::string to_string(Limiter limiter) {
  switch (limiter) {
    case Limiter::None:
      return "none";
    case Limiter::Minmod:
      return "minmod";
    case Limiter::Superbee:
      return "superbee";
    case Limiter::MC:
      return "mc";
  }
  return "unknown";
}

std::string to_string(Scheme scheme) {
  return scheme == Scheme::Godunov ? "godunov" : "high_resolution";
}

std::string to_string(FluxKind kind) {
  switch (kind) {
    case FluxKind::DiscontinuousPL:
      return "discontinuous";
    case FluxKind::ContinuousPL:
      return "continuous";
    case FluxKind::RegularizedPL:
      return "regularized";
    case FluxKind::Mollified:
      return "mollified";
  }
  return "unknown";
}

}  // namespace kinwave
