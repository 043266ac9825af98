#include "kinwave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kinwave {

namespace {

Eigen::ArrayXd exact_cell_averages(const GridState& state,
                                   const StepProfile& exact) {
  Eigen::ArrayXd avg(state.n_cells);
  for (Eigen::Index j = 0; j < state.n_cells; ++j) {
    avg[j] = exact.average(state.interface_position(j),
                           state.interface_position(j + 1));
  }
  return avg;
}

// Integer cell count for a requested spacing; rejects spacings that do not
// tile the domain.
Eigen::Index cells_for_spacing(double length, double dx) {
  if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
  const double ratio = length / dx;
  const auto n = static_cast<Eigen::Index>(std::llround(ratio));
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-8 * ratio) {
    throw std::invalid_argument("dx = " + std::to_string(dx) +
                                " does not evenly divide the domain");
  }
  return n;
}

}  // namespace

double l1_norm(double dx, const Eigen::ArrayXd& diff) {
  return dx * diff.abs().sum();
}

double l2_norm(double dx, const Eigen::ArrayXd& diff) {
  return std::sqrt(dx * diff.square().sum());
}

double l1_error(const GridState& state, const StepProfile& exact) {
  return l1_norm(state.dx, state.q - exact_cell_averages(state, exact));
}

double l2_error(const GridState& state, const StepProfile& exact) {
  return l2_norm(state.dx, state.q - exact_cell_averages(state, exact));
}

double fit_rate(const std::vector<std::pair<double, double>>& levels) {
  if (levels.size() < 3) {
    throw std::invalid_argument("rate fit needs at least 3 levels");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [dx, err] : levels) {
    if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
    if (err < 0.0) throw std::invalid_argument("errors must be >= 0");
    if (err == 0.0) return std::numeric_limits<double>::infinity();
    mean_x += std::log(dx);
    mean_y += std::log(err);
  }
  mean_x /= static_cast<double>(levels.size());
  mean_y /= static_cast<double>(levels.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [dx, err] : levels) {
    const double x = std::log(dx) - mean_x;
    sxy += x * (std::log(err) - mean_y);
    sxx += x * x;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("rate fit needs at least two distinct dx");
  }
  return sxy / sxx;
}

double total_mass(const GridState& state) { return state.dx * state.q.sum(); }

std::vector<std::pair<double, double>> conservation_error(
    const std::vector<GridState>& snapshots) {
  std::vector<std::pair<double, double>> series;
  if (snapshots.empty()) return series;
  const double v0 = total_mass(snapshots.front());
  series.reserve(snapshots.size());
  for (const GridState& s : snapshots) {
    const double er = v0 == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                : (total_mass(s) - v0) / v0;
    series.emplace_back(s.time, er);
  }
  return series;
}

Eigen::ArrayXd restrict_by_blocks(const Eigen::ArrayXd& fine,
                                  Eigen::Index factor) {
  if (factor < 1) throw std::invalid_argument("factor must be >= 1");
  if (fine.size() % factor != 0) {
    throw std::invalid_argument(
        "fine grid size must be divisible by the restriction factor");
  }
  const Eigen::Index n = fine.size() / factor;
  Eigen::ArrayXd coarse(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    coarse[j] = fine.segment(j * factor, factor).mean();
  }
  return coarse;
}

RunReport riemann_convergence(const RiemannData& data,
                              const SolverConfig& config, double x_lo,
                              double x_hi, BoundaryCondition bc,
                              const std::vector<double>& dx_ladder) {
  validate(config);
  if (dx_ladder.empty()) throw std::invalid_argument("empty grid ladder");
  std::vector<double> ladder = dx_ladder;
  std::sort(ladder.begin(), ladder.end(), std::greater<>());

  RunReport report;
  const StepProfile exact =
      riemann_profile(config.model, data, config.t_end);
  std::vector<std::pair<double, double>> l1_levels;
  std::vector<std::pair<double, double>> l2_levels;
  for (double dx : ladder) {
    const Eigen::Index n = cells_for_spacing(x_hi - x_lo, dx);
    const GridState initial = make_riemann_state(data, x_lo, x_hi, n, bc);
    const GridState final_state =
        run(initial, config, {}).snapshots.back();
    ConvergenceLevel level;
    level.dx = final_state.dx;
    level.l1 = l1_error(final_state, exact);
    level.l2 = l2_error(final_state, exact);
    report.levels.push_back(level);
    l1_levels.emplace_back(level.dx, level.l1);
    l2_levels.emplace_back(level.dx, level.l2);
  }
  report.rate_l1 = fit_rate(l1_levels);
  report.rate_l2 = fit_rate(l2_levels);
  return report;
}

RunReport self_convergence(
    const std::function<GridState(Eigen::Index)>& make_initial,
    const SolverConfig& config, Eigen::Index n0, int levels) {
  validate(config);
  if (levels < 3) throw std::invalid_argument("need at least 3 levels");
  if (n0 < 1) throw std::invalid_argument("n0 must be >= 1");

  // Solve every level, coarsest to finest.
  std::vector<GridState> solutions;
  Eigen::Index n = n0;
  for (int p = 0; p <= levels; ++p) {
    GridState initial = make_initial(n);
    if (initial.n_cells != n) {
      throw std::invalid_argument(
          "make_initial returned an unexpected cell count");
    }
    solutions.push_back(run(initial, config, {}).snapshots.back());
    n *= 3;
  }

  const GridState& finest = solutions.back();
  RunReport report;
  std::vector<std::pair<double, double>> l1_levels;
  std::vector<std::pair<double, double>> l2_levels;
  Eigen::Index factor = 1;
  for (int p = levels - 1; p >= 0; --p) {
    factor *= 3;
    const GridState& coarse = solutions[static_cast<std::size_t>(p)];
    const Eigen::ArrayXd reference = restrict_by_blocks(finest.q, factor);
    ConvergenceLevel level;
    level.dx = coarse.dx;
    level.l1 = l1_norm(coarse.dx, coarse.q - reference);
    level.l2 = l2_norm(coarse.dx, coarse.q - reference);
    report.levels.push_back(level);
    l1_levels.emplace_back(level.dx, level.l1);
    l2_levels.emplace_back(level.dx, level.l2);
  }
  // Coarsest first for the report's decreasing-dx ordering.
  std::reverse(report.levels.begin(), report.levels.end());
  report.rate_l1 = fit_rate(l1_levels);
  report.rate_l2 = fit_rate(l2_levels);
  return report;
}

bool has_left_plateau(const GridState& state, double rho_m, double tol,
                      Eigen::Index min_run) {
  Eigen::Index peak = 0;
  state.q.maxCoeff(&peak);
  Eigen::Index running = 0;
  for (Eigen::Index j = 0; j < peak; ++j) {
    running = std::abs(state.q[j] - rho_m) <= tol ? running + 1 : 0;
    if (running >= min_run) return true;
  }
  return false;
}

}  // namespace kinwave
