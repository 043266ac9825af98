#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "kinwave/engine.hpp"

namespace kinwave {

struct ConvergenceLevel {
  double dx = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

struct RunReport {
  std::vector<ConvergenceLevel> levels;  // sorted by decreasing dx
  double rate_l1 = 0.0;
  double rate_l2 = 0.0;
  std::vector<std::pair<double, double>> er_series;  // (time, mass change)
};

// Discrete norms of a cellwise discrepancy: dx * sum|d| and
// sqrt(dx * sum d^2).
double l1_norm(double dx, const Eigen::ArrayXd& diff);
double l2_norm(double dx, const Eigen::ArrayXd& diff);

// Errors against the exact solution, comparing each cell average with the
// exact average of the piecewise-constant profile over that cell.
double l1_error(const GridState& state, const StepProfile& exact);
double l2_error(const GridState& state, const StepProfile& exact);

// Least-squares slope of log(error) vs log(dx) over >= 3 levels; returns
// +infinity if any error vanishes (converged to rounding already).
double fit_rate(const std::vector<std::pair<double, double>>& levels);

// Total mass dx * sum Q of a snapshot.
double total_mass(const GridState& state);

// Relative mass change (V^n - V^0)/V^0 per snapshot, paired with its time.
// A zero initial mass yields NaN entries.
std::vector<std::pair<double, double>> conservation_error(
    const std::vector<GridState>& snapshots);

// Block average of a fine cell sequence onto a grid coarser by an integer
// factor (exact restriction; fine.size() must be divisible by factor).
Eigen::ArrayXd restrict_by_blocks(const Eigen::ArrayXd& fine,
                                  Eigen::Index factor);

// Runs the configured scheme over a ladder of grids against the closed-form
// two-state solution at t_end and fits convergence rates.
RunReport riemann_convergence(const RiemannData& data,
                              const SolverConfig& config, double x_lo,
                              double x_hi, BoundaryCondition bc,
                              const std::vector<double>& dx_ladder);

// Fine-grid self-convergence: runs levels with n0 * 3^p cells for
// p = 0..levels, treats the finest as exact, restricts it onto each coarser
// grid by block averaging, and fits rates over the coarser levels.
// make_initial must build the initial state for a given cell count.
RunReport self_convergence(
    const std::function<GridState(Eigen::Index)>& make_initial,
    const SolverConfig& config, Eigen::Index n0, int levels);

// True when at least min_run consecutive cells left of the global maximum
// lie within tol of rho_m (the upstream plateau signature).
bool has_left_plateau(const GridState& state, double rho_m, double tol,
                      Eigen::Index min_run);

}  // namespace kinwave
