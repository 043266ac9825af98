#pragma once

#include <vector>

#include <Eigen/Core>

#include "kinwave/exact.hpp"
#include "kinwave/flux.hpp"
#include "kinwave/riemann.hpp"

namespace kinwave {

enum class BoundaryCondition { Periodic, Outflow };
enum class Limiter { None, Minmod, Superbee, MC };
enum class Scheme { Godunov, HighResolution };

// Uniform 1D finite-volume grid carrying cell-average densities.
struct GridState {
  double x_lo = 0.0;
  double x_hi = 1.0;
  Eigen::Index n_cells = 0;
  double dx = 0.0;
  Eigen::ArrayXd q;
  BoundaryCondition bc = BoundaryCondition::Periodic;
  double time = 0.0;

  double interface_position(Eigen::Index i) const { return x_lo + i * dx; }
  double cell_center(Eigen::Index j) const { return x_lo + (j + 0.5) * dx; }
};

struct SolverConfig {
  double cfl = 0.9;
  double delta = 1e-5;
  Limiter limiter = Limiter::Superbee;
  Scheme scheme = Scheme::HighResolution;
  double t_end = 0.0;
  FluxModel model{};
};

// Throws std::invalid_argument on an invalid configuration or grid.
void validate(const SolverConfig& config);
void validate(const GridState& state);

// Grid constructors.  Initial cell values are exact averages of the initial
// profile over each cell (the Gaussian via the error function, the jump by
// piecewise integration), so refinement studies start from consistent data.
GridState make_grid(double x_lo, double x_hi, Eigen::Index n_cells,
                    BoundaryCondition bc);
GridState make_riemann_state(const RiemannData& data, double x_lo, double x_hi,
                             Eigen::Index n_cells, BoundaryCondition bc);
GridState make_gaussian_state(double sigma, double amplitude, double offset,
                              double x_lo, double x_hi, Eigen::Index n_cells,
                              BoundaryCondition bc);

// Limiter function value phi(theta) for a wave-strength ratio theta.
double limiter_value(Limiter limiter, double theta);

// Density of the first cell past j+1 (the cell right of interface j+1/2)
// lying outside the plateau band |q - rho_m| <= delta.  Periodic grids wrap
// (scanning at most n-1 cells); outflow grids stop at the last cell.
// Returns rho_m itself when every scanned cell is inside the band.
double lookahead_density(const Eigen::ArrayXd& q, Eigen::Index j, double rho_m,
                         double delta, BoundaryCondition bc);

struct WaveStats {
  long lookahead_scans = 0;
  long sentinel_fallbacks = 0;  // scans that found only plateau cells
};

// One fan per interface: fans[i] sits between cells i-1 and i.  fans[0] and
// fans[n] are the boundary interfaces; for periodic grids they are the same
// physical interface and hold identical fans, for outflow grids the ghost
// state equals the boundary cell and the fans are null.
std::vector<WaveFan> compute_interface_waves(const GridState& state,
                                             const SolverConfig& config,
                                             WaveStats* stats = nullptr);

// cfl * min(dx/|s|) over all nonzero wave speeds; dt_max when no wave moves.
double select_dt(const std::vector<WaveFan>& fans, double dx, double cfl,
                 double dt_max);

struct StepResult {
  GridState state;
  double dt_applied = 0.0;  // <= requested dt when the step was halved
  int halvings = 0;
};

// One update of the requested size: fluctuation sweep plus (scheme
// permitting) limited second-order corrections.  A step that leaves
// [0,1] beyond rounding tolerance is retried with halved dt, at most five
// times, then reported as a failure (std::runtime_error).
StepResult advance_by(const GridState& state, const SolverConfig& config,
                      double dt, WaveStats* stats = nullptr);

// Single adaptive step at the configured CFL number.  step_first_order
// applies no corrections; step_high_resolution applies the configured
// limiter (with Limiter::None it reproduces step_first_order exactly).
GridState step_first_order(const GridState& state, const SolverConfig& config);
GridState step_high_resolution(const GridState& state,
                               const SolverConfig& config);

struct RunResult {
  std::vector<GridState> snapshots;
  long steps = 0;
  long halvings = 0;
  long sentinel_fallbacks = 0;
};

// Advances from the initial state to t_end with adaptive steps, clipping
// steps to land exactly on each requested output time (and on t_end, whose
// snapshot is always the last entry).  output_times must be ascending and
// within [initial.time, t_end].
RunResult run(const GridState& initial, const SolverConfig& config,
              const std::vector<double>& output_times);

}  // namespace kinwave
