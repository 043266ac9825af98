#pragma once

#include <vector>

#include "kinwave/flux.hpp"

namespace kinwave {

// Two-state initial data with a single jump at x0: rho_l for x < x0,
// rho_r for x >= x0.
struct RiemannData {
  double rho_l = 0.0;
  double rho_r = 0.0;
  double x0 = 0.0;
};

// Three-state initial data: c_left for x < x1, the plateau density rho_m on
// the closed interval [x1, x2], and c_right for x > x2.
struct DoubleRiemannData {
  double c_left = 0.0;
  double c_right = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
};

// Piecewise-constant function of x: values[i] holds on
// (breakpoints[i-1], breakpoints[i]), with values.front() extending to
// -infinity and values.back() to +infinity.  Breakpoints are strictly
// increasing.  Pointwise evaluation is right-continuous; interval averages
// are independent of that convention.
struct StepProfile {
  std::vector<double> breakpoints;
  std::vector<double> values;

  double operator()(double x) const;
  // Exact mean of the profile over [a, b], a < b.
  double average(double a, double b) const;
};

// Closed-form entropy solution of the two-state problem for the
// discontinuous flux.  Conventions at wave trajectories: plateau intervals
// are closed (the plateau value wins on its boundary); a single shock or
// contact carries the right state at the jump ("x >= s t" gives rho_r).
// Throws std::invalid_argument for t < 0 or a non-discontinuous flux kind.
double eval_riemann_exact(const FluxModel& model, const RiemannData& data,
                          double x, double t);

// Closed-form solution of the three-state problem.  Requires both outer
// states off the plateau density.  In the colliding sub-case the two waves
// merge at a finite time, after which the profile is the single shock
// joining the outer states.
double eval_double_riemann_exact(const FluxModel& model,
                                 const DoubleRiemannData& data, double x,
                                 double t);

// Same solutions as step profiles, for exact cell averaging.
StepProfile riemann_profile(const FluxModel& model, const RiemannData& data,
                            double t);
StepProfile double_riemann_profile(const FluxModel& model,
                                   const DoubleRiemannData& data, double t);

}  // namespace kinwave
