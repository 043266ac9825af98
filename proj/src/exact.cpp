#include "kinwave/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kinwave/riemann.hpp"

namespace kinwave {

namespace {

// Wave decomposition of a self-similar (or merged) solution: vals[i] holds
// between pos[i-1] and pos[i]; left_owns[i] says which neighbouring piece
// supplies the value exactly on the trajectory pos[i].
struct ExactSolution {
  std::vector<double> pos;
  std::vector<double> vals;
  std::vector<bool> left_owns;
};

void check_density(double q, const char* name) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0,1] (got " +
                            std::to_string(q) + ")");
  }
}

void check_inputs(const FluxModel& model, double t) {
  validate(model);
  if (model.kind != FluxKind::DiscontinuousPL) {
    throw std::invalid_argument(
        "closed-form solutions are available only for the discontinuous "
        "flux");
  }
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
}

double branch_flux(const FluxModel& m, double q) {
  return q < m.rho_m ? free_flow_flux(q) : congested_flux(m, q);
}

ExactSolution riemann_solution(const FluxModel& model, const RiemannData& d,
                               double t) {
  check_inputs(model, t);
  check_density(d.rho_l, "rho_l");
  check_density(d.rho_r, "rho_r");
  const double rho_m = model.rho_m;
  const double gamma = model.gamma;
  const double ql = d.rho_l;
  const double qr = d.rho_r;

  if (ql == qr) return {{}, {ql}, {}};

  // Pure contact: both states on one branch, or one state exactly at the
  // plateau density (branch then chosen by the opposite state).
  const bool left_plateau = ql == rho_m;
  const bool right_plateau = qr == rho_m;
  const bool both_free = ql < rho_m && qr < rho_m;
  const bool both_congested = ql > rho_m && qr > rho_m;
  if (both_free || both_congested || left_plateau || right_plateau) {
    const double probe = left_plateau ? qr : ql;
    const double speed = probe < rho_m ? 1.0 : -gamma;
    // The plateau keeps its value on the trajectory; otherwise the jump
    // carries the right state.
    const bool left_owns = left_plateau;
    return {{d.x0 + speed * t}, {ql, qr}, {left_owns}};
  }

  if (qr < rho_m) {
    // Congested left, free right: left shock releasing onto the plateau,
    // then a unit-speed contact shedding the right state.
    const double s =
        (branch_flux(model, ql) - free_flow_flux(rho_m)) / (ql - rho_m);
    return {{d.x0 + s * t, d.x0 + t}, {ql, rho_m, qr}, {false, true}};
  }

  // Free left, congested right.
  if (compound_threshold(model) >= ql) {
    // Single shock joining the outer states across the flux jump.
    const double s = (branch_flux(model, qr) - branch_flux(model, ql)) /
                     (qr - ql);
    return {{d.x0 + s * t}, {ql, qr}, {false}};
  }
  // Compound: shock up to the plateau, then a contact at the congested
  // characteristic speed.
  const double s =
      (congested_flux(model, rho_m) - branch_flux(model, ql)) / (rho_m - ql);
  return {{d.x0 + s * t, d.x0 - gamma * t}, {ql, rho_m, qr}, {false, true}};
}

ExactSolution double_riemann_solution(const FluxModel& model,
                                      const DoubleRiemannData& d, double t) {
  check_inputs(model, t);
  if (!(d.x1 < d.x2)) throw std::invalid_argument("x1 must be < x2");
  const DoubleRiemannCase dcase =
      classify_double_riemann(model, d.c_left, d.c_right);
  const auto [lambda1, lambda2] =
      double_riemann_speeds(dcase, d.c_left, d.c_right, model);

  if (dcase == DoubleRiemannCase::FreeCongestedColliding) {
    // The 1-wave outruns the 2-wave; past the collision time the plateau is
    // consumed and a single shock joins the outer states.
    const double t_star = (d.x2 - d.x1) / (lambda1 - lambda2);
    if (t >= t_star) {
      const double x_star = d.x1 + lambda1 * t_star;
      const double s = (branch_flux(model, d.c_right) -
                        branch_flux(model, d.c_left)) /
                       (d.c_right - d.c_left);
      return {{x_star + s * (t - t_star)}, {d.c_left, d.c_right}, {false}};
    }
  }
  return {{d.x1 + lambda1 * t, d.x2 + lambda2 * t},
          {d.c_left, model.rho_m, d.c_right},
          {false, true}};
}

double eval_solution(const ExactSolution& s, double x) {
  for (std::size_t i = 0; i < s.pos.size(); ++i) {
    if (x < s.pos[i]) return s.vals[i];
    if (x == s.pos[i]) return s.left_owns[i] ? s.vals[i] : s.vals[i + 1];
  }
  return s.vals.back();
}

// Collapse zero-width pieces and equal neighbours into a clean profile.
StepProfile to_profile(const ExactSolution& s) {
  StepProfile p;
  p.values.push_back(s.vals[0]);
  for (std::size_t i = 0; i < s.pos.size(); ++i) {
    if (!p.breakpoints.empty() && s.pos[i] == p.breakpoints.back()) {
      p.values.back() = s.vals[i + 1];
    } else {
      p.breakpoints.push_back(s.pos[i]);
      p.values.push_back(s.vals[i + 1]);
    }
    if (p.values.size() >= 2 &&
        p.values[p.values.size() - 2] == p.values.back()) {
      p.values.pop_back();
      p.breakpoints.pop_back();
    }
  }
  return p;
}

}  // namespace

double StepProfile::operator()(double x) const {
  const auto it =
      std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
  return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

double StepProfile::average(double a, double b) const {
  if (!(a < b)) throw std::invalid_argument("average requires a < b");
  double acc = 0.0;
  double lo = a;
  std::size_t i = static_cast<std::size_t>(
      std::upper_bound(breakpoints.begin(), breakpoints.end(), a) -
      breakpoints.begin());
  for (; i < breakpoints.size() && breakpoints[i] < b; ++i) {
    acc += values[i] * (breakpoints[i] - lo);
    lo = breakpoints[i];
  }
  acc += values[i] * (b - lo);
  return acc / (b - a);
}

double eval_riemann_exact(const FluxModel& model, const RiemannData& data,
                          double x, double t) {
  return eval_solution(riemann_solution(model, data, t), x);
}

double eval_double_riemann_exact(const FluxModel& model,
                                 const DoubleRiemannData& data, double x,
                                 double t) {
  return eval_solution(double_riemann_solution(model, data, t), x);
}

StepProfile riemann_profile(const FluxModel& model, const RiemannData& data,
                            double t) {
  return to_profile(riemann_solution(model, data, t));
}

StepProfile double_riemann_profile(const FluxModel& model,
                                   const DoubleRiemannData& data, double t) {
  return to_profile(double_riemann_solution(model, data, t));
}

}  // namespace kinwave
