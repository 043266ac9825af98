#include "kinwave/flux.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kinwave {

namespace {

// Unnormalized bump exp(1/(s^2-1)) on (-1,1), zero outside.
double raw_bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(1.0 / (s * s - 1.0));
}

// Adaptive Simpson quadrature with the standard |S2-S1|/15 error estimate.
// The integrands here are smooth and compactly supported, so this converges
// quickly at tight tolerances.
double adaptive_simpson(double (*f)(double), double a, double b, double fa,
                        double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(double (*f)(double), double a, double b, double tol) {
  if (!(a < b)) return 0.0;
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

constexpr double kQuadTol = 1e-13;

// Bump mass computed once; its reciprocal normalizes the mollifier.
double raw_bump_mass() {
  static const double mass = integrate(&raw_bump, -1.0, 0.0, kQuadTol) +
                             integrate(&raw_bump, 0.0, 1.0, kQuadTol);
  return mass;
}

bool needs_epsilon(FluxKind kind) {
  return kind == FluxKind::RegularizedPL || kind == FluxKind::Mollified;
}

void require_kind(const FluxModel& model, FluxKind kind, const char* op) {
  if (model.kind != kind) {
    throw std::invalid_argument(std::string(op) +
                                " requires the mollified flux kind");
  }
}

}  // namespace

void validate(const FluxModel& model) {
  if (!(model.rho_m > 0.0 && model.rho_m < 1.0)) {
    throw std::invalid_argument("rho_m must satisfy 0 < rho_m < 1 (got " +
                                std::to_string(model.rho_m) + ")");
  }
  const double gamma_max = model.rho_m / (1.0 - model.rho_m);
  if (!(model.gamma > 0.0 && model.gamma < gamma_max)) {
    throw std::invalid_argument(
        "gamma must satisfy 0 < gamma < rho_m/(1-rho_m) = " +
        std::to_string(gamma_max) + " (got " + std::to_string(model.gamma) +
        ")");
  }
  if (needs_epsilon(model.kind)) {
    const double eps_max = std::min(model.rho_m, 1.0 - model.rho_m);
    if (!(model.epsilon > 0.0 && model.epsilon < eps_max)) {
      throw std::invalid_argument(
          "epsilon must satisfy 0 < epsilon < min(rho_m, 1-rho_m) = " +
          std::to_string(eps_max) + " (got " + std::to_string(model.epsilon) +
          ")");
    }
  }
}

double free_flow_flux(double rho) { return rho; }

double congested_flux(const FluxModel& model, double rho) {
  return model.gamma * (1.0 - rho);
}

double flux_jump(const FluxModel& model) {
  return free_flow_flux(model.rho_m) - congested_flux(model, model.rho_m);
}

double compound_threshold(const FluxModel& model) {
  return model.gamma / (model.gamma + 1.0);
}

double eval_flux(const FluxModel& model, double rho) {
  validate(model);
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::domain_error("density must lie in [0,1] (got " +
                            std::to_string(rho) + ")");
  }
  switch (model.kind) {
    case FluxKind::DiscontinuousPL:
      return rho < model.rho_m ? free_flow_flux(rho)
                               : congested_flux(model, rho);
    case FluxKind::ContinuousPL:
      return rho < model.rho_m
                 ? free_flow_flux(rho)
                 : model.rho_m / (1.0 - model.rho_m) * (1.0 - rho);
    case FluxKind::RegularizedPL: {
      const double lo = model.rho_m - model.epsilon;
      const double hi = model.rho_m + model.epsilon;
      if (rho <= lo) return free_flow_flux(rho);
      if (rho >= hi) return congested_flux(model, rho);
      // Chord joining (lo, g_f(lo)) and (hi, g_c(hi)) across the band.
      const double f_lo = free_flow_flux(lo);
      const double f_hi = congested_flux(model, hi);
      return f_lo + (f_hi - f_lo) * (rho - lo) / (hi - lo);
    }
    case FluxKind::Mollified:
      return rho + (model.gamma - (model.gamma + 1.0) * rho) *
                       mollifier_cdf((rho - model.rho_m) / model.epsilon);
  }
  throw std::invalid_argument("unknown flux kind");
}

double eval_flux_slope(const FluxModel& model, double rho) {
  validate(model);
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::domain_error("density must lie in [0,1] (got " +
                            std::to_string(rho) + ")");
  }
  switch (model.kind) {
    case FluxKind::DiscontinuousPL:
      return rho < model.rho_m ? 1.0 : -model.gamma;
    case FluxKind::ContinuousPL:
      return rho < model.rho_m ? 1.0 : -model.rho_m / (1.0 - model.rho_m);
    case FluxKind::RegularizedPL: {
      const double lo = model.rho_m - model.epsilon;
      const double hi = model.rho_m + model.epsilon;
      if (rho <= lo) return 1.0;
      if (rho >= hi) return -model.gamma;
      return (congested_flux(model, hi) - free_flow_flux(lo)) / (hi - lo);
    }
    case FluxKind::Mollified:
      return mollified_flux_derivative(model, rho);
  }
  throw std::invalid_argument("unknown flux kind");
}

double mollifier(double s) {
  return mollifier_constant() * raw_bump(s);
}

double mollifier_derivative(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double d = s * s - 1.0;
  return mollifier(s) * (-2.0 * s / (d * d));
}

double mollifier_constant() { return 1.0 / raw_bump_mass(); }

double mollifier_mass() { return mollifier_constant() * raw_bump_mass(); }

double mollifier_cdf(double z) {
  if (z <= -1.0) return 0.0;
  if (z >= 1.0) return 1.0;
  // Integrate from the nearer end of the support and exploit symmetry so
  // the adaptive recursion always sees a short interval.
  if (z <= 0.0) {
    return mollifier_constant() * integrate(&raw_bump, -1.0, z, kQuadTol);
  }
  return 1.0 - mollifier_constant() * integrate(&raw_bump, z, 1.0, kQuadTol);
}

double mollified_flux(const FluxModel& model, double rho) {
  require_kind(model, FluxKind::Mollified, "mollified_flux");
  return eval_flux(model, rho);
}

double mollified_flux_derivative(const FluxModel& model, double rho) {
  require_kind(model, FluxKind::Mollified, "mollified_flux_derivative");
  validate(model);
  const double z = (rho - model.rho_m) / model.epsilon;
  const double eta_eps = mollifier(z) / model.epsilon;
  return 1.0 + (model.gamma - (model.gamma + 1.0) * rho) * eta_eps -
         (model.gamma + 1.0) * mollifier_cdf(z);
}

double mollified_flux_second_derivative(const FluxModel& model, double rho) {
  require_kind(model, FluxKind::Mollified,
               "mollified_flux_second_derivative");
  validate(model);
  const double eps = model.epsilon;
  const double z = (rho - model.rho_m) / eps;
  const double eta_eps = mollifier(z) / eps;
  const double eta_eps_prime = mollifier_derivative(z) / (eps * eps);
  return (model.gamma - (model.gamma + 1.0) * rho) * eta_eps_prime -
         2.0 * (model.gamma + 1.0) * eta_eps;
}

double convexity_coefficient(const FluxModel& model) {
  return model.rho_m - model.gamma / (model.gamma + 1.0);
}

double convexity_polynomial(double m, double epsilon, double y) {
  const double y2 = y * y;
  return -y2 * y2 / (epsilon * epsilon) + 3.0 * y2 + m * y -
         epsilon * epsilon;
}

double convexity_root(double m, double epsilon) {
  if (!(m > 0.0)) {
    throw std::invalid_argument("convexity coefficient must be positive");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  // The root is assumed unique on (-eps, eps); verify with a fine sign scan
  // before trusting the bracket.
  const int n_scan = 4001;
  int sign_changes = 0;
  int prev_sign = 0;
  for (int i = 0; i < n_scan; ++i) {
    const double y =
        -epsilon + 2.0 * epsilon * static_cast<double>(i) / (n_scan - 1);
    const double p = convexity_polynomial(m, epsilon, y);
    const int sign = p > 0.0 ? 1 : (p < 0.0 ? -1 : 0);
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) ++sign_changes;
      prev_sign = sign;
    }
  }
  if (sign_changes != 1) {
    throw std::runtime_error(
        "convexity polynomial has " + std::to_string(sign_changes) +
        " sign changes on (-epsilon, epsilon); expected exactly one");
  }
  // P(0) = -eps^2 < 0 and P(eps) = eps^2 + m*eps > 0 bracket the root.
  double a = 0.0;
  double b = epsilon;
  double pa = convexity_polynomial(m, epsilon, a);
  if (!(pa < 0.0) || !(convexity_polynomial(m, epsilon, b) > 0.0)) {
    throw std::runtime_error("convexity root bracket (0, epsilon) failed");
  }
  // Bisect until the midpoint can no longer be distinguished from an
  // endpoint in double precision.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double pm = convexity_polynomial(m, epsilon, mid);
    if (pm == 0.0) return mid;
    if ((pm < 0.0) == (pa < 0.0)) {
      a = mid;
      pa = pm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

AnisotropyReport anisotropy_check(const FluxModel& model, int samples) {
  validate(model);
  if (samples < 2) {
    throw std::invalid_argument("anisotropy_check needs at least 2 samples");
  }
  double worst = std::numeric_limits<double>::infinity();

  const auto vehicle_speed = [&](double rho) {
    return eval_flux(model, rho) / rho;
  };

  // Pointwise condition: characteristic speed never exceeds vehicle speed.
  // Checked per branch; at the branch switch of the discontinuous flux the
  // free-flow side is checked with free-flow values (one-sided).
  for (int i = 1; i < samples; ++i) {
    const double rho = static_cast<double>(i) / (samples - 1);
    worst = std::min(worst, vehicle_speed(rho) - eval_flux_slope(model, rho));
    if (model.kind == FluxKind::DiscontinuousPL && rho == model.rho_m) {
      worst = std::min(worst, free_flow_flux(rho) / rho - 1.0);
    }
  }

  // Pairwise condition: the chord (elementary-wave) speed between any two
  // states never exceeds the slower of the two vehicle speeds.
  for (int i = 1; i < samples; ++i) {
    const double rho_l = static_cast<double>(i) / (samples - 1);
    for (int j = 1; j < samples; ++j) {
      if (i == j) continue;  // condition is vacuous for equal states
      const double rho_r = static_cast<double>(j) / (samples - 1);
      const double chord = (eval_flux(model, rho_r) - eval_flux(model, rho_l)) /
                           (rho_r - rho_l);
      worst = std::min(
          worst, std::min(vehicle_speed(rho_l), vehicle_speed(rho_r)) - chord);
    }
  }

  return AnisotropyReport{worst >= -1e-12, worst};
}

}  // namespace kinwave
