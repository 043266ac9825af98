#pragma once

namespace kinwave {

// The four fundamental-diagram shapes the library understands.
//
// DiscontinuousPL  free-flow branch g_f(rho) = rho on [0, rho_m), congested
//                  branch g_c(rho) = gamma*(1 - rho) on [rho_m, 1]; the flux
//                  jumps DOWN by g_f(rho_m) - g_c(rho_m) at rho_m.
// ContinuousPL     same free-flow branch, congested slope steepened to
//                  rho_m/(1 - rho_m) so the two branches meet at rho_m.
// RegularizedPL    DiscontinuousPL outside [rho_m - eps, rho_m + eps], the
//                  straight chord across that band inside it (continuous).
// Mollified        the discontinuity smoothed by convolving the branch switch
//                  with a compactly supported bump of half-width eps
//                  (analysis only; not accepted by the time stepper).
enum class FluxKind { DiscontinuousPL, ContinuousPL, RegularizedPL, Mollified };

struct FluxModel {
  FluxKind kind = FluxKind::DiscontinuousPL;
  double rho_m = 0.5;    // density at which the flux switches branches
  double gamma = 0.5;    // congested-branch slope magnitude
  double epsilon = 0.0;  // smoothing half-width (RegularizedPL, Mollified only)
};

// Throws std::invalid_argument unless 0 < rho_m < 1,
// 0 < gamma < rho_m/(1 - rho_m), and (for the smoothed kinds)
// 0 < epsilon < min(rho_m, 1 - rho_m).
void validate(const FluxModel& model);

// Free-flow branch g_f(rho) = rho.
double free_flow_flux(double rho);

// Congested branch g_c(rho) = gamma*(1 - rho).
double congested_flux(const FluxModel& model, double rho);

// Downward flux jump at rho_m: g_f(rho_m) - g_c(rho_m) > 0 for a valid
// DiscontinuousPL model.
double flux_jump(const FluxModel& model);

// Boundary density gamma/(gamma+1) below which a free-flow left state
// connects to the congested branch by a single shock rather than a
// compound wave.
double compound_threshold(const FluxModel& model);

// Evaluates the flux of the given kind at rho in [0,1].  At exactly rho_m
// the discontinuous flux takes the congested-branch value.  Throws
// std::invalid_argument on invalid models, std::domain_error outside [0,1].
double eval_flux(const FluxModel& model, double rho);

// One-sided flux slope at rho: the slope of the branch rho lies on
// (free-flow for rho < rho_m, congested at and above; the regularized kind
// uses the chord slope inside its band, the mollified kind its smooth
// derivative).
double eval_flux_slope(const FluxModel& model, double rho);

// --- mollifier -------------------------------------------------------------

// Canonical unit-mass bump: C*exp(1/(s^2-1)) for |s| < 1, zero outside.
double mollifier(double s);

// d/ds of the bump.
double mollifier_derivative(double s);

// Normalization constant C (computed once by quadrature; ~2.2522836).
double mollifier_constant();

// Quadrature of the normalized bump over its support (~1; exposed so the
// normalization can be regression-checked).
double mollifier_mass();

// Cumulative bump mass on [-1, z]: 0 for z <= -1, 1 for z >= 1.
double mollifier_cdf(double z);

// --- mollified flux analysis ------------------------------------------------

// f_eps(rho) = rho + (gamma - (gamma+1)*rho) * Phi((rho - rho_m)/eps), where
// Phi is the cumulative bump mass.  Equals the discontinuous flux outside
// [rho_m - eps, rho_m + eps].  Requires kind == Mollified.
double mollified_flux(const FluxModel& model, double rho);

// f'_eps(rho) = 1 + (gamma - (gamma+1)*rho)*eta_eps(rho - rho_m)
//                 - (gamma+1)*Phi((rho - rho_m)/eps).
// Equals 1 below the smoothing band and -gamma above it.
double mollified_flux_derivative(const FluxModel& model, double rho);

// f''_eps(rho) = (gamma - (gamma+1)*rho)*eta'_eps(rho - rho_m)
//                  - 2*(gamma+1)*eta_eps(rho - rho_m).
double mollified_flux_second_derivative(const FluxModel& model, double rho);

// --- convexity of the mollified flux ----------------------------------------

// Linear coefficient M = rho_m - gamma/(gamma+1) of the quartic whose sign
// tracks the sign of f''_eps near rho_m.  Positive for every valid model.
double convexity_coefficient(const FluxModel& model);

// The quartic P(y) = -y^4/eps^2 + 3y^2 + M*y - eps^2.  f''_eps(rho_m + y)
// has the sign of P(y) for |y| < eps.
double convexity_polynomial(double m, double epsilon, double y);

// Unique root y* of P on (-eps, eps) — the offset of the mollified flux's
// inflection point from rho_m; y* ~ eps^2/M for small eps.  Bisection on
// (0, eps) to machine convergence.  Throws std::runtime_error if a fine
// scan of (-eps, eps) does not show exactly one sign change.
double convexity_root(double m, double epsilon);

// --- anisotropy -------------------------------------------------------------

// Result of checking that characteristics and elementary waves never
// outrun vehicles: f'(rho) <= f(rho)/rho pointwise (per branch, one-sided
// at the branch switch) and chord slopes never exceed the slower of the
// two endpoint vehicle speeds.
struct AnisotropyReport {
  bool pass = false;
  double worst_margin = 0.0;  // min over all checks of (bound - value)
};

// Samples both conditions on a uniform density grid of `samples` points
// (pairs with equal densities are skipped; rho = 0 is skipped in the
// pointwise check since the vehicle speed f/rho degenerates there).
// Passes when the worst margin is >= -1e-12.
AnisotropyReport anisotropy_check(const FluxModel& model, int samples);

}  // namespace kinwave
