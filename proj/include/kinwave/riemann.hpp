#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kinwave/flux.hpp"

namespace kinwave {

enum class WaveKind {
  Shock,            // genuine discontinuity satisfying the entropy condition
  Contact,          // branch-speed linear advection jump
  PlateauBoundary,  // edge of a constant region at rho_m
  Null              // no wave (zero speed, zero strength)
};

// One elementary wave at a cell interface.
struct Wave {
  double speed = 0.0;     // signal speed
  double strength = 0.0;  // signed density jump carried by the wave
  int family = 1;         // 1 or 2, in ascending-speed order within a fan
  WaveKind kind = WaveKind::Null;
};

// Which structural situation an interface Riemann problem falls into,
// after states within delta of rho_m have been snapped onto the plateau.
enum class RiemannCase {
  BothOnPlateau,       // both states at rho_m
  PlateauLeft,         // left state at rho_m, right off it
  PlateauRight,        // right state at rho_m, left off it (uses look-ahead)
  BothCongested,       // both states above rho_m
  BothFree,            // both states below rho_m
  SingleShock,         // free left, congested right, left <= gamma/(gamma+1)
  CompoundCongestion,  // free left above gamma/(gamma+1), congested right
  CompoundRelease      // congested left, free right
};

// The ordered pair of waves produced by one interface solve.  Waves are
// sorted by ascending speed and family tags follow that order; fans with a
// single physical wave carry a Null in the other slot.
struct WaveFan {
  std::array<Wave, 2> waves{};
  RiemannCase case_label = RiemannCase::BothOnPlateau;
  bool used_lookahead = false;
};

// Classifies (q_left, q_right) into the case that solve_interface will
// apply.  States within delta of rho_m are treated as rho_m for
// classification only.  Total: every pair of densities in [0,1] maps to
// exactly one case.
RiemannCase classify_case(const FluxModel& model, double q_left,
                          double q_right, double delta);

// Solves the interface Riemann problem for the discontinuous flux.
//
// q_lookahead is the first downstream density off the rho_m plateau
// (see lookahead_index); it selects the branch of the 1-wave speed when the
// right state sits on the plateau and is ignored otherwise.  Passing rho_m
// itself means "everything downstream is plateau" and selects the free-flow
// branch.  delta >= 0 is the plateau snapping half-width.
//
// A state inside the plateau band is treated as exactly rho_m throughout
// the solve -- classification, speeds, and strengths -- so every wave
// transports exactly the flux difference it represents.  The sub-delta
// residual is dropped; that loss is the deliberate O(delta) mass defect of
// the plateau treatment and is why the mass drift grows with delta.
// Off-plateau states enter raw, and the compound cases split the jump at
// exactly rho_m, so strengths telescope wherever no state sits inside the
// band.
//
// Throws std::domain_error if any density is outside [0,1] and
// std::invalid_argument for a non-DiscontinuousPL model or negative delta.
WaveFan solve_interface(const FluxModel& model, double q_left, double q_right,
                        double q_lookahead, double delta);

// The four interaction patterns of a three-state problem whose middle
// state is the plateau value rho_m.
enum class DoubleRiemannCase {
  FreeFree,                 // both outer states below rho_m
  FreeCongestedSeparating,  // left free >= gamma/(gamma+1), right congested
  FreeCongestedColliding,   // left free < gamma/(gamma+1), right congested
  CongestedFree,            // left congested, right free
  CongestedCongested        // both outer states above rho_m
};

// Long-time speeds (lambda_1, lambda_2) of the two waves bounding the
// rho_m plateau of the three-state problem.  Throws std::invalid_argument
// when (c_left, c_right) do not satisfy the named case's inequalities.
std::pair<double, double> double_riemann_speeds(DoubleRiemannCase dcase,
                                                double c_left, double c_right,
                                                const FluxModel& model);

// Classification helper for the three-state problem; throws
// std::invalid_argument when either state equals rho_m.
DoubleRiemannCase classify_double_riemann(const FluxModel& model,
                                          double c_left, double c_right);

// Wave decomposition between two states for a continuous piecewise-linear
// flux (ContinuousPL or RegularizedPL): the chords of the lower convex
// (q_left < q_right) or upper concave (q_left > q_right) envelope of the
// flux over the interval, with the flux breakpoints as candidate vertices.
// Each linear piece of the envelope becomes one wave; speeds are strictly
// ascending, strengths telescope to q_right - q_left, and equal states give
// an empty fan.  At most breakpoints+1 waves (2 for ContinuousPL, 3 for
// RegularizedPL).  Throws std::domain_error for densities outside [0,1] and
// std::invalid_argument for other flux kinds.
std::vector<Wave> envelope_waves(const FluxModel& model, double q_left,
                                 double q_right);

}  // namespace kinwave
