#include "kinwave/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kinwave {

namespace {

void check_density(double q, const char* name) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0,1] (got " +
                            std::to_string(q) + ")");
  }
}

// Branch value of the discontinuous flux for a state known to be in [0,1].
double flux_of(const FluxModel& m, double q) {
  return q < m.rho_m ? free_flow_flux(q) : congested_flux(m, q);
}

Wave make_wave(double speed, double strength, WaveKind kind) {
  return Wave{speed, strength, 1, kind};
}

// Orders the two waves by ascending speed and stamps family tags.
WaveFan make_fan(Wave a, Wave b, RiemannCase label, bool used_lookahead) {
  WaveFan fan;
  if (b.speed < a.speed) std::swap(a, b);
  a.family = 1;
  b.family = 2;
  fan.waves = {a, b};
  fan.case_label = label;
  fan.used_lookahead = used_lookahead;
  return fan;
}

WaveFan single_wave_fan(Wave w, RiemannCase label, bool used_lookahead) {
  return make_fan(w, Wave{}, label, used_lookahead);
}

}  // namespace

RiemannCase classify_case(const FluxModel& model, double q_left,
                          double q_right, double delta) {
  validate(model);
  check_density(q_left, "q_left");
  check_density(q_right, "q_right");
  if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");

  const bool left_on = std::abs(q_left - model.rho_m) <= delta;
  const bool right_on = std::abs(q_right - model.rho_m) <= delta;
  if (left_on && right_on) return RiemannCase::BothOnPlateau;
  if (left_on) return RiemannCase::PlateauLeft;
  if (right_on) return RiemannCase::PlateauRight;
  // Off-plateau states are strictly on one side of rho_m.
  const bool left_congested = q_left > model.rho_m;
  const bool right_congested = q_right > model.rho_m;
  if (left_congested && right_congested) return RiemannCase::BothCongested;
  if (!left_congested && !right_congested) return RiemannCase::BothFree;
  if (left_congested) return RiemannCase::CompoundRelease;
  // Free-flow left, congested right: single shock up to the threshold
  // density, compound wave above it (threshold ties go to the shock).
  return compound_threshold(model) >= q_left ? RiemannCase::SingleShock
                                             : RiemannCase::CompoundCongestion;
}

WaveFan solve_interface(const FluxModel& model, double q_left, double q_right,
                        double q_lookahead, double delta) {
  if (model.kind != FluxKind::DiscontinuousPL) {
    throw std::invalid_argument(
        "solve_interface requires the discontinuous flux");
  }
  check_density(q_lookahead, "q_lookahead");
  const RiemannCase label = classify_case(model, q_left, q_right, delta);
  if (q_left == q_right) {
    // No jump, no waves, regardless of which side of rho_m the states sit.
    return make_fan(Wave{}, Wave{}, label, false);
  }
  const double rho_m = model.rho_m;
  const double gamma = model.gamma;
  const double jump = q_right - q_left;

  switch (label) {
    case RiemannCase::BothOnPlateau: {
      // Both states are the plateau as far as the solver is concerned; the
      // sub-delta residual is dropped (part of the O(delta) mass defect of
      // the plateau treatment).
      return make_fan(Wave{}, Wave{}, label, false);
    }
    case RiemannCase::PlateauLeft: {
      // The 2-wave of the three-state construction: the plateau sheds the
      // right state at that state's branch speed.  The strength uses rho_m
      // itself so the wave transports exactly the branch-flux difference.
      const double speed = q_right < rho_m ? 1.0 : -gamma;
      return single_wave_fan(
          make_wave(speed, q_right - rho_m, WaveKind::PlateauBoundary), label,
          false);
    }
    case RiemannCase::PlateauRight: {
      // The 1-wave: its speed needs the first downstream state off the
      // plateau to decide which branch the plateau connects to.  As above,
      // the strength treats the plateau cell as exactly rho_m; with the
      // bounded chord speed the product s*W is then the full flux drop,
      // which is what drives a near-plateau cell onto the plateau in a few
      // steps instead of letting inflow and outflow balance just outside
      // the band.
      const bool congested_branch = q_lookahead > rho_m + delta;
      const double plateau_flux = congested_branch
                                      ? congested_flux(model, rho_m)
                                      : free_flow_flux(rho_m);
      const double speed =
          (plateau_flux - flux_of(model, q_left)) / (rho_m - q_left);
      return single_wave_fan(
          make_wave(speed, rho_m - q_left, WaveKind::Shock), label, true);
    }
    case RiemannCase::BothCongested:
      return single_wave_fan(make_wave(-gamma, jump, WaveKind::Contact), label,
                             false);
    case RiemannCase::BothFree:
      return single_wave_fan(make_wave(1.0, jump, WaveKind::Contact), label,
                             false);
    case RiemannCase::SingleShock: {
      const double speed =
          (flux_of(model, q_right) - flux_of(model, q_left)) / jump;
      return single_wave_fan(make_wave(speed, jump, WaveKind::Shock), label,
                             false);
    }
    case RiemannCase::CompoundCongestion: {
      // Shock from q_left up to the plateau, contact shedding q_right.
      const double shock_speed =
          (congested_flux(model, rho_m) - flux_of(model, q_left)) /
          (rho_m - q_left);
      return make_fan(
          make_wave(shock_speed, rho_m - q_left, WaveKind::Shock),
          make_wave(-gamma, q_right - rho_m, WaveKind::PlateauBoundary), label,
          false);
    }
    case RiemannCase::CompoundRelease: {
      // Shock dropping q_left to the plateau, contact shedding q_right.
      const double shock_speed =
          (flux_of(model, q_left) - free_flow_flux(rho_m)) / (q_left - rho_m);
      return make_fan(
          make_wave(shock_speed, rho_m - q_left, WaveKind::Shock),
          make_wave(1.0, q_right - rho_m, WaveKind::PlateauBoundary), label,
          false);
    }
  }
  throw std::logic_error("unreachable riemann case");
}

DoubleRiemannCase classify_double_riemann(const FluxModel& model,
                                          double c_left, double c_right) {
  validate(model);
  check_density(c_left, "c_left");
  check_density(c_right, "c_right");
  if (c_left == model.rho_m || c_right == model.rho_m) {
    throw std::invalid_argument(
        "outer states of the three-state problem must differ from rho_m");
  }
  const bool left_congested = c_left > model.rho_m;
  const bool right_congested = c_right > model.rho_m;
  if (!left_congested && !right_congested) return DoubleRiemannCase::FreeFree;
  if (left_congested && right_congested) {
    return DoubleRiemannCase::CongestedCongested;
  }
  if (left_congested) return DoubleRiemannCase::CongestedFree;
  return c_left < compound_threshold(model)
             ? DoubleRiemannCase::FreeCongestedColliding
             : DoubleRiemannCase::FreeCongestedSeparating;
}

std::pair<double, double> double_riemann_speeds(DoubleRiemannCase dcase,
                                                double c_left, double c_right,
                                                const FluxModel& model) {
  if (classify_double_riemann(model, c_left, c_right) != dcase) {
    throw std::invalid_argument(
        "(c_left, c_right) do not satisfy the inequalities of the requested "
        "three-state case");
  }
  const double rho_m = model.rho_m;
  const double gamma = model.gamma;
  switch (dcase) {
    case DoubleRiemannCase::FreeFree:
      return {1.0, 1.0};
    case DoubleRiemannCase::FreeCongestedSeparating:
    case DoubleRiemannCase::FreeCongestedColliding:
      return {(congested_flux(model, rho_m) - flux_of(model, c_left)) /
                  (rho_m - c_left),
              -gamma};
    case DoubleRiemannCase::CongestedFree:
      return {(free_flow_flux(rho_m) - flux_of(model, c_left)) /
                  (rho_m - c_left),
              1.0};
    case DoubleRiemannCase::CongestedCongested:
      return {(congested_flux(model, rho_m) - flux_of(model, c_left)) /
                  (rho_m - c_left),
              -gamma};
  }
  throw std::logic_error("unreachable three-state case");
}

std::vector<Wave> envelope_waves(const FluxModel& model, double q_left,
                                 double q_right) {
  validate(model);
  if (model.kind != FluxKind::ContinuousPL &&
      model.kind != FluxKind::RegularizedPL) {
    throw std::invalid_argument(
        "envelope_waves requires a continuous piecewise-linear flux");
  }
  check_density(q_left, "q_left");
  check_density(q_right, "q_right");
  if (q_left == q_right) return {};

  // Candidate vertices: the two states plus any flux breakpoint strictly
  // between them, listed in traversal order from q_left to q_right.
  std::vector<double> knots;
  if (model.kind == FluxKind::ContinuousPL) {
    knots = {model.rho_m};
  } else {
    knots = {model.rho_m - model.epsilon, model.rho_m + model.epsilon};
  }
  std::vector<double> xs{q_left};
  const double lo = std::min(q_left, q_right);
  const double hi = std::max(q_left, q_right);
  if (q_left > q_right) std::reverse(knots.begin(), knots.end());
  for (double k : knots) {
    if (k > lo && k < hi) xs.push_back(k);
  }
  xs.push_back(q_right);

  // Monotone-chain envelope: keep chord slopes strictly increasing along
  // the traversal.  Left-to-right this is the lower convex envelope;
  // right-to-left the upper concave one.  Either way the surviving chords
  // are the elementary waves in ascending-speed order.
  const auto slope = [&](double a, double b) {
    return (eval_flux(model, b) - eval_flux(model, a)) / (b - a);
  };
  std::vector<double> hull{xs[0]};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    while (hull.size() >= 2 &&
           slope(hull[hull.size() - 2], hull.back()) >=
               slope(hull.back(), xs[i])) {
      hull.pop_back();
    }
    hull.push_back(xs[i]);
  }

  std::vector<Wave> waves;
  waves.reserve(hull.size() - 1);
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const double a = hull[i];
    const double b = hull[i + 1];
    const double s = slope(a, b);
    // A chord that coincides with a linear piece of the flux is a contact;
    // anything else is a genuine shock.
    const WaveKind kind =
        std::abs(s - eval_flux_slope(model, 0.5 * (a + b))) <= 1e-12
            ? WaveKind::Contact
            : WaveKind::Shock;
    waves.push_back(Wave{s, b - a, static_cast<int>(i) + 1, kind});
  }
  return waves;
}

}  // namespace kinwave
