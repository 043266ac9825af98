#include "kinwave/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace kinwave {

namespace {

constexpr double kBoundTol = 1e-12;  // accepted overshoot before rejection
constexpr int kMaxHalvings = 5;

Limiter effective_limiter(const SolverConfig& config) {
  return config.scheme == Scheme::Godunov ? Limiter::None : config.limiter;
}

// Internal interface fan.  The discontinuous-flux solver emits at most two
// waves, but the continuous piecewise-linear kinds can need three (one per
// envelope chord), so the stepping core works with three slots.  Waves are
// slotted by speed sign -- negatives from slot 0 up, positives from slot 2
// down -- so that like waves at neighbouring interfaces share a slot, which
// is what the limiter's strength ratio compares.
struct IFan {
  std::array<Wave, 3> waves{};
};

IFan pack_waves(const Wave* ws, std::size_t count) {
  IFan fan;
  if (count == 0) return fan;
  if (count >= 3) {
    for (std::size_t p = 0; p < 3; ++p) fan.waves[p] = ws[p];
    return fan;
  }
  if (count == 1) {
    const std::size_t slot =
        ws[0].speed < 0.0 ? 0 : (ws[0].speed > 0.0 ? 2 : 1);
    fan.waves[slot] = ws[0];
    return fan;
  }
  // Two waves, ascending speed: keep negatives left-packed and positives
  // right-packed.
  if (ws[1].speed < 0.0) {
    fan.waves[0] = ws[0];
    fan.waves[1] = ws[1];
  } else if (ws[0].speed > 0.0) {
    fan.waves[1] = ws[0];
    fan.waves[2] = ws[1];
  } else {
    fan.waves[0] = ws[0];
    fan.waves[2] = ws[1];
  }
  return fan;
}

IFan from_fan(const WaveFan& fan) {
  Wave real[2];
  std::size_t count = 0;
  for (const Wave& w : fan.waves) {
    if (w.kind != WaveKind::Null) real[count++] = w;
  }
  return pack_waves(real, count);
}

double max_ifan_speed(const std::vector<IFan>& fans) {
  double s_max = 0.0;
  for (const IFan& fan : fans) {
    for (const Wave& w : fan.waves) s_max = std::max(s_max, std::abs(w.speed));
  }
  return s_max;
}

// Interface fans for one state under any piecewise-linear flux kind; the
// entry point for the stepping core.  fans[i] sits between cells i-1 and i.
std::vector<IFan> build_fans(const GridState& state,
                             const SolverConfig& config, WaveStats* stats) {
  const FluxKind kind = config.model.kind;
  if (kind == FluxKind::DiscontinuousPL) {
    const std::vector<WaveFan> fans =
        compute_interface_waves(state, config, stats);
    std::vector<IFan> out(fans.size());
    for (std::size_t i = 0; i < fans.size(); ++i) out[i] = from_fan(fans[i]);
    return out;
  }
  if (kind != FluxKind::ContinuousPL && kind != FluxKind::RegularizedPL) {
    throw std::invalid_argument(
        "time stepping requires a piecewise-linear flux kind (discontinuous, "
        "continuous, or regularized)");
  }
  validate(config);
  validate(state);
  const Eigen::Index n = state.n_cells;
  const Eigen::ArrayXd& q = state.q;
  auto solve_at = [&](double ql, double qr) {
    const std::vector<Wave> ws = envelope_waves(config.model, ql, qr);
    return pack_waves(ws.data(), ws.size());
  };
  std::vector<IFan> fans(n + 1);
  for (Eigen::Index i = 1; i < n; ++i) {
    fans[i] = solve_at(q[i - 1], q[i]);
  }
  if (state.bc == BoundaryCondition::Periodic) {
    fans[0] = solve_at(q[n - 1], q[0]);
    fans[n] = fans[0];
  }
  // Outflow edges: zeroth-order ghost cells make the edge states equal, so
  // the edge fans stay empty.
  return fans;
}

// Limited second-order corrections, one value per interface.  The strength
// ratio compares each wave against the upwind-side wave in the same family
// slot; missing neighbours (outflow edges) contribute no correction.
Eigen::ArrayXd correction_fluxes(const std::vector<IFan>& fans,
                                 double courant, Limiter limiter,
                                 BoundaryCondition bc, Eigen::Index n) {
  Eigen::ArrayXd corr = Eigen::ArrayXd::Zero(n + 1);
  const Eigen::Index i_end = bc == BoundaryCondition::Periodic ? n : n + 1;
  for (Eigen::Index i = 0; i < i_end; ++i) {
    for (std::size_t p = 0; p < fans[i].waves.size(); ++p) {
      const Wave& w = fans[i].waves[p];
      if (w.speed == 0.0 || w.strength == 0.0) continue;
      Eigen::Index up = w.speed > 0.0 ? i - 1 : i + 1;
      if (bc == BoundaryCondition::Periodic) up = (up + n) % n;
      double theta = 0.0;
      if (up >= 0 && up <= n) theta = fans[up].waves[p].strength / w.strength;
      const double abs_s = std::abs(w.speed);
      corr[i] += 0.5 * abs_s * (1.0 - courant * abs_s) *
                 limiter_value(limiter, theta) * w.strength;
    }
  }
  if (bc == BoundaryCondition::Periodic) corr[n] = corr[0];
  return corr;
}

// One conservative update of size dt.  Returns false (leaving q untouched)
// when a cell escapes [0,1] beyond rounding tolerance.
bool apply_update(Eigen::ArrayXd& q, const std::vector<IFan>& fans, double dt,
                  double dx, BoundaryCondition bc, Limiter limiter) {
  const Eigen::Index n = q.size();
  const double nu = dt / dx;

  // Fluctuations: right-going part of each fan hits the cell on its right,
  // left-going part the cell on its left.
  Eigen::ArrayXd apdq = Eigen::ArrayXd::Zero(n + 1);
  Eigen::ArrayXd amdq = Eigen::ArrayXd::Zero(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) {
    for (const Wave& w : fans[i].waves) {
      apdq[i] += std::max(w.speed, 0.0) * w.strength;
      amdq[i] += std::min(w.speed, 0.0) * w.strength;
    }
  }

  Eigen::ArrayXd next = q;
  for (Eigen::Index j = 0; j < n; ++j) {
    next[j] -= nu * (apdq[j] + amdq[j + 1]);
  }
  if (limiter != Limiter::None) {
    const Eigen::ArrayXd corr = correction_fluxes(fans, nu, limiter, bc, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      next[j] -= nu * (corr[j + 1] - corr[j]);
    }
  }

  if ((next < -kBoundTol).any() || (next > 1.0 + kBoundTol).any()) {
    return false;
  }
  q = next.max(0.0).min(1.0);
  return true;
}

StepResult advance_with_fans(const GridState& state,
                             const std::vector<IFan>& fans, double dt,
                             Limiter limiter) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  StepResult res{state, dt, 0};
  for (;;) {
    Eigen::ArrayXd next = state.q;
    if (apply_update(next, fans, res.dt_applied, state.dx, state.bc,
                     limiter)) {
      res.state.q = std::move(next);
      res.state.time = state.time + res.dt_applied;
      return res;
    }
    if (res.halvings == kMaxHalvings) {
      throw std::runtime_error(
          "time step rejected repeatedly: update leaves [0,1] even after "
          "halving dt " +
          std::to_string(kMaxHalvings) + " times");
    }
    res.dt_applied *= 0.5;
    ++res.halvings;
  }
}

GridState step_with(const GridState& state, const SolverConfig& config,
                    Limiter limiter) {
  validate(config);
  validate(state);
  const std::vector<IFan> fans = build_fans(state, config, nullptr);
  const double s_max = max_ifan_speed(fans);
  double dt;
  if (s_max == 0.0) {
    // Nothing moves; jump straight to the final time if any remains.
    if (!(config.t_end > state.time)) return state;
    dt = config.t_end - state.time;
  } else {
    dt = config.cfl * state.dx / s_max;
  }
  return advance_with_fans(state, fans, dt, limiter).state;
}

}  // namespace

void validate(const SolverConfig& config) {
  validate(config.model);
  if (!(config.cfl > 0.0 && config.cfl < 1.0)) {
    throw std::invalid_argument("cfl must lie in (0,1)");
  }
  if (!(config.delta >= 0.0)) {
    throw std::invalid_argument("delta must be >= 0");
  }
  if (!(config.t_end >= 0.0)) {
    throw std::invalid_argument("t_end must be >= 0");
  }
}

void validate(const GridState& state) {
  if (state.n_cells < 1) {
    throw std::invalid_argument("grid needs at least one cell");
  }
  if (state.q.size() != state.n_cells) {
    throw std::invalid_argument("cell array size does not match n_cells");
  }
  if (!(state.dx > 0.0)) throw std::invalid_argument("dx must be positive");
}

GridState make_grid(double x_lo, double x_hi, Eigen::Index n_cells,
                    BoundaryCondition bc) {
  if (!(x_hi > x_lo)) throw std::invalid_argument("x_hi must exceed x_lo");
  if (n_cells < 1) throw std::invalid_argument("n_cells must be >= 1");
  GridState g;
  g.x_lo = x_lo;
  g.x_hi = x_hi;
  g.n_cells = n_cells;
  g.dx = (x_hi - x_lo) / static_cast<double>(n_cells);
  g.q = Eigen::ArrayXd::Zero(n_cells);
  g.bc = bc;
  g.time = 0.0;
  return g;
}

GridState make_riemann_state(const RiemannData& data, double x_lo, double x_hi,
                             Eigen::Index n_cells, BoundaryCondition bc) {
  if (!(data.rho_l >= 0.0 && data.rho_l <= 1.0) ||
      !(data.rho_r >= 0.0 && data.rho_r <= 1.0)) {
    throw std::invalid_argument("initial densities must lie in [0,1]");
  }
  GridState g = make_grid(x_lo, x_hi, n_cells, bc);
  const StepProfile ic{{data.x0}, {data.rho_l, data.rho_r}};
  for (Eigen::Index j = 0; j < n_cells; ++j) {
    g.q[j] = ic.average(g.interface_position(j), g.interface_position(j + 1));
  }
  return g;
}

GridState make_gaussian_state(double sigma, double amplitude, double offset,
                              double x_lo, double x_hi, Eigen::Index n_cells,
                              BoundaryCondition bc) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  GridState g = make_grid(x_lo, x_hi, n_cells, bc);
  // Exact cell average of offset + amplitude * exp(-x^2 / (2 sigma^2)).
  const double root2 = std::numbers::sqrt2;
  const double scale =
      amplitude * sigma * std::sqrt(std::numbers::pi / 2.0);
  for (Eigen::Index j = 0; j < n_cells; ++j) {
    const double a = g.interface_position(j);
    const double b = g.interface_position(j + 1);
    g.q[j] = offset + scale *
                          (std::erf(b / (sigma * root2)) -
                           std::erf(a / (sigma * root2))) /
                          (b - a);
  }
  if ((g.q < 0.0).any() || (g.q > 1.0).any()) {
    throw std::invalid_argument("initial densities must lie in [0,1]");
  }
  return g;
}

double limiter_value(Limiter limiter, double theta) {
  switch (limiter) {
    case Limiter::None:
      return 0.0;
    case Limiter::Minmod:
      return std::max(0.0, std::min(1.0, theta));
    case Limiter::Superbee:
      return std::max({0.0, std::min(1.0, 2.0 * theta),
                       std::min(2.0, theta)});
    case Limiter::MC:
      return std::max(0.0,
                      std::min({0.5 * (1.0 + theta), 2.0, 2.0 * theta}));
  }
  throw std::logic_error("unreachable limiter");
}

double lookahead_density(const Eigen::ArrayXd& q, Eigen::Index j, double rho_m,
                         double delta, BoundaryCondition bc) {
  const Eigen::Index n = q.size();
  if (n < 1) throw std::invalid_argument("cell sequence must be nonempty");
  if (j < 0 || j >= n) throw std::invalid_argument("cell index out of range");
  if (bc == BoundaryCondition::Periodic) {
    // Wraps past the boundary; visits every cell except j+1 itself.
    for (Eigen::Index off = 2; off <= n; ++off) {
      const double qk = q[(j + off) % n];
      if (std::abs(qk - rho_m) > delta) return qk;
    }
  } else {
    for (Eigen::Index k = j + 2; k < n; ++k) {
      if (std::abs(q[k] - rho_m) > delta) return q[k];
    }
  }
  return rho_m;
}

std::vector<WaveFan> compute_interface_waves(const GridState& state,
                                             const SolverConfig& config,
                                             WaveStats* stats) {
  validate(config);
  validate(state);
  const Eigen::Index n = state.n_cells;
  const double rho_m = config.model.rho_m;
  const double delta = config.delta;
  const Eigen::ArrayXd& q = state.q;

  auto solve_at = [&](Eigen::Index left, double ql, double qr) {
    double probe = qr;
    if (std::abs(qr - rho_m) <= delta && std::abs(ql - rho_m) > delta) {
      probe = lookahead_density(q, left, rho_m, delta, state.bc);
      if (stats != nullptr) {
        ++stats->lookahead_scans;
        if (probe == rho_m) ++stats->sentinel_fallbacks;
      }
    }
    return solve_interface(config.model, ql, qr, probe, delta);
  };

  std::vector<WaveFan> fans(n + 1);
  for (Eigen::Index i = 1; i < n; ++i) {
    fans[i] = solve_at(i - 1, q[i - 1], q[i]);
  }
  if (state.bc == BoundaryCondition::Periodic) {
    fans[0] = solve_at(n - 1, q[n - 1], q[0]);
    fans[n] = fans[0];
  } else {
    // Zeroth-order ghost cells: edge interfaces see equal states.
    fans[0] = solve_interface(config.model, q[0], q[0], q[0], delta);
    fans[n] = solve_interface(config.model, q[n - 1], q[n - 1], q[n - 1],
                              delta);
  }
  return fans;
}

double select_dt(const std::vector<WaveFan>& fans, double dx, double cfl,
                 double dt_max) {
  if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
  if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (!(dt_max > 0.0)) throw std::invalid_argument("dt_max must be positive");
  double s_max = 0.0;
  for (const WaveFan& fan : fans) {
    for (const Wave& w : fan.waves) s_max = std::max(s_max, std::abs(w.speed));
  }
  if (s_max == 0.0) return dt_max;
  return std::min(dt_max, cfl * dx / s_max);
}

StepResult advance_by(const GridState& state, const SolverConfig& config,
                      double dt, WaveStats* stats) {
  validate(config);
  validate(state);
  const std::vector<IFan> fans = build_fans(state, config, stats);
  return advance_with_fans(state, fans, dt, effective_limiter(config));
}

GridState step_first_order(const GridState& state,
                           const SolverConfig& config) {
  return step_with(state, config, Limiter::None);
}

GridState step_high_resolution(const GridState& state,
                               const SolverConfig& config) {
  return step_with(state, config, config.limiter);
}

RunResult run(const GridState& initial, const SolverConfig& config,
              const std::vector<double>& output_times) {
  validate(config);
  validate(initial);
  if (!(config.t_end >= initial.time)) {
    throw std::invalid_argument("t_end must not precede the initial time");
  }
  std::vector<double> targets = output_times;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (i > 0 && targets[i] < targets[i - 1]) {
      throw std::invalid_argument("output times must be ascending");
    }
    if (targets[i] < initial.time || targets[i] > config.t_end) {
      throw std::invalid_argument(
          "output times must lie within [initial time, t_end]");
    }
  }
  if (targets.empty() || targets.back() < config.t_end) {
    targets.push_back(config.t_end);
  }

  RunResult out;
  WaveStats stats;
  GridState state = initial;
  const Limiter limiter = effective_limiter(config);
  for (double target : targets) {
    while (state.time < target) {
      const std::vector<IFan> fans = build_fans(state, config, &stats);
      const double remaining = target - state.time;
      const double s_max = max_ifan_speed(fans);
      const double dt =
          s_max == 0.0 ? remaining
                       : std::min(remaining, config.cfl * state.dx / s_max);
      const bool landing = dt == remaining;
      StepResult res = advance_with_fans(state, fans, dt, limiter);
      ++out.steps;
      out.halvings += res.halvings;
      if (!(res.state.time > state.time)) {
        throw std::runtime_error("time step too small to advance the clock");
      }
      state = std::move(res.state);
      if (landing && res.halvings == 0) state.time = target;
    }
    out.snapshots.push_back(state);
  }
  out.sentinel_fallbacks = stats.sentinel_fallbacks;
  return out;
}

}  // namespace kinwave