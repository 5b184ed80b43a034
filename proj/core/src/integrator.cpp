#include "diraclab/integrator.hpp"

namespace diraclab {

namespace {

// q V psi with V = -sigma_x Az + A0, pointwise.
GridField apply_potential(const GridField& f, const PotentialSamples& pot,
                          double q) {
  GridField out;
  out.L = f.L;
  out.up = q * (pot.A0 * f.up - pot.Az * f.down);
  out.down = q * (pot.A0 * f.down - pot.Az * f.up);
  return out;
}

// (1 + i (dt/2) H0)^{-1}, exact per momentum bin.
GridField solve_free_half_step(const GridField& f, double dt,
                               const SimConfig& cfg) {
  BandSpectrum s = band_decompose(f, cfg);
  const Eigen::ArrayXd& E = band_energies(cfg);
  for (int k = 0; k < cfg.N; ++k) {
    s.plus[k] /= Complex(1.0, 0.5 * dt * E[k]);
    s.minus[k] /= Complex(1.0, -0.5 * dt * E[k]);
  }
  return band_reassemble(s, cfg);
}

double field_distance(const GridField& a, const GridField& b) {
  return std::sqrt((a.up - b.up).abs2().sum() + (a.down - b.down).abs2().sum());
}

// One implicit midpoint step over [t, t + dt] with the potential frozen
// at the midpoint. The implicit system is solved by fixed point
// preconditioned with the exact free-part inverse; the contraction rate
// is (dt/2) * |q V|, far below one for any stable dt.
GridField midpoint_step(const GridField& psi, const PotentialSamples& pot,
                        double dt, const SimConfig& cfg,
                        const IntegratorConfig& icfg) {
  const Complex half(0.0, -0.5 * dt);  // -i dt/2

  GridField h_psi = apply_h0(psi, cfg);
  const GridField v_psi = apply_potential(psi, pot, cfg.q);
  GridField rhs;
  rhs.L = psi.L;
  rhs.up = psi.up + half * (h_psi.up + v_psi.up);
  rhs.down = psi.down + half * (h_psi.down + v_psi.down);

  const double scale = std::max(1.0, std::sqrt(rhs.up.abs2().sum() + rhs.down.abs2().sum()));
  GridField current = solve_free_half_step(rhs, dt, cfg);
  for (int iter = 0; iter < icfg.max_iterations; ++iter) {
    const GridField v_current = apply_potential(current, pot, cfg.q);
    GridField shifted;
    shifted.L = rhs.L;
    shifted.up = rhs.up + half * v_current.up;
    shifted.down = rhs.down + half * v_current.down;
    GridField next = solve_free_half_step(shifted, dt, cfg);
    const double change = field_distance(next, current);
    current = std::move(next);
    if (change <= icfg.solve_tol * scale) return current;
  }
  throw std::runtime_error(
      "integrate: inner fixed point did not converge within max_iterations");
}

struct Segment {
  double begin = 0.0;
  double end = 0.0;
  bool pulsed = false;
};

}  // namespace

Trajectory integrate(const GridField& psi0, const GaugePulse& pulse,
                     const SimConfig& cfg, const IntegratorConfig& icfg) {
  if (psi0.n() != cfg.N)
    throw std::invalid_argument("integrate: field size does not match config");
  if (!(icfg.dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");

  // Stability budget over the pulse window.
  {
    const double max_E = band_energies(cfg).maxCoeff();
    const double chi_max = pulse.chi1_samples(cfg).abs().maxCoeff();
    const double dchi_max = pulse.chi1_deriv_samples(cfg).abs().maxCoeff();
    double max_pot = 0.0;
    const int probes = 512;
    for (int i = 0; i <= probes; ++i) {
      const double t = pulse.t0 + (pulse.t1 - pulse.t0) * i / probes;
      max_pot = std::max(max_pot, std::abs(cfg.q) *
                                      (std::abs(pulse.env.gdot(t)) * chi_max +
                                       std::abs(pulse.env.g(t)) * dchi_max));
    }
    const double budget = icfg.dt * (max_E + max_pot);
    if (budget >= 0.5)
      throw std::invalid_argument(
          "integrate: dt * (max energy + potential bound) = " +
          std::to_string(budget) + " exceeds the stability budget 0.5");
  }

  const Segment segments[2] = {{cfg.t0, cfg.t1, true}, {cfg.t1, cfg.tf, false}};

  Trajectory traj;
  GridField psi = psi0;
  traj.times.push_back(cfg.t0);
  traj.fields.push_back(psi);
  traj.segment.push_back(0);

  for (int seg = 0; seg < 2; ++seg) {
    const double span = segments[seg].end - segments[seg].begin;
    const int steps = std::max(1, static_cast<int>(std::llround(span / icfg.dt)));
    const double dt = span / steps;
    const PotentialSamples none = PotentialSamples::zero(cfg.N);
    for (int i = 0; i < steps; ++i) {
      const double t_mid = segments[seg].begin + (i + 0.5) * dt;
      const PotentialSamples pot =
          segments[seg].pulsed ? pulse.potential_at(t_mid, cfg) : none;
      psi = midpoint_step(psi, pot, dt, cfg, icfg);
      const bool keep = (icfg.sample_stride > 0 && (i + 1) % icfg.sample_stride == 0) ||
                        i + 1 == steps;
      if (keep) {
        traj.times.push_back(segments[seg].begin + (i + 1) * dt);
        traj.fields.push_back(psi);
        traj.segment.push_back(seg);
      }
    }
  }
  return traj;
}

double continuity_residual(const Trajectory& traj, double q,
                           const SimConfig& cfg) {
  double residual = 0.0;
  for (size_t i = 1; i + 1 < traj.times.size(); ++i) {
    if (traj.segment[i - 1] != traj.segment[i + 1]) continue;
    const double dt_left = traj.times[i] - traj.times[i - 1];
    const double dt_right = traj.times[i + 1] - traj.times[i];
    if (std::abs(dt_left - dt_right) > 1e-12 * std::max(dt_left, dt_right))
      continue;  // uneven sampling, centered difference not second order
    const Eigen::ArrayXd rho_prev =
        charge_current_density(traj.fields[i - 1], q).rho;
    const Eigen::ArrayXd rho_next =
        charge_current_density(traj.fields[i + 1], q).rho;
    const Eigen::ArrayXd drho_dt = (rho_next - rho_prev) / (dt_left + dt_right);
    const Eigen::ArrayXd current = charge_current_density(traj.fields[i], q).current;
    const Eigen::ArrayXd dj_dz = spectral_derivative(current, cfg.L);
    residual = std::max(residual, (drho_dt + dj_dz).abs().maxCoeff());
  }
  return residual;
}

}  // namespace diraclab
