#include "diraclab/propagator.hpp"

namespace diraclab {

ModeExpansion free_propagate(const ModeExpansion& x, double dt,
                             const SimConfig& cfg) {
  ModeExpansion out = x;
  for (int r = -x.R; r <= x.R; ++r) {
    const double E = cfg.energy(r);
    out.at(+1, r) *= std::polar(1.0, -E * dt);
    out.at(-1, r) *= std::polar(1.0, +E * dt);
  }
  return out;
}

GridField gauge_phase_apply(const GridField& f, const GaugePulse& pulse,
                            double t) {
  const Eigen::ArrayXd chi = pulse.env.g(t) * pulse.chi1_samples(f.n(), f.L);
  GridField out;
  out.L = f.L;
  out.up.resize(f.n());
  out.down.resize(f.n());
  for (int j = 0; j < f.n(); ++j) {
    const Complex phase = std::polar(1.0, -pulse.q * chi[j]);
    out.up[j] = phase * f.up[j];
    out.down[j] = phase * f.down[j];
  }
  return out;
}

EvolvedState exact_final_state(const ModeExpansion& x0, const GaugePulse& pulse,
                               const SimConfig& cfg, double leakage_tol) {
  const ModeExpansion at_t1 = free_propagate(x0, pulse.t1 - pulse.t0, cfg);
  const GridField kicked =
      gauge_phase_apply(to_grid(at_t1, cfg, 0.0), pulse, pulse.t1);
  ModeProjection projected = to_modes(kicked, cfg);
  if (projected.out_of_band_norm > leakage_tol)
    throw LeakageError(projected.out_of_band_norm, leakage_tol);
  EvolvedState out;
  out.modes = free_propagate(projected.modes, cfg.tf - pulse.t1, cfg);
  out.leakage = projected.out_of_band_norm;
  return out;
}

double energy_shift_formula(const ModeExpansion& x0, const GaugePulse& pulse,
                            const SimConfig& cfg) {
  const ModeExpansion at_t1 = free_propagate(x0, pulse.t1 - pulse.t0, cfg);
  const GridField f = to_grid(at_t1, cfg, 0.0);
  const Eigen::ArrayXd sigma_x_density = 2.0 * (f.up.conjugate() * f.down).real();
  const Eigen::ArrayXd deriv = spectral_derivative(sigma_x_density, cfg.L);
  const Eigen::ArrayXd chi = pulse.chi_samples(pulse.t1, cfg);
  return pulse.q * cfg.grid_weight() * (chi * deriv).sum();
}

GridField band_free_evolve(const GridField& f, double dt, const SimConfig& cfg) {
  BandSpectrum s = band_decompose(f, cfg);
  const Eigen::ArrayXd& E = band_energies(cfg);
  for (int k = 0; k < cfg.N; ++k) {
    s.plus[k] *= std::polar(1.0, -E[k] * dt);
    s.minus[k] *= std::polar(1.0, +E[k] * dt);
  }
  return band_reassemble(s, cfg);
}

GridField exact_state_during(const ModeExpansion& x0, const GaugePulse& pulse,
                             double t, const SimConfig& cfg) {
  const ModeExpansion free_part = free_propagate(x0, t - pulse.t0, cfg);
  return gauge_phase_apply(to_grid(free_part, cfg, 0.0), pulse, t);
}

}  // namespace diraclab
