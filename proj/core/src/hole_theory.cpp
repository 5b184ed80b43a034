#include "diraclab/hole_theory.hpp"

#include "diraclab/plane_wave.hpp"

namespace diraclab {

VacuumSet VacuumSet::make(const SimConfig& cfg) {
  VacuumSet v;
  v.R = cfg.R;
  for (int r = -cfg.R; r <= cfg.R; ++r) v.unperturbed_energy -= cfg.energy(r);
  return v;
}

ModeExpansion PositivePacket::to_expansion() const {
  ModeExpansion x = ModeExpansion::zero(R);
  for (int r = -R; r <= R; ++r) x.at(+1, r) = at(r);
  return x;
}

PositivePacket packet_two_mode(int r, int s, const SimConfig& cfg) {
  if (r == s)
    throw std::invalid_argument(
        "packet_two_mode: the two mode indices must differ");
  if (std::abs(r) > cfg.R || std::abs(s) > cfg.R)
    throw std::invalid_argument("packet_two_mode: mode index outside cutoff R");
  PositivePacket p;
  p.R = cfg.R;
  p.f = Eigen::VectorXcd::Zero(2 * cfg.R + 1);
  p.at(r) = 1.0 / std::numbers::sqrt2;
  p.at(s) = 1.0 / std::numbers::sqrt2;
  return p;
}

Eigen::ArrayXd free_current_profile(const PositivePacket& p, double t1,
                                    const SimConfig& cfg) {
  if (p.norm() == 0.0)
    throw std::invalid_argument("free_current_profile: empty packet");
  const GridField f = to_grid(p.to_expansion(), cfg, t1);
  return charge_current_density(f, cfg.q).current;
}

Eigen::ArrayXd current_derivative(const PositivePacket& p, double t1,
                                  const SimConfig& cfg) {
  return spectral_derivative(free_current_profile(p, t1, cfg), cfg.L);
}

double slope_integral(const PositivePacket& p, double t1, const SimConfig& cfg) {
  const Eigen::ArrayXd deriv = current_derivative(p, t1, cfg);
  return cfg.grid_weight() * deriv.square().sum();
}

GaugePulse chi_from_current(const PositivePacket& p, double lambda_strength,
                            double t1, const SimConfig& cfg) {
  const Eigen::ArrayXd deriv = current_derivative(p, t1, cfg);
  const double scale = deriv.abs().maxCoeff();
  if (scale < 1e-14)
    throw std::invalid_argument(
        "chi_from_current: the packet's current derivative is identically "
        "zero, so no profile proportional to it can extract energy; use a "
        "packet with at least two distinct modes");

  const Eigen::ArrayXd profile = -lambda_strength * deriv;
  // Project the grid samples onto real Fourier harmonics. The profile of
  // a band-limited packet lives below 2R, but a pulse is only
  // representable up to R; anything beyond that is a construction error.
  const int k_max = std::min(2 * cfg.R, cfg.N / 2 - 1);
  Eigen::ArrayXd cos_full = Eigen::ArrayXd::Zero(k_max + 1);
  Eigen::ArrayXd sin_full = Eigen::ArrayXd::Zero(k_max + 1);
  cos_full[0] = profile.mean();
  for (int k = 1; k <= k_max; ++k) {
    double ck = 0.0, sk = 0.0;
    for (int j = 0; j < cfg.N; ++j) {
      const double kz = 2.0 * std::numbers::pi * k * cfg.grid_z(j) / cfg.L;
      ck += profile[j] * std::cos(kz);
      sk += profile[j] * std::sin(kz);
    }
    cos_full[k] = 2.0 * ck / cfg.N;
    sin_full[k] = 2.0 * sk / cfg.N;
  }
  const double tiny = 1e-13 * std::max(1.0, profile.abs().maxCoeff());
  int harmonics = 0;
  for (int k = 1; k <= k_max; ++k)
    if (std::abs(cos_full[k]) > tiny || std::abs(sin_full[k]) > tiny)
      harmonics = k;
  if (harmonics > cfg.R)
    throw std::invalid_argument(
        "chi_from_current: profile needs harmonics beyond the cutoff R");
  return GaugePulse::from_harmonics(cos_full.head(harmonics + 1),
                                    sin_full.head(harmonics + 1), cfg);
}

VacuumShift vacuum_energy_shift(const GaugePulse& pulse, const SimConfig& cfg) {
  VacuumShift shift;
  shift.per_mode = Eigen::VectorXd::Zero(cfg.n_modes());
  const Eigen::ArrayXd chi = pulse.chi_samples(pulse.t1, cfg);
  for (int r = -cfg.R; r <= cfg.R; ++r) {
    const GridField orbital = sample_mode(make_mode(r, -1, cfg), cfg, pulse.t1);
    const Eigen::ArrayXd density =
        2.0 * (orbital.up.conjugate() * orbital.down).real();
    const Eigen::ArrayXd deriv = spectral_derivative(density, cfg.L);
    shift.per_mode[r + cfg.R] =
        pulse.q * cfg.grid_weight() * (chi * deriv).sum();
    shift.total += shift.per_mode[r + cfg.R];
  }
  return shift;
}

namespace {

// Energy of one sea orbital after the full pulse, measured at tf on the
// grid band (no mode truncation, so border orbitals are handled exactly).
double evolved_orbital_energy(int r, const GaugePulse& pulse,
                              const SimConfig& cfg) {
  const GridField at_t1 = sample_mode(make_mode(r, -1, cfg), cfg, pulse.t1);
  const GridField kicked = gauge_phase_apply(at_t1, pulse, pulse.t1);
  const GridField at_tf = band_free_evolve(kicked, cfg.tf - pulse.t1, cfg);
  return full_energy(at_tf, PotentialSamples::zero(cfg.N), cfg);
}

}  // namespace

std::vector<HTEnergyReport> ht_energy_sweep(const PositivePacket& p,
                                            const std::vector<double>& lambdas,
                                            const SimConfig& cfg,
                                            double leakage_tol) {
  const ModeExpansion packet0 = free_propagate(p.to_expansion(), cfg.t0, cfg);
  const double packet_energy_t0 = free_energy(packet0, cfg);

  std::vector<HTEnergyReport> rows;
  rows.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const GaugePulse pulse = chi_from_current(p, lambda, cfg.t1, cfg);
    const EvolvedState evolved = exact_final_state(packet0, pulse, cfg, leakage_tol);

    HTEnergyReport row;
    row.E_TR_t0 = packet_energy_t0;
    row.d_xi_fp = free_energy(evolved.modes, cfg) - packet_energy_t0;
    for (int r = -cfg.R; r <= cfg.R; ++r)
      row.dE_hvac += evolved_orbital_energy(r, pulse, cfg) - (-cfg.energy(r));
    row.E_TR_tf = row.E_TR_t0 + row.d_xi_fp + row.dE_hvac;
    row.leakage = evolved.leakage;
    rows.push_back(row);
  }
  return rows;
}

double pauli_orthogonality_check(const std::vector<ModeExpansion>& states,
                                 const GaugePulse& pulse, const SimConfig& cfg) {
  std::vector<GridField> evolved;
  evolved.reserve(states.size());
  for (const ModeExpansion& x : states) {
    const ModeExpansion at_t1 = free_propagate(x, pulse.t1 - pulse.t0, cfg);
    const GridField kicked =
        gauge_phase_apply(to_grid(at_t1, cfg, 0.0), pulse, pulse.t1);
    evolved.push_back(band_free_evolve(kicked, cfg.tf - pulse.t1, cfg));
  }
  double deviation = 0.0;
  for (size_t a = 0; a < evolved.size(); ++a)
    for (size_t b = a; b < evolved.size(); ++b) {
      const Complex overlap = inner_product(evolved[a], evolved[b]);
      const double target = (a == b) ? 1.0 : 0.0;
      deviation = std::max(deviation, std::abs(overlap - target));
    }
  return deviation;
}

}  // namespace diraclab
