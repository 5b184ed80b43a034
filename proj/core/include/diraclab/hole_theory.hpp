#pragma once

#include <vector>

#include "diraclab/propagator.hpp"
#include "diraclab/pulse.hpp"
#include "diraclab/spectral.hpp"
#include "diraclab/states.hpp"

namespace diraclab {

/// The filled negative-energy sea truncated to |r| <= R, with its
/// (cutoff-regularized) unperturbed energy -sum E_r. All reported
/// quantities elsewhere are relative to this constant.
struct VacuumSet {
  int R = 0;
  double unperturbed_energy = 0.0;

  static VacuumSet make(const SimConfig& cfg);
};

/// An added electron built from positive-energy modes only, so it stays
/// orthogonal to every sea orbital.
struct PositivePacket {
  int R = 0;
  Eigen::VectorXcd f;  // coefficient over r = -R..R, positive branch

  Complex& at(int r) { return f[r + R]; }
  Complex at(int r) const { return f[r + R]; }
  double norm() const { return f.norm(); }
  ModeExpansion to_expansion() const;
};

/// Equal-weight two-mode packet (f_r = f_s = 1/sqrt(2)); the smallest
/// packet whose free current varies in z. Rejects r == s.
PositivePacket packet_two_mode(int r, int s, const SimConfig& cfg);

/// Current density J(z) of the freely evolved packet at time t1.
Eigen::ArrayXd free_current_profile(const PositivePacket& p, double t1,
                                    const SimConfig& cfg);

/// Spectral d/dz of the free current profile at t1.
Eigen::ArrayXd current_derivative(const PositivePacket& p, double t1,
                                  const SimConfig& cfg);

/// Quadrature of (dJ/dz)^2 over the interval: the magnitude of the
/// energy-extraction slope for this packet.
double slope_integral(const PositivePacket& p, double t1, const SimConfig& cfg);

/// Builds the pulse whose profile at t1 is chi(z, t1) =
/// -lambda_strength * dJ/dz, expressed in Fourier harmonics, with the
/// envelope reaching 1 at t1. Requires a packet whose current
/// derivative is not identically zero.
GaugePulse chi_from_current(const PositivePacket& p, double lambda_strength,
                            double t1, const SimConfig& cfg);

/// Per-mode energy shifts of the sea orbitals under a pulse, evaluated
/// in quadrature from the freely evolved orbital densities, plus their
/// sum. Every entry vanishes for a pure gauge pulse.
struct VacuumShift {
  Eigen::VectorXd per_mode;  // indexed r = -R..R
  double total = 0.0;
};
VacuumShift vacuum_energy_shift(const GaugePulse& pulse, const SimConfig& cfg);

/// One row of the relative-energy ledger for the sea-plus-packet system.
struct HTEnergyReport {
  double E_TR_t0 = 0.0;   // initial energy relative to the unperturbed sea
  double dE_hvac = 0.0;   // total sea shift
  double d_xi_fp = 0.0;   // packet shift
  double E_TR_tf = 0.0;   // final relative energy
  double leakage = 0.0;   // aliasing norm from the packet evolution
};

/// For each lambda: builds the current-derived pulse, evolves the packet
/// through the closed-form propagator and every sea orbital on the full
/// grid band, and assembles the relative-energy report.
std::vector<HTEnergyReport> ht_energy_sweep(const PositivePacket& p,
                                            const std::vector<double>& lambdas,
                                            const SimConfig& cfg,
                                            double leakage_tol = 1e-8);

/// Evolves all states through the same pulse propagator on the full grid
/// band and returns max |<psi_a(tf), psi_b(tf)> - delta_ab|.
double pauli_orthogonality_check(const std::vector<ModeExpansion>& states,
                                 const GaugePulse& pulse, const SimConfig& cfg);

}  // namespace diraclab
