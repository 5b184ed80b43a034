#pragma once

#include <Eigen/Dense>

#include "diraclab/plane_wave.hpp"
#include "diraclab/sim_config.hpp"
#include "diraclab/states.hpp"

namespace diraclab {

/// Result of projecting a grid field onto the truncated mode basis.
/// out_of_band_norm is the L2 norm of the discarded content, the
/// caller's aliasing budget.
struct ModeProjection {
  ModeExpansion modes;
  double out_of_band_norm = 0.0;
};

/// Electric potential sampled on the grid at one instant.
struct PotentialSamples {
  Eigen::ArrayXd A0;
  Eigen::ArrayXd Az;

  static PotentialSamples zero(int N) {
    return {Eigen::ArrayXd::Zero(N), Eigen::ArrayXd::Zero(N)};
  }
};

/// Charge and current densities on the grid.
struct ChargeCurrent {
  Eigen::ArrayXd rho;
  Eigen::ArrayXd current;
};

/// A grid field decomposed per momentum bin into positive/negative
/// branch amplitudes. Bin k of the size-N DFT carries the signed index
/// r_k = k for k < N/2 and k - N otherwise.
struct BandSpectrum {
  Eigen::ArrayXcd plus;   // positive-branch amplitude per bin
  Eigen::ArrayXcd minus;  // negative-branch amplitude per bin
};

int signed_bin_index(int k, int N);

/// Pointwise synthesis psi(z_j) = sum c_{lambda,r} u e^{-i(eps0 t - p z_j)}.
/// t = 0 gives a bare coefficient synthesis.
GridField to_grid(const ModeExpansion& x, const SimConfig& cfg, double t);

/// Direct pointwise samples of one plane-wave mode at time t. Same value
/// as to_grid of a unit expansion, without the transform round-off.
GridField sample_mode(const PlaneWaveMode& mode, const SimConfig& cfg, double t);

/// Projects onto the retained modes, c_{lambda,r} = <phi_{lambda,r}, f>,
/// and reports the discarded out-of-band norm.
ModeProjection to_modes(const GridField& f, const SimConfig& cfg);

Complex inner_product(const ModeExpansion& a, const ModeExpansion& b);
Complex inner_product(const GridField& a, const GridField& b);

/// Spectral derivative of periodic samples (complex and real).
Eigen::ArrayXcd spectral_derivative(const Eigen::ArrayXcd& samples, double L);
Eigen::ArrayXd spectral_derivative(const Eigen::ArrayXd& samples, double L);

/// Applies the free Hamiltonian -i sigma_x d/dz + m sigma_z with the
/// derivative taken spectrally.
GridField apply_h0(const GridField& f, const SimConfig& cfg);

/// Free field energy sum lambda E_r |c_{lambda,r}|^2.
double free_energy(const ModeExpansion& x, const SimConfig& cfg);

/// Quadrature of psi^dag (H0 + qV) psi over the interval. Equals
/// free_energy when pot vanishes.
double full_energy(const GridField& f, const PotentialSamples& pot,
                   const SimConfig& cfg);

/// rho = q psi^dag psi and J = q psi^dag sigma_x psi, pointwise.
ChargeCurrent charge_current_density(const GridField& f, double q);

/// Splits a field into the two energy branches of every momentum bin.
BandSpectrum band_decompose(const GridField& f, const SimConfig& cfg);
GridField band_reassemble(const BandSpectrum& s, const SimConfig& cfg);

/// Positive branch energy of every momentum bin of the cfg.N grid.
Eigen::ArrayXd band_energies(const SimConfig& cfg);

}  // namespace diraclab
