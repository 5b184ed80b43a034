#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "diraclab/plane_wave.hpp"
#include "diraclab/sim_config.hpp"

namespace diraclab {

/// Sparse operator over an occupation-number basis.
using FockOperator = Eigen::SparseMatrix<std::complex<double>>;

/// Occupation-number basis over electron modes b_r and positron modes
/// d_r with |r| <= R_F, optionally restricted to total particle number
/// <= particle_cap. Site layout: electron r at bit r + R_F, positron r
/// at bit (2R_F+1) + r + R_F; fermionic signs follow this ordering.
struct FockBasis {
  double m = 1.0;
  double L = 1.0;
  double q = 1.0;
  int R_F = 1;
  int particle_cap = 0;  // 0 means the full space
  std::vector<PlaneWaveMode> plus_modes;   // positive branch spinors per r
  std::vector<PlaneWaveMode> minus_modes;  // negative branch spinors per r
  std::vector<std::uint32_t> states;       // ascending bit masks
  std::unordered_map<std::uint32_t, int> index;

  static FockBasis make(const SimConfig& cfg, int R_F, int particle_cap = 0);

  int n_modes() const { return 2 * R_F + 1; }
  int n_sites() const { return 2 * n_modes(); }
  int dim() const { return static_cast<int>(states.size()); }
  int electron_site(int r) const { return r + R_F; }
  int positron_site(int r) const { return n_modes() + r + R_F; }

  /// Energy of each basis state: sum of E_r over occupied sites.
  Eigen::ArrayXd diagonal_energies() const;
};

/// Matrix of the annihilation operator at one site (b_r or d_r);
/// creation operators are the adjoints.
FockOperator electron_annihilation(int r, const FockBasis& basis);
FockOperator positron_annihilation(int r, const FockBasis& basis);

/// Normal-ordered free Hamiltonian sum E_r (b_r^dag b_r + d_r^dag d_r):
/// diagonal, nonnegative, zero exactly on the vacuum.
FockOperator build_H0(const FockBasis& basis);

/// Charge density q psihat^dag(z) psihat(z) and current density
/// q psihat^dag(z) sigma_x psihat(z), expanded into the four bilinear
/// blocks over the retained modes. Hermitian by construction.
FockOperator build_rho(double z, const FockBasis& basis, const SimConfig& cfg);
FockOperator build_J(double z, const FockBasis& basis, const SimConfig& cfg);

/// Analytic d/dz of build_J.
FockOperator build_J_derivative(double z, const FockBasis& basis,
                                const SimConfig& cfg);

/// <state| H0 |state> for a normalized basis-space vector.
double energy_expectation(const Eigen::VectorXcd& state, const FockBasis& basis);

/// The spectral sum 2 sum_n eps_n |<0| rho(z) |k_n>|^2 over the pair
/// states reachable from rho(z)|0>; positive and z-independent.
double schwinger_sum(double z, const FockBasis& basis, const SimConfig& cfg);

/// <0| rho(z') H0 rho(z) |0> + <0| rho(z) H0 rho(z') |0> by direct
/// sparse products; at z = z' this equals schwinger_sum.
Complex commutator_derivative_direct(double z, double zp, const FockBasis& basis,
                                     const SimConfig& cfg);

/// How the truncated Fock theory fares against the single-particle
/// conservation laws: which commutators vanish and which obstruct.
struct ContinuityReport {
  double schwinger_term = 0.0;         // obstruction to [J(z'), rho(z)] = 0
  double schwinger_z_spread = 0.0;     // max variation of the term over z
  double density_commutator_vacuum = 0.0;  // |<0|[rho(z'), rho(z)]|0>|, ~0
  double heisenberg_residual = 0.0;    // max |i[H0, rho(z)] + dJ/dz| entry
  double vacuum_charge_density = 0.0;  // <0|rho(z)|0> = q (2R_F+1)/L
};
ContinuityReport continuity_violation_report(const FockBasis& basis,
                                             const SimConfig& cfg);

}  // namespace diraclab
