#pragma once

#include <Eigen/Dense>
#include <complex>

#include "diraclab/sim_config.hpp"

namespace diraclab {

/// One free solution of the periodic 1+1D Dirac equation: a plane wave
/// u_{lambda,r} e^{i(p_r z - eps0 t)} with momentum p_r = 2*pi*r/L and
/// signed energy eps0 = lambda*E_r, E_r = sqrt(p_r^2 + m^2).
struct PlaneWaveMode {
  int r = 0;             // integer mode index
  int lambda = +1;       // energy sign, +1 or -1
  double p = 0.0;        // momentum
  double E = 0.0;        // positive branch energy
  Eigen::Vector2cd u;    // spinor amplitude, L * u^dag u = 1
  double eps0 = 0.0;     // signed energy lambda * E
};

/// Spinor amplitude of the free solution at momentum p. Stable at every
/// p: the negative branch uses the cancellation-free form
/// u = |p| / sqrt(2 L E (E+m)) * (1, -(E+m)/p)^T, and the p = 0 negative
/// branch is its continuum limit (0, 1)^T / sqrt(L).
Eigen::Vector2cd mode_spinor(double p, int lambda, double m, double L);

/// Builds the retained mode (lambda, r). Rejects |r| > cfg.R and
/// lambda outside {+1, -1}.
PlaneWaveMode make_mode(int r, int lambda, const SimConfig& cfg);

}  // namespace diraclab
