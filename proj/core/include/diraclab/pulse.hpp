#pragma once

#include <Eigen/Dense>
#include <functional>

#include "diraclab/sim_config.hpp"
#include "diraclab/spectral.hpp"

namespace diraclab {

/// Smooth switch-on profile g(t) with g(t0) = 0 and g'(t0) = 0. Both the
/// value and its analytic derivative are carried so no numerical
/// differentiation of the envelope is ever needed.
struct Envelope {
  std::function<double(double)> g;
  std::function<double(double)> gdot;
};

/// Default ramp sin^2(pi (t-t0) / (2 (t1-t0))): vanishes with zero slope
/// at t0 and reaches exactly 1 at t1.
Envelope smoothstep_envelope(double t0, double t1);

/// A pure-gauge pulse: chi(z, t) = g(t) * chi1(z) switched on over
/// (t0, t1), with chi1 an L-periodic profile held as real Fourier
/// coefficients over harmonics k <= K. The induced potential is
/// (A0, Az) = (dchi/dt, -dchi/dz), identically zero outside the window.
struct GaugePulse {
  double q = 1.0;
  double t0 = 0.0;
  double t1 = 1.0;
  Eigen::ArrayXd cos_coeff;  // k = 0..K
  Eigen::ArrayXd sin_coeff;  // k = 0..K, entry 0 must stay zero
  Envelope env;

  /// Builds a pulse from harmonic coefficients; the window and charge
  /// come from cfg, the envelope defaults to the smoothstep ramp.
  /// Rejects profiles with harmonics beyond cfg.R and envelopes that do
  /// not switch on smoothly.
  static GaugePulse from_harmonics(const Eigen::ArrayXd& cos_coeff,
                                   const Eigen::ArrayXd& sin_coeff,
                                   const SimConfig& cfg);
  static GaugePulse from_harmonics(const Eigen::ArrayXd& cos_coeff,
                                   const Eigen::ArrayXd& sin_coeff,
                                   const SimConfig& cfg, Envelope env);
  static GaugePulse zero(const SimConfig& cfg);

  int harmonics() const { return static_cast<int>(cos_coeff.size()) - 1; }
  bool is_zero() const;

  double chi1_at(double z, double L) const;
  double chi1_deriv_at(double z, double L) const;
  Eigen::ArrayXd chi1_samples(int N, double L) const;
  Eigen::ArrayXd chi1_deriv_samples(int N, double L) const;
  Eigen::ArrayXd chi1_samples(const SimConfig& cfg) const {
    return chi1_samples(cfg.N, cfg.L);
  }
  Eigen::ArrayXd chi1_deriv_samples(const SimConfig& cfg) const {
    return chi1_deriv_samples(cfg.N, cfg.L);
  }

  /// chi(z_j, t) on the grid; meaningful for t within [t0, t1].
  Eigen::ArrayXd chi_samples(double t, const SimConfig& cfg) const;

  /// (A0, Az) on the grid at time t; zero outside the window.
  PotentialSamples potential_at(double t, const SimConfig& cfg) const;
};

}  // namespace diraclab
