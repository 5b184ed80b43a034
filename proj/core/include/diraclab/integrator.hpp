#pragma once

#include <vector>

#include "diraclab/pulse.hpp"
#include "diraclab/spectral.hpp"
#include "diraclab/states.hpp"

namespace diraclab {

/// Settings for the implicit-midpoint (Crank-Nicolson family) time
/// stepper. The scheme is second order and exactly norm preserving up to
/// the inner solve tolerance.
struct IntegratorConfig {
  double dt = 5e-4;          // nominal step, adjusted to divide each segment
  double solve_tol = 1e-14;  // relative tolerance of the inner fixed point
  int max_iterations = 100;  // inner iteration cap
  int sample_stride = 0;     // keep every k-th step; 0 keeps endpoints only
};

/// Time-stepped solution sampled on request. segment[i] identifies the
/// smooth time interval sample i belongs to (0 inside the pulse window,
/// 1 after switch-off); centered time differences must not straddle
/// segments.
struct Trajectory {
  std::vector<double> times;
  std::vector<GridField> fields;
  std::vector<int> segment;

  const GridField& endpoint() const { return fields.back(); }
};

/// Integrates i dpsi/dt = (H0 + q sigma_x dchi/dz + q dchi/dt) psi from
/// cfg.t0 to cfg.tf, with the free equation after switch-off. H0 is
/// applied spectrally, the potential pointwise. Throws on inner-solve
/// non-convergence and when dt violates the stability budget
/// dt * (max E + q max|dchi/dt| + q max|dchi/dz|) < 0.5.
Trajectory integrate(const GridField& psi0, const GaugePulse& pulse,
                     const SimConfig& cfg, const IntegratorConfig& icfg);

/// Max over sampled (z, t) of |drho/dt + dJ/dz|, with centered time
/// differences inside each smooth segment and the spatial derivative
/// taken spectrally. Converges to zero as dt^2.
double continuity_residual(const Trajectory& traj, double q,
                           const SimConfig& cfg);

}  // namespace diraclab
