#pragma once

#include "diraclab/pulse.hpp"
#include "diraclab/spectral.hpp"
#include "diraclab/states.hpp"

namespace diraclab {

/// Raised when projecting a gauge-multiplied field back onto the
/// retained modes loses more norm than the caller's budget: the cutoff R
/// is too small for this pulse strength.
struct LeakageError : std::runtime_error {
  double leakage;
  explicit LeakageError(double leak, double tol)
      : std::runtime_error("mode projection lost " + std::to_string(leak) +
                           " of norm, over the budget " + std::to_string(tol) +
                           "; raise the cutoff R (and N) for this pulse strength"),
        leakage(leak) {}
};

/// Free evolution: c_{lambda,r} -> c_{lambda,r} e^{-i lambda E_r dt}.
ModeExpansion free_propagate(const ModeExpansion& x, double dt,
                             const SimConfig& cfg);

/// Pointwise gauge phase psi(z_j) -> e^{-i q chi(z_j, t)} psi(z_j).
GridField gauge_phase_apply(const GridField& f, const GaugePulse& pulse,
                            double t);

struct EvolvedState {
  ModeExpansion modes;
  double leakage = 0.0;
};

/// Closed-form final state at cfg.tf: free evolution to t1, the gauge
/// phase at t1, projection back onto the retained modes (leakage
/// audited against leakage_tol), then free evolution to tf.
EvolvedState exact_final_state(const ModeExpansion& x0, const GaugePulse& pulse,
                               const SimConfig& cfg, double leakage_tol = 1e-8);

/// Energy change of the pulse window evaluated in quadrature:
/// q * integral of chi(z, t1) d/dz (psi0^dag sigma_x psi0) at t1, with
/// psi0 the freely evolved initial state. Equals
/// free_energy(exact_final_state(x0)) - free_energy(x0).
double energy_shift_formula(const ModeExpansion& x0, const GaugePulse& pulse,
                            const SimConfig& cfg);

/// Free evolution applied on the whole grid band (all N momentum bins,
/// not just |r| <= R). Exactly unitary on the grid; no truncation.
GridField band_free_evolve(const GridField& f, double dt, const SimConfig& cfg);

/// State inside the pulse window, t in [t0, t1]: the gauge phase at t
/// applied to the freely evolved initial state. Returned on the grid so
/// no mode truncation is involved.
GridField exact_state_during(const ModeExpansion& x0, const GaugePulse& pulse,
                             double t, const SimConfig& cfg);

}  // namespace diraclab
