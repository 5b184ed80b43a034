#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diraclab {

/// Parameters of one simulation: mass, charge, periodic interval, mode
/// cutoff, grid size and the three times t0 < t1 < tf that bound the
/// pulse window and the final measurement. Natural units (hbar = c = 1).
struct SimConfig {
  double m = 1.0;   // fermion mass
  double q = 1.0;   // coupling charge
  double L = 2.0 * std::numbers::pi;  // periodic interval length
  int R = 32;       // retained plane-wave modes r in [-R, R]
  int N = 512;      // uniform grid points on [-L/2, L/2)
  double t0 = 0.0;  // pulse switch-on
  double t1 = 1.0;  // pulse switch-off
  double tf = 1.5;  // measurement time

  int n_modes() const { return 2 * R + 1; }

  double momentum(int r) const { return 2.0 * std::numbers::pi * r / L; }
  double energy(int r) const { return std::hypot(momentum(r), m); }
  double grid_z(int j) const { return -L / 2.0 + j * L / N; }
  double grid_weight() const { return L / N; }

  /// Throws std::invalid_argument naming the offending field if any
  /// invariant is violated; returns *this otherwise.
  const SimConfig& validated() const;
};

}  // namespace diraclab
