#pragma once

#include <Eigen/Dense>
#include <complex>

#include "diraclab/sim_config.hpp"

namespace diraclab {

using Complex = std::complex<double>;

/// A single-particle wavefunction as complex coefficients over the
/// truncated free-mode basis {(lambda, r) : |r| <= R}. Coefficients are
/// stored as one dense vector, positive branch first:
/// index(+1, r) = r + R, index(-1, r) = (2R+1) + r + R.
struct ModeExpansion {
  int R = 0;
  Eigen::VectorXcd c;

  static ModeExpansion zero(int R) {
    ModeExpansion x;
    x.R = R;
    x.c = Eigen::VectorXcd::Zero(2 * (2 * R + 1));
    return x;
  }
  /// Basis vector for a single mode.
  static ModeExpansion unit(int lambda, int r, int R) {
    ModeExpansion x = zero(R);
    x.at(lambda, r) = 1.0;
    return x;
  }

  int index(int lambda, int r) const {
    return (lambda == +1 ? 0 : 2 * R + 1) + r + R;
  }
  Complex& at(int lambda, int r) { return c[index(lambda, r)]; }
  Complex at(int lambda, int r) const { return c[index(lambda, r)]; }

  double squared_norm() const { return c.squaredNorm(); }
  double norm() const { return c.norm(); }
};

/// The same wavefunction sampled as 2-component spinors on the uniform
/// grid z_j = -L/2 + j L/N.
struct GridField {
  double L = 0.0;
  Eigen::ArrayXcd up;    // upper spinor component, size N
  Eigen::ArrayXcd down;  // lower spinor component, size N

  static GridField zero(int N, double L) {
    GridField f;
    f.L = L;
    f.up = Eigen::ArrayXcd::Zero(N);
    f.down = Eigen::ArrayXcd::Zero(N);
    return f;
  }

  int n() const { return static_cast<int>(up.size()); }
  double squared_norm() const {
    return (L / n()) * (up.abs2().sum() + down.abs2().sum());
  }
  double norm() const { return std::sqrt(squared_norm()); }
};

}  // namespace diraclab
