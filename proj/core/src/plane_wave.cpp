#include "diraclab/plane_wave.hpp"

namespace diraclab {

Eigen::Vector2cd mode_spinor(double p, int lambda, double m, double L) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("mode_spinor: lambda must be +1 or -1");
  const double E = std::hypot(p, m);
  Eigen::Vector2cd u;
  if (lambda == +1) {
    const double norm = std::sqrt((E + m) / (2.0 * L * E));
    u << norm, norm * p / (E + m);
  } else if (p == 0.0) {
    u << 0.0, 1.0 / std::sqrt(L);
  } else {
    // E - m = p^2/(E+m), so N_{-1} = |p| / sqrt(2 L E (E+m)) and the
    // second component N_{-1} * p/(m-E) = -N_{-1} (E+m)/p. This form
    // keeps the branches exactly orthogonal in floating point.
    const double norm = std::abs(p) / std::sqrt(2.0 * L * E * (E + m));
    u << norm, -norm * (E + m) / p;
  }
  return u;
}

PlaneWaveMode make_mode(int r, int lambda, const SimConfig& cfg) {
  if (std::abs(r) > cfg.R)
    throw std::invalid_argument("make_mode: |r| = " + std::to_string(std::abs(r)) +
                                " exceeds cutoff R = " + std::to_string(cfg.R));
  PlaneWaveMode mode;
  mode.r = r;
  mode.lambda = lambda;
  mode.p = cfg.momentum(r);
  mode.E = cfg.energy(r);
  mode.u = mode_spinor(mode.p, lambda, cfg.m, cfg.L);
  mode.eps0 = lambda * mode.E;
  return mode;
}

}  // namespace diraclab
