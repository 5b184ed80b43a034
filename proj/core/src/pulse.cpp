#include "diraclab/pulse.hpp"

namespace diraclab {

Envelope smoothstep_envelope(double t0, double t1) {
  const double span = t1 - t0;
  Envelope env;
  env.g = [t0, span](double t) {
    const double s = std::sin(0.5 * std::numbers::pi * (t - t0) / span);
    return s * s;
  };
  env.gdot = [t0, span](double t) {
    return 0.5 * std::numbers::pi / span *
           std::sin(std::numbers::pi * (t - t0) / span);
  };
  return env;
}

GaugePulse GaugePulse::from_harmonics(const Eigen::ArrayXd& cos_coeff,
                                      const Eigen::ArrayXd& sin_coeff,
                                      const SimConfig& cfg) {
  return from_harmonics(cos_coeff, sin_coeff, cfg,
                        smoothstep_envelope(cfg.t0, cfg.t1));
}

GaugePulse GaugePulse::from_harmonics(const Eigen::ArrayXd& cos_coeff,
                                      const Eigen::ArrayXd& sin_coeff,
                                      const SimConfig& cfg, Envelope env) {
  if (cos_coeff.size() != sin_coeff.size())
    throw std::invalid_argument("GaugePulse: cos/sin coefficient sizes differ");
  if (cos_coeff.size() < 1)
    throw std::invalid_argument("GaugePulse: need at least the k = 0 coefficient");
  if (cos_coeff.size() - 1 > cfg.R)
    throw std::invalid_argument(
        "GaugePulse: profile harmonics exceed the mode cutoff R");
  if (sin_coeff[0] != 0.0)
    throw std::invalid_argument("GaugePulse: sin coefficient at k = 0 must be zero");
  if (std::abs(env.g(cfg.t0)) > 1e-12 || std::abs(env.gdot(cfg.t0)) > 1e-12)
    throw std::invalid_argument(
        "GaugePulse: envelope must vanish with zero slope at t0");
  GaugePulse pulse;
  pulse.q = cfg.q;
  pulse.t0 = cfg.t0;
  pulse.t1 = cfg.t1;
  pulse.cos_coeff = cos_coeff;
  pulse.sin_coeff = sin_coeff;
  pulse.env = std::move(env);
  return pulse;
}

GaugePulse GaugePulse::zero(const SimConfig& cfg) {
  return from_harmonics(Eigen::ArrayXd::Zero(1), Eigen::ArrayXd::Zero(1), cfg);
}

bool GaugePulse::is_zero() const {
  return cos_coeff.abs().maxCoeff() == 0.0 && sin_coeff.abs().maxCoeff() == 0.0;
}

double GaugePulse::chi1_at(double z, double L) const {
  double value = cos_coeff[0];
  for (int k = 1; k <= harmonics(); ++k) {
    const double kz = 2.0 * std::numbers::pi * k * z / L;
    value += cos_coeff[k] * std::cos(kz) + sin_coeff[k] * std::sin(kz);
  }
  return value;
}

double GaugePulse::chi1_deriv_at(double z, double L) const {
  double value = 0.0;
  for (int k = 1; k <= harmonics(); ++k) {
    const double wav = 2.0 * std::numbers::pi * k / L;
    const double kz = wav * z;
    value += wav * (sin_coeff[k] * std::cos(kz) - cos_coeff[k] * std::sin(kz));
  }
  return value;
}

Eigen::ArrayXd GaugePulse::chi1_samples(int N, double L) const {
  Eigen::ArrayXd out(N);
  for (int j = 0; j < N; ++j) out[j] = chi1_at(-L / 2 + j * L / N, L);
  return out;
}

Eigen::ArrayXd GaugePulse::chi1_deriv_samples(int N, double L) const {
  Eigen::ArrayXd out(N);
  for (int j = 0; j < N; ++j) out[j] = chi1_deriv_at(-L / 2 + j * L / N, L);
  return out;
}

Eigen::ArrayXd GaugePulse::chi_samples(double t, const SimConfig& cfg) const {
  return env.g(t) * chi1_samples(cfg);
}

PotentialSamples GaugePulse::potential_at(double t, const SimConfig& cfg) const {
  if (t < t0 || t > t1) return PotentialSamples::zero(cfg.N);
  PotentialSamples pot;
  pot.A0 = env.gdot(t) * chi1_samples(cfg);
  pot.Az = -env.g(t) * chi1_deriv_samples(cfg);
  return pot;
}

}  // namespace diraclab
