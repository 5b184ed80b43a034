#include "diraclab/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <memory>

namespace diraclab {

namespace {

// Plan cache, one forward/backward pair per transform size. FFTW plan
// creation is not thread safe, so the cache is thread local.
class Fft {
 public:
  explicit Fft(int n) : n_(n) {
    in_ = fftw_alloc_complex(n);
    out_ = fftw_alloc_complex(n);
    fwd_ = fftw_plan_dft_1d(n, in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Fft() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(in_);
    fftw_free(out_);
  }
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  // Unscaled sum_j x_j e^{-2 pi i j k / N}.
  Eigen::ArrayXcd forward(const Eigen::ArrayXcd& x) { return run(x, fwd_); }
  // Unscaled sum_k X_k e^{+2 pi i j k / N}.
  Eigen::ArrayXcd backward(const Eigen::ArrayXcd& x) { return run(x, bwd_); }

 private:
  Eigen::ArrayXcd run(const Eigen::ArrayXcd& x, fftw_plan plan) {
    std::copy_n(reinterpret_cast<const double*>(x.data()), 2 * n_,
                reinterpret_cast<double*>(in_));
    fftw_execute(plan);
    Eigen::ArrayXcd y(n_);
    std::copy_n(reinterpret_cast<const double*>(out_), 2 * n_,
                reinterpret_cast<double*>(y.data()));
    return y;
  }

  int n_;
  fftw_complex* in_;
  fftw_complex* out_;
  fftw_plan fwd_;
  fftw_plan bwd_;
};

Fft& fft_for(int n) {
  thread_local std::map<int, std::unique_ptr<Fft>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Fft>(n);
  return *slot;
}

// Real-valued branch spinors and energies for every momentum bin of a
// size-N grid. Cached per (N, L, m).
struct BandTable {
  Eigen::ArrayXd p, E;
  // Orthonormal spinors sqrt(L) * u_{lambda}(p_k) per bin.
  Eigen::ArrayXd plus0, plus1, minus0, minus1;
};

const BandTable& band_table(const SimConfig& cfg) {
  thread_local std::map<std::tuple<int, double, double>, std::unique_ptr<BandTable>> cache;
  auto& slot = cache[{cfg.N, cfg.L, cfg.m}];
  if (!slot) {
    auto table = std::make_unique<BandTable>();
    const int n = cfg.N;
    table->p.resize(n);
    table->E.resize(n);
    table->plus0.resize(n);
    table->plus1.resize(n);
    table->minus0.resize(n);
    table->minus1.resize(n);
    const double root_l = std::sqrt(cfg.L);
    for (int k = 0; k < n; ++k) {
      const int r = signed_bin_index(k, n);
      const double p = 2.0 * std::numbers::pi * r / cfg.L;
      table->p[k] = p;
      table->E[k] = std::hypot(p, cfg.m);
      const Eigen::Vector2cd up = mode_spinor(p, +1, cfg.m, cfg.L);
      const Eigen::Vector2cd um = mode_spinor(p, -1, cfg.m, cfg.L);
      table->plus0[k] = root_l * up[0].real();
      table->plus1[k] = root_l * up[1].real();
      table->minus0[k] = root_l * um[0].real();
      table->minus1[k] = root_l * um[1].real();
    }
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace

int signed_bin_index(int k, int N) { return k < (N + 1) / 2 ? k : k - N; }

GridField to_grid(const ModeExpansion& x, const SimConfig& cfg, double t) {
  if (x.R != cfg.R)
    throw std::invalid_argument("to_grid: expansion cutoff does not match config");
  const int n = cfg.N;
  Eigen::ArrayXcd spec_up = Eigen::ArrayXcd::Zero(n);
  Eigen::ArrayXcd spec_down = Eigen::ArrayXcd::Zero(n);
  for (int r = -cfg.R; r <= cfg.R; ++r) {
    const double E = cfg.energy(r);
    const Complex phase_plus = std::polar(1.0, -E * t);
    const Complex phase_minus = std::polar(1.0, +E * t);
    const Eigen::Vector2cd up = mode_spinor(cfg.momentum(r), +1, cfg.m, cfg.L);
    const Eigen::Vector2cd um = mode_spinor(cfg.momentum(r), -1, cfg.m, cfg.L);
    const Complex a = x.at(+1, r) * phase_plus;
    const Complex b = x.at(-1, r) * phase_minus;
    const double offset = (r & 1) ? -1.0 : 1.0;  // e^{i p_r (-L/2)}
    const int bin = (r % n + n) % n;
    spec_up[bin] += offset * (a * up[0] + b * um[0]);
    spec_down[bin] += offset * (a * up[1] + b * um[1]);
  }
  GridField f;
  f.L = cfg.L;
  auto& fft = fft_for(n);
  f.up = fft.backward(spec_up);
  f.down = fft.backward(spec_down);
  return f;
}

GridField sample_mode(const PlaneWaveMode& mode, const SimConfig& cfg, double t) {
  GridField f = GridField::zero(cfg.N, cfg.L);
  const Complex time_phase = std::polar(1.0, -mode.eps0 * t);
  for (int j = 0; j < cfg.N; ++j) {
    const Complex phase = time_phase * std::polar(1.0, mode.p * cfg.grid_z(j));
    f.up[j] = mode.u[0] * phase;
    f.down[j] = mode.u[1] * phase;
  }
  return f;
}

ModeProjection to_modes(const GridField& f, const SimConfig& cfg) {
  if (f.n() != cfg.N)
    throw std::invalid_argument("to_modes: field size does not match config");
  const int n = cfg.N;
  auto& fft = fft_for(n);
  const Eigen::ArrayXcd spec_up = fft.forward(f.up);
  const Eigen::ArrayXcd spec_down = fft.forward(f.down);

  ModeProjection out;
  out.modes = ModeExpansion::zero(cfg.R);
  for (int r = -cfg.R; r <= cfg.R; ++r) {
    const int bin = (r % n + n) % n;
    const double offset = (r & 1) ? -1.0 : 1.0;
    const Complex amp_up = offset * spec_up[bin] / double(n);
    const Complex amp_down = offset * spec_down[bin] / double(n);
    const Eigen::Vector2cd up = mode_spinor(cfg.momentum(r), +1, cfg.m, cfg.L);
    const Eigen::Vector2cd um = mode_spinor(cfg.momentum(r), -1, cfg.m, cfg.L);
    out.modes.at(+1, r) =
        cfg.L * (std::conj(up[0]) * amp_up + std::conj(up[1]) * amp_down);
    out.modes.at(-1, r) =
        cfg.L * (std::conj(um[0]) * amp_up + std::conj(um[1]) * amp_down);
  }

  double discarded = 0.0;
  for (int k = 0; k < n; ++k) {
    if (std::abs(signed_bin_index(k, n)) <= cfg.R) continue;
    discarded += std::norm(spec_up[k]) + std::norm(spec_down[k]);
  }
  out.out_of_band_norm = std::sqrt(discarded * cfg.L) / n;
  return out;
}

Complex inner_product(const ModeExpansion& a, const ModeExpansion& b) {
  if (a.R != b.R)
    throw std::invalid_argument("inner_product: mismatched mode cutoffs");
  return a.c.dot(b.c);  // Eigen's dot conjugates the left argument
}

Complex inner_product(const GridField& a, const GridField& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("inner_product: mismatched grid sizes");
  const Complex s =
      (a.up.conjugate() * b.up + a.down.conjugate() * b.down).sum();
  return s * (a.L / a.n());
}

Eigen::ArrayXcd spectral_derivative(const Eigen::ArrayXcd& samples, double L) {
  const int n = static_cast<int>(samples.size());
  auto& fft = fft_for(n);
  Eigen::ArrayXcd spec = fft.forward(samples);
  for (int k = 0; k < n; ++k) {
    const int r = signed_bin_index(k, n);
    // Drop the unpaired Nyquist bin; band-limited content never uses it.
    const double p = (2 * std::abs(r) == n) ? 0.0 : 2.0 * std::numbers::pi * r / L;
    spec[k] *= Complex(0.0, p);
  }
  return fft.backward(spec) / double(n);
}

Eigen::ArrayXd spectral_derivative(const Eigen::ArrayXd& samples, double L) {
  return spectral_derivative(samples.cast<Complex>().eval(), L).real();
}

GridField apply_h0(const GridField& f, const SimConfig& cfg) {
  const Eigen::ArrayXcd dup = spectral_derivative(f.up.eval(), f.L);
  const Eigen::ArrayXcd ddown = spectral_derivative(f.down.eval(), f.L);
  GridField out;
  out.L = f.L;
  const Complex mi(0.0, -1.0);
  out.up = mi * ddown + cfg.m * f.up;
  out.down = mi * dup - cfg.m * f.down;
  return out;
}

double free_energy(const ModeExpansion& x, const SimConfig& cfg) {
  double e = 0.0;
  for (int r = -x.R; r <= x.R; ++r) {
    const double E = cfg.energy(r);
    e += E * (std::norm(x.at(+1, r)) - std::norm(x.at(-1, r)));
  }
  return e;
}

double full_energy(const GridField& f, const PotentialSamples& pot,
                   const SimConfig& cfg) {
  const GridField h0f = apply_h0(f, cfg);
  const double kinetic = (f.up.conjugate() * h0f.up + f.down.conjugate() * h0f.down)
                             .real()
                             .sum();
  const Eigen::ArrayXd density = f.up.abs2() + f.down.abs2();
  const Eigen::ArrayXd sigma_x = 2.0 * (f.up.conjugate() * f.down).real();
  const double potential = (pot.A0 * density - pot.Az * sigma_x).sum();
  return (f.L / f.n()) * (kinetic + cfg.q * potential);
}

ChargeCurrent charge_current_density(const GridField& f, double q) {
  ChargeCurrent out;
  out.rho = q * (f.up.abs2() + f.down.abs2());
  out.current = 2.0 * q * (f.up.conjugate() * f.down).real();
  return out;
}

BandSpectrum band_decompose(const GridField& f, const SimConfig& cfg) {
  const BandTable& table = band_table(cfg);
  auto& fft = fft_for(cfg.N);
  const Eigen::ArrayXcd spec_up = fft.forward(f.up);
  const Eigen::ArrayXcd spec_down = fft.forward(f.down);
  BandSpectrum s;
  s.plus = table.plus0 * spec_up + table.plus1 * spec_down;
  s.minus = table.minus0 * spec_up + table.minus1 * spec_down;
  return s;
}

GridField band_reassemble(const BandSpectrum& s, const SimConfig& cfg) {
  const BandTable& table = band_table(cfg);
  auto& fft = fft_for(cfg.N);
  const Eigen::ArrayXcd spec_up = table.plus0 * s.plus + table.minus0 * s.minus;
  const Eigen::ArrayXcd spec_down = table.plus1 * s.plus + table.minus1 * s.minus;
  GridField f;
  f.L = cfg.L;
  f.up = fft.backward(spec_up) / double(cfg.N);
  f.down = fft.backward(spec_down) / double(cfg.N);
  return f;
}

Eigen::ArrayXd band_energies(const SimConfig& cfg) { return band_table(cfg).E; }

}  // namespace diraclab
