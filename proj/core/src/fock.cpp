#include "diraclab/fock.hpp"

#include <bit>

namespace diraclab {

namespace {

struct MaskedState {
  std::uint32_t mask = 0;
  int sign = +1;
  bool alive = true;
};

int parity_below(std::uint32_t mask, int site) {
  const std::uint32_t below = mask & ((std::uint32_t{1} << site) - 1);
  return (std::popcount(below) & 1) ? -1 : +1;
}

MaskedState apply_create(MaskedState s, int site) {
  if (!s.alive || (s.mask >> site) & 1) return {0, 0, false};
  s.sign *= parity_below(s.mask, site);
  s.mask |= std::uint32_t{1} << site;
  return s;
}

MaskedState apply_annihilate(MaskedState s, int site) {
  if (!s.alive || !((s.mask >> site) & 1)) return {0, 0, false};
  s.sign *= parity_below(s.mask, site);
  s.mask &= ~(std::uint32_t{1} << site);
  return s;
}

using Triplets = std::vector<Eigen::Triplet<Complex>>;

void emit(const FockBasis& basis, const MaskedState& out, int col, Complex value,
          Triplets& triplets) {
  if (!out.alive) return;
  const auto it = basis.index.find(out.mask);
  if (it == basis.index.end()) return;  // clipped by the particle cap
  triplets.emplace_back(it->second, col, double(out.sign) * value);
}

// Builds q * psihat^dag Theta psihat at position z, with Theta = 1 for
// the charge density and Theta = sigma_x for the current. When
// derivative is set every block coefficient picks up i (p_s - p_r).
FockOperator build_bilinear(double z, const FockBasis& basis, bool sigma_x,
                            bool derivative) {
  const int M = basis.n_modes();
  const double q = basis.q;

  auto theta_product = [&](const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
    if (sigma_x) return (std::conj(a[0]) * b[1] + std::conj(a[1]) * b[0]);
    return (std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
  };

  // Per-(r, s) coefficients of the four blocks.
  Eigen::MatrixXcd coeff_ee(M, M), coeff_pair(M, M), coeff_anti(M, M),
      coeff_pp(M, M);
  for (int ri = 0; ri < M; ++ri)
    for (int si = 0; si < M; ++si) {
      const PlaneWaveMode& plus_r = basis.plus_modes[ri];
      const PlaneWaveMode& plus_s = basis.plus_modes[si];
      const PlaneWaveMode& minus_r = basis.minus_modes[ri];
      const PlaneWaveMode& minus_s = basis.minus_modes[si];
      const double dp = plus_s.p - plus_r.p;
      Complex factor = q * std::polar(1.0, dp * z);
      if (derivative) factor *= Complex(0.0, dp);
      coeff_ee(ri, si) = factor * theta_product(plus_r.u, plus_s.u);
      coeff_pair(ri, si) = factor * theta_product(plus_r.u, minus_s.u);
      coeff_anti(ri, si) = factor * theta_product(minus_r.u, plus_s.u);
      coeff_pp(ri, si) = factor * theta_product(minus_r.u, minus_s.u);
    }

  Triplets triplets;
  triplets.reserve(static_cast<size_t>(basis.dim()) * M * (M + 3));
  for (int col = 0; col < basis.dim(); ++col) {
    const MaskedState in{basis.states[col], +1, true};
    for (int ri = 0; ri < M; ++ri) {
      const int r = ri - basis.R_F;
      for (int si = 0; si < M; ++si) {
        const int s = si - basis.R_F;
        // b_r^dag b_s
        emit(basis,
             apply_create(apply_annihilate(in, basis.electron_site(s)),
                          basis.electron_site(r)),
             col, coeff_ee(ri, si), triplets);
        // b_r^dag d_s^dag
        emit(basis,
             apply_create(apply_create(in, basis.positron_site(s)),
                          basis.electron_site(r)),
             col, coeff_pair(ri, si), triplets);
        // d_r b_s
        emit(basis,
             apply_annihilate(apply_annihilate(in, basis.electron_site(s)),
                              basis.positron_site(r)),
             col, coeff_anti(ri, si), triplets);
        // d_r d_s^dag
        emit(basis,
             apply_annihilate(apply_create(in, basis.positron_site(s)),
                              basis.positron_site(r)),
             col, coeff_pp(ri, si), triplets);
      }
    }
  }
  FockOperator op(basis.dim(), basis.dim());
  op.setFromTriplets(triplets.begin(), triplets.end());
  op.prune([](int, int, const Complex& v) { return v != Complex(0.0, 0.0); });
  return op;
}

FockOperator site_annihilation(int site, const FockBasis& basis) {
  Triplets triplets;
  for (int col = 0; col < basis.dim(); ++col) {
    const MaskedState out =
        apply_annihilate({basis.states[col], +1, true}, site);
    emit(basis, out, col, Complex(1.0, 0.0), triplets);
  }
  FockOperator op(basis.dim(), basis.dim());
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

}  // namespace

FockBasis FockBasis::make(const SimConfig& cfg, int R_F, int particle_cap) {
  if (R_F < 1)
    throw std::invalid_argument("FockBasis: R_F must be at least 1");
  if (2 * (2 * R_F + 1) > 26)
    throw std::invalid_argument("FockBasis: R_F too large for a dense mask basis");
  FockBasis basis;
  basis.m = cfg.m;
  basis.L = cfg.L;
  basis.q = cfg.q;
  basis.R_F = R_F;
  basis.particle_cap = particle_cap;
  for (int r = -R_F; r <= R_F; ++r) {
    PlaneWaveMode plus, minus;
    plus.r = minus.r = r;
    plus.lambda = +1;
    minus.lambda = -1;
    plus.p = minus.p = 2.0 * std::numbers::pi * r / cfg.L;
    plus.E = minus.E = std::hypot(plus.p, cfg.m);
    plus.eps0 = plus.E;
    minus.eps0 = -minus.E;
    plus.u = mode_spinor(plus.p, +1, cfg.m, cfg.L);
    minus.u = mode_spinor(minus.p, -1, cfg.m, cfg.L);
    basis.plus_modes.push_back(plus);
    basis.minus_modes.push_back(minus);
  }
  const int sites = basis.n_sites();
  const int cap = particle_cap > 0 ? particle_cap : sites;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << sites); ++mask) {
    if (std::popcount(mask) > cap) continue;
    basis.index.emplace(mask, static_cast<int>(basis.states.size()));
    basis.states.push_back(mask);
  }
  return basis;
}

Eigen::ArrayXd FockBasis::diagonal_energies() const {
  Eigen::ArrayXd energies(dim());
  for (int i = 0; i < dim(); ++i) {
    double e = 0.0;
    for (int r = -R_F; r <= R_F; ++r) {
      const double E_r = plus_modes[r + R_F].E;
      if ((states[i] >> electron_site(r)) & 1) e += E_r;
      if ((states[i] >> positron_site(r)) & 1) e += E_r;
    }
    energies[i] = e;
  }
  return energies;
}

FockOperator electron_annihilation(int r, const FockBasis& basis) {
  return site_annihilation(basis.electron_site(r), basis);
}

FockOperator positron_annihilation(int r, const FockBasis& basis) {
  return site_annihilation(basis.positron_site(r), basis);
}

FockOperator build_H0(const FockBasis& basis) {
  const Eigen::ArrayXd energies = basis.diagonal_energies();
  Triplets triplets;
  for (int i = 0; i < basis.dim(); ++i)
    if (energies[i] != 0.0) triplets.emplace_back(i, i, Complex(energies[i], 0.0));
  FockOperator op(basis.dim(), basis.dim());
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

FockOperator build_rho(double z, const FockBasis& basis, const SimConfig&) {
  return build_bilinear(z, basis, /*sigma_x=*/false, /*derivative=*/false);
}

FockOperator build_J(double z, const FockBasis& basis, const SimConfig&) {
  return build_bilinear(z, basis, /*sigma_x=*/true, /*derivative=*/false);
}

FockOperator build_J_derivative(double z, const FockBasis& basis,
                                const SimConfig&) {
  return build_bilinear(z, basis, /*sigma_x=*/true, /*derivative=*/true);
}

double energy_expectation(const Eigen::VectorXcd& state, const FockBasis& basis) {
  if (state.size() != basis.dim())
    throw std::invalid_argument("energy_expectation: vector size mismatch");
  const Eigen::ArrayXd energies = basis.diagonal_energies();
  return (state.array().abs2() * energies).sum();
}

double schwinger_sum(double z, const FockBasis& basis, const SimConfig& cfg) {
  const FockOperator rho = build_rho(z, basis, cfg);
  const Eigen::ArrayXd energies = basis.diagonal_energies();
  if (basis.states.empty() || basis.states[0] != 0)
    throw std::logic_error("schwinger_sum: vacuum must be the first basis state");
  double sum = 0.0;
  for (FockOperator::InnerIterator it(rho, 0); it; ++it)
    sum += energies[it.row()] * std::norm(it.value());
  return 2.0 * sum;
}

Complex commutator_derivative_direct(double z, double zp, const FockBasis& basis,
                                     const SimConfig& cfg) {
  const Eigen::VectorXcd w = build_rho(z, basis, cfg).col(0);
  const Eigen::VectorXcd wp = build_rho(zp, basis, cfg).col(0);
  const Eigen::VectorXcd energies =
      basis.diagonal_energies().matrix().cast<Complex>();
  const Eigen::VectorXcd h0_w = energies.array() * w.array();
  const Eigen::VectorXcd h0_wp = energies.array() * wp.array();
  return wp.dot(h0_w) + w.dot(h0_wp);
}

ContinuityReport continuity_violation_report(const FockBasis& basis,
                                             const SimConfig& cfg) {
  ContinuityReport report;
  const double zs[3] = {-cfg.L / 3.0, cfg.L / 10.0, 0.37 * cfg.L};

  double s_min = 0.0, s_max = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double s = schwinger_sum(zs[i], basis, cfg);
    if (i == 0) {
      s_min = s_max = s;
    } else {
      s_min = std::min(s_min, s);
      s_max = std::max(s_max, s);
    }
  }
  report.schwinger_term = s_max;
  report.schwinger_z_spread = s_max - s_min;

  const FockOperator rho_a = build_rho(zs[0], basis, cfg);
  const FockOperator rho_b = build_rho(zs[1], basis, cfg);
  const Eigen::VectorXcd w = rho_a.col(0);
  const Eigen::VectorXcd wp = rho_b.col(0);
  report.density_commutator_vacuum = std::abs(wp.dot(w) - w.dot(wp));

  const Eigen::ArrayXd energies = basis.diagonal_energies();
  const FockOperator dj = build_J_derivative(zs[0], basis, cfg);
  Triplets residual_triplets;
  for (int col = 0; col < rho_a.outerSize(); ++col)
    for (FockOperator::InnerIterator it(rho_a, col); it; ++it) {
      const Complex commutator =
          Complex(0.0, 1.0) * (energies[it.row()] - energies[it.col()]) * it.value();
      residual_triplets.emplace_back(it.row(), it.col(), commutator);
    }
  for (int col = 0; col < dj.outerSize(); ++col)
    for (FockOperator::InnerIterator it(dj, col); it; ++it)
      residual_triplets.emplace_back(it.row(), it.col(), it.value());
  FockOperator residual(basis.dim(), basis.dim());
  residual.setFromTriplets(residual_triplets.begin(), residual_triplets.end());
  double max_entry = 0.0;
  for (int col = 0; col < residual.outerSize(); ++col)
    for (FockOperator::InnerIterator it(residual, col); it; ++it)
      max_entry = std::max(max_entry, std::abs(it.value()));
  report.heisenberg_residual = max_entry;

  report.vacuum_charge_density = std::real(Complex(rho_a.coeff(0, 0)));
  return report;
}

}  // namespace diraclab
