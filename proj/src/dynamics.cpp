#include "jch/dynamics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace jch {

namespace {

using std::complex;

void check_dims(int state_n, int basis_n) {
  if (state_n != basis_n) {
    throw std::invalid_argument("dimension mismatch: state has " + std::to_string(state_n) +
                                " sites, basis has " + std::to_string(basis_n));
  }
}

// sin(chi t)/chi with the removable chi -> 0 singularity handled by series
double sin_ratio(double chi, double t) {
  const double u = chi * t;
  if (std::abs(u) < 1e-6) {
    const double u2 = u * u;
    return t * (1.0 - u2 / 6.0 * (1.0 - u2 / 20.0));
  }
  return std::sin(u) / chi;
}

}  // namespace

DelocalizedState to_delocalized(const SingleExcitationState& state, const ModeBasis& basis) {
  check_dims(state.sites(), basis.size());
  return {basis.transform * state.photon, basis.transform * state.atom};
}

SingleExcitationState from_delocalized(const DelocalizedState& state, const ModeBasis& basis) {
  check_dims(state.size(), basis.size());
  SingleExcitationState out;
  out.photon = basis.transform.adjoint() * state.photon_modes;
  out.atom = basis.transform.adjoint() * state.atom_modes;
  out.unit_norm = std::abs(out.norm() - 1.0) < kNormTol;
  return out;
}

BlockEigensystem block_eigensystem(const ChainParams& params, const ModeBasis& basis) {
  params.validate();
  const int n = basis.size();
  const double g = params.atom_photon_coupling;
  BlockEigensystem sys;
  sys.chi.resize(n);
  sys.omega_plus.resize(n);
  sys.omega_minus.resize(n);
  sys.detuning = basis.detunings;
  for (int j = 0; j < n; ++j) {
    const double half_delta = 0.5 * basis.detunings(j);
    const double chi = std::hypot(half_delta, g);
    const double mean = 0.5 * (basis.mode_freqs(j) + params.atom_freq);
    sys.chi(j) = chi;
    sys.omega_plus(j) = mean + chi;
    sys.omega_minus(j) = mean - chi;
  }
  return sys;
}

SingleExcitationState evolve_exact(const SingleExcitationState& state, double t,
                                   const ChainParams& params, const ModeBasis& basis) {
  params.validate();
  check_dims(state.sites(), basis.size());
  if (!std::isfinite(t)) throw std::invalid_argument("evolve_exact: non-finite time");
  const int n = basis.size();
  const double g = params.atom_photon_coupling;
  const double eps = params.atom_freq;

  DelocalizedState modes = to_delocalized(state, basis);
  for (int j = 0; j < n; ++j) {
    const double delta = basis.detunings(j);
    const double chi = std::hypot(0.5 * delta, g);
    const double s = sin_ratio(chi, t);
    const double c = std::cos(chi * t);
    const complex<double> phase =
        std::polar(1.0, -0.5 * (basis.mode_freqs(j) + eps) * t);
    const complex<double> diag_a(c, 0.5 * delta * s);
    const complex<double> diag_b(c, -0.5 * delta * s);
    const complex<double> cross(0.0, -g * s);
    const complex<double> a0 = modes.photon_modes(j);
    const complex<double> b0 = modes.atom_modes(j);
    modes.photon_modes(j) = phase * (diag_a * a0 + cross * b0);
    modes.atom_modes(j) = phase * (diag_b * b0 + cross * a0);
  }
  return from_delocalized(modes, basis);
}

SingleExcitationState dense_oracle_evolve(const SingleExcitationState& state, double t,
                                          const ChainParams& params) {
  params.validate();
  const int n = params.n_cavities;
  check_dims(state.sites(), n);
  if (n > kOracleMaxSites) {
    throw std::invalid_argument("dense_oracle_evolve: N exceeds oracle bound");
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  h.topLeftCorner(n, n) = params.cavity_freq * Eigen::MatrixXd::Identity(n, n) +
                          params.hop_strength * coupling_matrix(params);
  h.bottomRightCorner(n, n) = params.atom_freq * Eigen::MatrixXd::Identity(n, n);
  h.topRightCorner(n, n).diagonal().setConstant(params.atom_photon_coupling);
  h.bottomLeftCorner(n, n).diagonal().setConstant(params.atom_photon_coupling);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  Eigen::VectorXcd psi(2 * n);
  psi.head(n) = state.photon;
  psi.tail(n) = state.atom;
  Eigen::VectorXcd coeffs = solver.eigenvectors().transpose() * psi;
  for (int i = 0; i < 2 * n; ++i) {
    coeffs(i) *= std::polar(1.0, -solver.eigenvalues()(i) * t);
  }
  psi = solver.eigenvectors() * coeffs;

  SingleExcitationState out;
  out.photon = psi.head(n);
  out.atom = psi.tail(n);
  out.unit_norm = std::abs(out.norm() - 1.0) < kNormTol;
  return out;
}

SingleExcitationState shift_apply(const SingleExcitationState& state, int steps,
                                  Topology topology) {
  if (topology != Topology::CyclicUniform) {
    throw TopologyError("shift_apply: lattice translation requires the cyclic topology");
  }
  const int n = state.sites();
  const int s = ((steps % n) + n) % n;
  SingleExcitationState out = SingleExcitationState::zero(n);
  out.unit_norm = state.unit_norm;
  for (int j = 0; j < n; ++j) {
    out.photon((j + s) % n) = state.photon(j);
    out.atom((j + s) % n) = state.atom(j);
  }
  return out;
}

}  // namespace jch
