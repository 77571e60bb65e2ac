#include "jch/topology.hpp"

#include <cmath>
#include <numbers>

#include "jch/krawtchouk.hpp"

namespace jch {

Eigen::MatrixXd coupling_matrix(const ChainParams& params) {
  params.validate();
  const int n = params.n_cavities;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  switch (params.topology) {
    case Topology::CyclicUniform:
      if (n == 2) {
        c(0, 1) = c(1, 0) = 1.0;
      } else {
        for (int j = 0; j < n; ++j) {
          c(j, (j + 1) % n) = 1.0;
          c((j + 1) % n, j) = 1.0;
        }
      }
      break;
    case Topology::LinearParabolic:
      for (int j = 0; j + 1 < n; ++j) {
        const double w = std::sqrt(static_cast<double>(j + 1) * (n - 1 - j));
        c(j + 1, j) = w;
        c(j, j + 1) = w;
      }
      break;
  }
  return c;
}

Eigen::MatrixXcd dft_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dft_matrix: need N >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd u(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // reduce jk mod N before forming the angle so conjugate rows match exactly
      const int e = (j * k) % n;
      u(j, k) = std::polar(scale, 2.0 * std::numbers::pi * e / n);
    }
  }
  return u;
}

Eigen::MatrixXd krawtchouk_basis(int n) {
  if (n < 2) throw std::invalid_argument("krawtchouk_basis: need N >= 2");
  Eigen::MatrixXd u(n, n);
  for (int x = 0; x < n; ++x) {
    const auto row = krawtchouk::normalized_krawtchouk_row(x, 0.5, n - 1);
    for (int k = 0; k < n; ++k) u(x, k) = row[k];
  }
  return u;
}

ModeFrequencies mode_frequencies(const ChainParams& params) {
  params.validate();
  const int n = params.n_cavities;
  const double omega = params.cavity_freq;
  const double kappa = params.hop_strength;
  Eigen::VectorXd freqs(n);
  switch (params.topology) {
    case Topology::CyclicUniform:
      if (n == 2) {
        freqs << omega + kappa, omega - kappa;
      } else {
        for (int j = 0; j < n; ++j) {
          // evaluate cos at min(j, N-j) so Omega_j == Omega_{N-j} bit-exactly
          const int jr = std::min(j, n - j);
          freqs(j) = omega + 2.0 * kappa * std::cos(2.0 * std::numbers::pi * jr / n);
        }
      }
      break;
    case Topology::LinearParabolic:
      for (int j = 0; j < n; ++j) freqs(j) = omega + kappa * (n - 1 - 2 * j);
      break;
  }
  Eigen::VectorXd det = Eigen::VectorXd::Constant(n, params.atom_freq) - freqs;
  return {std::move(freqs), std::move(det)};
}

ModeBasis mode_basis(const ChainParams& params) {
  auto [freqs, det] = mode_frequencies(params);
  ModeBasis basis;
  basis.mode_freqs = std::move(freqs);
  basis.detunings = std::move(det);
  if (params.topology == Topology::CyclicUniform) {
    basis.transform = dft_matrix(params.n_cavities);
  } else {
    basis.transform = krawtchouk_basis(params.n_cavities).cast<std::complex<double>>();
  }
  return basis;
}

}  // namespace jch
