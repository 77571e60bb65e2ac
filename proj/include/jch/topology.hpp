#pragma once

#include <Eigen/Dense>

#include "jch/params.hpp"

namespace jch {

// Diagonalizing transform of the photon-hopping term together with the
// delocalized-mode spectrum.  Rows of `transform` index modes, columns index
// sites; delocalized amplitudes are transform * localized amplitudes.
struct ModeBasis {
  Eigen::MatrixXcd transform;   // W, unitary
  Eigen::VectorXd mode_freqs;   // Omega_j
  Eigen::VectorXd detunings;    // Delta_j = epsilon - Omega_j

  [[nodiscard]] int size() const { return static_cast<int>(mode_freqs.size()); }
};

// Dimensionless adjacency C of the hopping term; the Hamiltonian carries
// kappa * C.  CyclicUniform: C_{j,k} = delta_{j,k+1} + delta_{j+1,k} mod N.
// At N = 2 the wrap edge coincides with the nearest-neighbor edge and a single
// edge C_{01} = 1 is emitted (two-cavity model), not a doubled one.
// LinearParabolic: C_{j+1,j} = C_{j,j+1} = sqrt((j+1)(N-1-j)).
Eigen::MatrixXd coupling_matrix(const ChainParams& params);

// Discrete Fourier transform U_{jk} = omega^{jk} / sqrt(N), omega = e^{2 pi i/N}.
// Diagonalizes the cyclic C with spectrum 2 cos(2 pi j / N).
Eigen::MatrixXcd dft_matrix(int n);

// Symmetric orthogonal matrix U_{jk} = K~_k(j; 1/2; N-1) of normalized
// Krawtchouk values; diagonalizes the parabolic C with spectrum
// {N-1, N-3, ..., -(N-1)}.  std::overflow_error for N > 64.
Eigen::MatrixXd krawtchouk_basis(int n);

// Delocalized eigenfrequencies and detunings.
//   CyclicUniform:    Omega_j = Omega + 2 kappa cos(2 pi j / N)   (N >= 3)
//                     Omega_j = Omega +/- kappa                   (N = 2, single edge)
//   LinearParabolic:  Omega_j = Omega + kappa (N - 1 - 2 j)
struct ModeFrequencies {
  Eigen::VectorXd mode_freqs;
  Eigen::VectorXd detunings;
};
ModeFrequencies mode_frequencies(const ChainParams& params);

// Transform + spectrum for the chain's topology.
ModeBasis mode_basis(const ChainParams& params);

inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kDiagTol = 1e-10;

}  // namespace jch
