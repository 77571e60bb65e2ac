#pragma once

#include <Eigen/Dense>

#include "jch/params.hpp"
#include "jch/state.hpp"
#include "jch/topology.hpp"

namespace jch {

inline constexpr double kOracleTol = 1e-9;
inline constexpr int kOracleMaxSites = 512;

// Per-mode spectral data of the 2x2 blocks [[Omega_j, g], [g, epsilon]].
//   chi_j = sqrt((Delta_j/2)^2 + g^2),  Omega_{j,+/-} = (Omega_j+epsilon)/2 +/- chi_j
struct BlockEigensystem {
  Eigen::VectorXd chi;
  Eigen::VectorXd omega_plus;
  Eigen::VectorXd omega_minus;
  Eigen::VectorXd detuning;
};

// Basis transforms between localized and delocalized amplitudes:
// alpha = W a, beta = W b and the unitary inverse.
DelocalizedState to_delocalized(const SingleExcitationState& state, const ModeBasis& basis);
SingleExcitationState from_delocalized(const DelocalizedState& state, const ModeBasis& basis);

BlockEigensystem block_eigensystem(const ChainParams& params, const ModeBasis& basis);

// Exact evolution by the closed-form 2x2 block propagator,
//   alpha_j(t) = e^{-i (Omega_j+eps)t/2} [ (cos chi t + i (Delta/2) sin(chi t)/chi) alpha_j(0)
//                                          - i g sin(chi t)/chi beta_j(0) ],
// and the Delta -> -Delta mirror for beta_j(t).  sin(chi t)/chi is evaluated
// as t*sinc so the chi -> 0 limit (g = 0 on a resonant mode) is regular.
// Negative t evolves backwards.
SingleExcitationState evolve_exact(const SingleExcitationState& state, double t,
                                   const ChainParams& params, const ModeBasis& basis);

// Ground truth: assemble the 2N x 2N single-excitation Hamiltonian
// [[Omega I + kappa C, g I], [g I, eps I]] over {|G>|1_j>, |e_j>|0>} and
// evolve by real-symmetric eigendecomposition.
SingleExcitationState dense_oracle_evolve(const SingleExcitationState& state, double t,
                                          const ChainParams& params);

// Cyclic permutation of both amplitude vectors by `steps` sites (the lattice
// translation tau).  TopologyError on LinearParabolic.
SingleExcitationState shift_apply(const SingleExcitationState& state, int steps,
                                  Topology topology);

}  // namespace jch
