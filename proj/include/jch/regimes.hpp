#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "jch/params.hpp"
#include "jch/state.hpp"

namespace jch::regimes {

inline constexpr double kDetuningFloor = 1e-9;

// Which limiting description of the dynamics is in force.
enum class RegimeKind {
  Exact,
  LargeHopping,             // cyclic, kappa >> delta, g;  |g/Delta_j| << 1
  LargeDetuning,            // cyclic, delta >> kappa, g;  Bessel kernel
  ResonanceNondegenerate,   // cyclic, l = 0 or N/2
  ResonanceDegenerate,      // cyclic, l paired with N-l
  ParabolicFull,            // parabolic large hopping, spectral-sum kernel
  ParabolicDispersionFree,  // parabolic, g = 0 closed form
  ParabolicLargeDetuning,   // parabolic, redefined Omega', kappa'
  ParabolicResonance,       // parabolic, single resonant mode l
};

struct RegimeSpec {
  RegimeKind kind = RegimeKind::Exact;
  int resonant_mode = 0;  // l, used by the resonance kinds
};

// Dimensionless ratios the regime's derivation assumes small.
struct ValidityRatio {
  std::string name;
  double value = 0.0;
};

struct ValidityReport {
  std::vector<ValidityRatio> ratios;
  [[nodiscard]] ValidityRatio worst() const;
};

ValidityReport regime_validity(const RegimeSpec& spec, const ChainParams& params);

std::string regime_name(RegimeKind kind);

// Linear evolution maps for one fixed time: a(t) = K_a a(0), b(t) = K_b b(0).
struct KernelMatrix {
  Eigen::MatrixXcd k_a;
  Eigen::MatrixXcd k_b;
  double time = 0.0;
};

// Cyclic chain, dominant hopping.  Each sector evolves by mode phases only:
//   K_a(j,k) = (1/N) sum_l exp[-i(2 pi (j-k) l / N + (Omega_l - g^2/Delta_l) t)]
//   K_b(j,k) = (1/N) sum_l exp[-i(2 pi (j-k) l / N + (eps    + g^2/Delta_l) t)]
// SingularDetuningError if any |Delta_l| < kDetuningFloor.
KernelMatrix kernel_large_hopping_cyclic(const ChainParams& params, double t);

// Cyclic chain, dominant detuning, photon initially at site 0:
//   a_j(t) = e^{-i(Omega - g^2/delta) t} sum_nu (-i)^{j+nu N} J_{j+nu N}(x),
//   x = 2 kappa (1 - g^2/delta^2) t, atomic amplitudes stay zero.
// The nu sum stops once two consecutive shells contribute < 1e-14 in norm;
// throws std::runtime_error if orders run past the Bessel bound first.
Eigen::VectorXcd kernel_large_detuning_cyclic(const ChainParams& params, double t);

// Fourier transform of the reciprocal detunings, G(j) = (1/N) sum_k w^{-jk}/Delta_k;
// the hopping-dominated propagator of both excitation species.
Eigen::VectorXcd green_propagator(const ChainParams& params);

// Near-resonant evolution from purely atomic initial data b0.  The resonant
// mode(s) carry the Rabi factors cos/sin[(g + Delta_l^2/8g) t] with prefactor
// e^{-i(eps - Delta_l/2) t}; the off-resonant modes are dispersion-free
// (phase e^{-i eps t}), so at Delta_l = 0 the pair reduces exactly to the
// sin^2(gt/2) transfer form.
// Nondegenerate requires l == (N-l) mod N (l = 0, or N/2 for even N);
// degenerate requires the opposite.  ModeClassError otherwise.
struct SectorAmplitudes {
  Eigen::VectorXcd photon;
  Eigen::VectorXcd atom;
};
SectorAmplitudes resonance_cyclic_nondegenerate(const ChainParams& params, int l, double t,
                                                const Eigen::VectorXcd& atom_init);
SectorAmplitudes resonance_cyclic_degenerate(const ChainParams& params, int l, double t,
                                             const Eigen::VectorXcd& atom_init);
SectorAmplitudes resonance_parabolic(const ChainParams& params, int l, double t,
                                     const Eigen::VectorXcd& atom_init);

// Parabolic-chain kernels K_a, K_b through the Krawtchouk basis U:
//   Full:            K_a = sum_l U_jl U_kl e^{-i(Omega^_l - g^2/Delta^_l) t}
//   DispersionFree:  g = 0 phases e^{-i Omega^_l t}
//   LargeDetuning:   DispersionFree with Omega -> Omega - g^2/delta and
//                    kappa -> kappa (1 - (g/delta)^2); K_b picks up the
//                    matching first-order Stark ladder eps + g^2/delta +
//                    kappa (g/delta)^2 (N-1-2l).
enum class ParabolicKernelMode { Full, DispersionFree, LargeDetuning };
KernelMatrix parabolic_kernel(const ChainParams& params, double t, ParabolicKernelMode mode);

// Closed form of the dispersion-free correlation f_{j,k}(t) = sum_l U_jl U_kl z^l,
//   f = 2^{-(N-1)} sqrt(C(N-1,j) C(N-1,k)) (1-z)^{j+k} (1+z)^{N-1-j-k}
//       * 2F1(-j, -k; -(N-1); -4z/(1-z)^2),
// evaluated termwise with the prefactor folded into each summand, so the
// z -> 1 singularity of the 2F1 argument cancels analytically (at z = 1 only
// the (1-z)^0 term of the diagonal survives and f = delta_{jk}).  Mirror
// symmetry maps j+k > N-1 onto f_{N-1-j,k}(-z) to keep all exponents
// nonnegative.  Accumulation is double-double; see dd_real.hpp.
std::complex<double> parabolic_closed_form_f(int j, int k, int n, std::complex<double> z);

// Scans |a_{N-1}(t)| of the Full kernel for a photon launched at site 0 and
// checks the spectral bound |a_{N-1}| <= |sum_l (U_0l)^2| = 1.
struct TransferBoundReport {
  double max_fidelity = 0.0;
  double argmax_time = 0.0;
  bool bound_ok = true;  // max <= 1 + 1e-12
};
TransferBoundReport parabolic_transfer_bound_check(const ChainParams& params,
                                                   std::span<const double> t_grid);

// |amplitude at target|(t) for a unit excitation launched at source.
enum class Channel { Photon, Atom };

using Propagator =
    std::function<SingleExcitationState(const SingleExcitationState&, double)>;

struct FidelityCurve {
  std::vector<double> times;
  std::vector<double> fidelity;
  double peak = 0.0;
  double peak_time = 0.0;
};
FidelityCurve transfer_fidelity(const Propagator& propagate, int source, int target,
                                Channel channel, std::span<const double> t_grid, int n_sites);

}  // namespace jch::regimes
