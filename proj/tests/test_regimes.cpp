#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "jch/dynamics.hpp"
#include "jch/regimes.hpp"

using namespace jch;
namespace rg = jch::regimes;
using std::complex;
constexpr double kPi = std::numbers::pi;

namespace {

ChainParams make(int n, Topology topo, double eps, double omega, double g, double kappa) {
  ChainParams p;
  p.n_cavities = n;
  p.topology = topo;
  p.atom_freq = eps;
  p.cavity_freq = omega;
  p.atom_photon_coupling = g;
  p.hop_strength = kappa;
  return p;
}

std::vector<double> linspace(double t0, double t1, int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = t0 + (t1 - t0) * i / (points - 1);
  return grid;
}

// frozen regime-accuracy constant: sup-norm sector deviation < 20 * ratio^2
double regime_tol(double worst_ratio) { return 20.0 * worst_ratio * worst_ratio; }

}  // namespace

// ---------------------------------------------------------------- large hopping

TEST_CASE("large-hopping kernel: g = 0 reduces K_b to a bare phase") {
  const auto p = make(5, Topology::CyclicUniform, 1.7, 0.3, 0.0, 10.0);
  const double t = 0.83;
  const auto ker = rg::kernel_large_hopping_cyclic(p, t);
  const auto expect = std::polar(1.0, -p.atom_freq * t);
  for (int j = 0; j < 5; ++j) {
    for (int k = 0; k < 5; ++k) {
      CHECK(std::abs(ker.k_b(j, k) - (j == k ? expect : 0.0)) < 1e-14);
    }
  }
}

TEST_CASE("large-hopping kernel: atomic point source matches the mode-sum formula") {
  const auto p = make(4, Topology::CyclicUniform, 1.0, 0.2, 0.3, 7.0);
  const auto [freqs, det] = mode_frequencies(p);
  const double t = 1.21;
  const auto ker = rg::kernel_large_hopping_cyclic(p, t);
  for (int j = 0; j < 4; ++j) {
    complex<double> expect = 0.0;
    for (int k = 0; k < 4; ++k) {
      expect += std::polar(0.25, -(2.0 * kPi * j * k / 4.0 +
                                   (p.atom_freq + p.atom_photon_coupling *
                                                      p.atom_photon_coupling / det(k)) *
                                       t));
    }
    CHECK(std::abs(ker.k_b(j, 0) - expect) < 1e-13);
  }
}

TEST_CASE("large-hopping kernel tracks exact evolution inside its window") {
  // all detunings clear of zero: N=4 with delta = 5 (the delta = 0 choice
  // would put modes 1 and 3 exactly on resonance and is rejected below)
  const auto p = make(4, Topology::CyclicUniform, 6.0, 1.0, 1.0, 50.0);
  const auto basis = mode_basis(p);
  const double ratio =
      p.atom_photon_coupling / basis.detunings.cwiseAbs().minCoeff();
  const auto s0 = SingleExcitationState::atom_excitation_at(4, 0);
  double worst = 0.0;
  for (double t : linspace(0.0, 10.0 / p.atom_photon_coupling, 80)) {
    const auto ker = rg::kernel_large_hopping_cyclic(p, t);
    const auto exact = evolve_exact(s0, t, p, basis);
    worst = std::max(worst, (ker.k_b * s0.atom - exact.atom).cwiseAbs().maxCoeff());
  }
  CHECK(worst < regime_tol(ratio));
}

TEST_CASE("large-hopping kernel refuses singular detunings") {
  // delta = 0 at N=4 puts modes 1,3 at Delta = 0
  const auto p = make(4, Topology::CyclicUniform, 1.0, 1.0, 1.0, 50.0);
  CHECK_THROWS_AS((void)rg::kernel_large_hopping_cyclic(p, 0.5), SingularDetuningError);
  try {
    (void)rg::kernel_large_hopping_cyclic(p, 0.5);
  } catch (const SingularDetuningError& e) {
    CHECK(e.mode() == 1);
  }
  CHECK_THROWS_AS((void)rg::kernel_large_hopping_cyclic(
                      make(4, Topology::LinearParabolic, 6.0, 1.0, 1.0, 50.0), 0.5),
                  TopologyError);
}

TEST_CASE("large-hopping kernel conserves each sector exactly") {
  const auto p = make(6, Topology::CyclicUniform, 2.1, 0.4, 0.27, 30.0);
  std::mt19937_64 rng(41);
  std::normal_distribution<double> dist;
  Eigen::VectorXcd a(6), b(6);
  for (int j = 0; j < 6; ++j) {
    a(j) = complex<double>(dist(rng), dist(rng));
    b(j) = complex<double>(dist(rng), dist(rng));
  }
  for (double t : {0.4, 3.7, 21.0}) {
    const auto ker = rg::kernel_large_hopping_cyclic(p, t);
    CHECK(std::abs((ker.k_a * a).squaredNorm() - a.squaredNorm()) < 1e-12 * a.squaredNorm());
    CHECK(std::abs((ker.k_b * b).squaredNorm() - b.squaredNorm()) < 1e-12 * b.squaredNorm());
  }
}

TEST_CASE("cyclic kernels are circulant") {
  const auto p = make(5, Topology::CyclicUniform, 2.0, 0.1, 0.15, 12.0);
  const auto ker = rg::kernel_large_hopping_cyclic(p, 2.3);
  for (int j = 0; j < 5; ++j) {
    for (int k = 0; k < 5; ++k) {
      CHECK(ker.k_a(j, k) == ker.k_a((j + 2) % 5, (k + 2) % 5));
      CHECK(ker.k_b(j, k) == ker.k_b((j + 3) % 5, (k + 3) % 5));
    }
  }
}

// --------------------------------------------------------------- large detuning

TEST_CASE("bessel kernel at t = 0 is a point excitation") {
  const auto p = make(9, Topology::CyclicUniform, 101.0, 1.0, 1.0, 1.0);
  const auto amps = rg::kernel_large_detuning_cyclic(p, 0.0);
  CHECK(std::abs(amps(0) - complex<double>(1.0, 0.0)) < 1e-15);
  for (int j = 1; j < 9; ++j) CHECK(std::abs(amps(j)) < 1e-15);
}

TEST_CASE("bessel kernel with g = 0 is the exact free-photon propagator") {
  const auto p = make(16, Topology::CyclicUniform, 13.0, 1.0, 0.0, 1.0);
  const auto basis = mode_basis(p);
  const auto s0 = SingleExcitationState::photon_excitation_at(16, 0);
  for (double t : {0.7, 3.0, 9.5}) {
    const auto amps = rg::kernel_large_detuning_cyclic(p, t);
    const auto exact = evolve_exact(s0, t, p, basis);
    CHECK((amps - exact.photon).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("bessel kernel conserves probability and needs nonzero detuning") {
  const auto p = make(12, Topology::CyclicUniform, 101.0, 1.0, 1.0, 1.0);
  for (double t : {0.5, 2.0, 4.0}) {
    CHECK(std::abs(rg::kernel_large_detuning_cyclic(p, t).squaredNorm() - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(
      (void)rg::kernel_large_detuning_cyclic(make(12, Topology::CyclicUniform, 1.0, 1.0, 0.5, 1.0), 1.0),
      SingularDetuningError);
}

// -------------------------------------------------------------- green propagator

TEST_CASE("green propagator limits and identities") {
  // kappa = 0: all Delta_k = delta, so G(j) = delta_{j0}/delta
  const auto flat = make(5, Topology::CyclicUniform, 1.9, 0.4, 0.2, 0.0);
  const auto g_flat = rg::green_propagator(flat);
  CHECK(std::abs(g_flat(0) - 1.0 / flat.detuning()) < 1e-14);
  for (int j = 1; j < 5; ++j) CHECK(std::abs(g_flat(j)) < 1e-14);

  // N = 2 two-term sums
  const auto p2 = make(2, Topology::CyclicUniform, 2.5, 0.5, 0.2, 0.7);
  const auto [f2, d2] = mode_frequencies(p2);
  const auto g2 = rg::green_propagator(p2);
  CHECK(std::abs(g2(0) - 0.5 * (1.0 / d2(0) + 1.0 / d2(1))) < 1e-14);
  CHECK(std::abs(g2(1) - 0.5 * (1.0 / d2(0) - 1.0 / d2(1))) < 1e-14);

  // Parseval and conjugate symmetry
  const auto p = make(7, Topology::CyclicUniform, 3.4, 0.2, 0.1, 0.6);
  const auto [freqs, det] = mode_frequencies(p);
  const auto g_vec = rg::green_propagator(p);
  double lhs = 0.0, rhs = 0.0;
  for (int j = 0; j < 7; ++j) {
    lhs += std::norm(g_vec(j));
    rhs += 1.0 / (det(j) * det(j)) / 7.0;
    CHECK(std::abs(g_vec((7 - j) % 7) - std::conj(g_vec(j))) < 1e-14);
  }
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

  CHECK_THROWS_AS((void)rg::green_propagator(make(4, Topology::CyclicUniform, 1.0, 1.0, 0.1, 50.0)),
                  SingularDetuningError);
}

// ------------------------------------------------------------ cyclic resonances

TEST_CASE("two-cavity resonance formula gives exact swaps at odd multiples of pi/g") {
  for (int l : {0, 1}) {
    const double kappa = 1.0;
    // Delta_l = 0: delta = +/- kappa depending on the chosen mode
    const double delta = (l == 0) ? kappa : -kappa;
    const auto p = make(2, Topology::CyclicUniform, 1.0 + delta, 1.0, 3e-4, kappa);
    Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(2);
    b0(0) = 1.0;
    for (int nn : {0, 1, 2}) {
      const double t = (2 * nn + 1) * kPi / p.atom_photon_coupling;
      const auto res = rg::resonance_cyclic_nondegenerate(p, l, t, b0);
      CHECK(std::abs(res.atom(1)) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("resonance kernels at t = 0 are the identity") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> dist;
  Eigen::VectorXcd b0(4);
  for (int j = 0; j < 4; ++j) b0(j) = complex<double>(dist(rng), dist(rng));

  const auto pn = make(4, Topology::CyclicUniform, 3.0, 1.0, 0.05, 1.0);  // Delta_0 = 0
  const auto rn = rg::resonance_cyclic_nondegenerate(pn, 0, 0.0, b0);
  CHECK((rn.atom - b0).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(rn.photon.cwiseAbs().maxCoeff() == 0.0);

  const auto pd = make(4, Topology::CyclicUniform, 1.0, 1.0, 0.05, 1.0);  // Delta_1 = 0
  const auto rd = rg::resonance_cyclic_degenerate(pd, 1, 0.0, b0);
  CHECK((rd.atom - b0).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(rd.photon.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("nondegenerate resonance tracks exact evolution in its window") {
  // N=4, l=0 resonant: delta = 2 kappa; off-resonant detunings 2k, 4k
  const double kappa = 1.0;
  const double ratio = 0.02;
  const double g = ratio * 2.0 * kappa;
  const auto p = make(4, Topology::CyclicUniform, 1.0 + 2.0 * kappa, 1.0, g, kappa);
  const auto basis = mode_basis(p);
  CHECK(std::abs(basis.detunings(0)) < 1e-14);
  Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(4);
  b0(0) = 1.0;
  const auto s0 = SingleExcitationState::atom_excitation_at(4, 0);
  double worst_fid = 0.0;
  for (double t : linspace(0.0, 2.0 * kPi / g, 60)) {
    const auto res = rg::resonance_cyclic_nondegenerate(p, 0, t, b0);
    const auto exact = evolve_exact(s0, t, p, basis);
    // transfer observable carries the quadratic error bound
    worst_fid = std::max(worst_fid,
                         std::abs(std::abs(res.atom(2)) - std::abs(exact.atom(2))));
  }
  CHECK(worst_fid < regime_tol(ratio));
}

TEST_CASE("nondegenerate/degenerate mode classes are enforced") {
  const auto p = make(4, Topology::CyclicUniform, 1.0, 1.0, 0.1, 1.0);
  Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(4);
  b0(0) = 1.0;
  CHECK_THROWS_AS((void)rg::resonance_cyclic_nondegenerate(p, 1, 0.5, b0), ModeClassError);
  CHECK_THROWS_AS((void)rg::resonance_cyclic_degenerate(p, 0, 0.5, b0), ModeClassError);
  CHECK_THROWS_AS((void)rg::resonance_cyclic_degenerate(p, 2, 0.5, b0), ModeClassError);
}

TEST_CASE("degenerate resonance: N=4 ring moves the excitation to the antipode") {
  const double kappa = 1.0, g = 0.04;
  const auto p = make(4, Topology::CyclicUniform, 1.0, 1.0, g, kappa);  // Delta_1 = delta = 0
  Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(4);
  b0(0) = 1.0;
  for (int nn : {0, 1}) {
    const double t = (2 * nn + 1) * kPi / g;
    const auto res = rg::resonance_cyclic_degenerate(p, 1, t, b0);
    CHECK(std::abs(res.atom(2)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // norm never exceeds unity beyond the regime tolerance
  double worst = 0.0;
  for (double t : linspace(0.0, 2.0 * kPi / g, 100)) {
    const auto res = rg::resonance_cyclic_degenerate(p, 1, t, b0);
    worst = std::max(worst, res.photon.squaredNorm() + res.atom.squaredNorm());
  }
  CHECK(worst < 1.0 + regime_tol(g / (2.0 * kappa)));
}

// ------------------------------------------------------------ parabolic kernels

TEST_CASE("parabolic kernel: dispersion-free transfer reaches unit magnitude") {
  const auto p = make(7, Topology::LinearParabolic, 1.0, 1.0, 0.0, 1.3);
  const double t = kPi / (2.0 * p.hop_strength);
  const auto ker = rg::parabolic_kernel(p, t, rg::ParabolicKernelMode::DispersionFree);
  CHECK(std::abs(ker.k_a(6, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("parabolic kernel at t = 0 is the identity") {
  const auto p = make(5, Topology::LinearParabolic, 4.0, 1.0, 0.3, 1.0);
  for (auto mode : {rg::ParabolicKernelMode::Full, rg::ParabolicKernelMode::DispersionFree,
                    rg::ParabolicKernelMode::LargeDetuning}) {
    const auto ker = rg::parabolic_kernel(p, 0.0, mode);
    CHECK((ker.k_a - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((ker.k_b - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("parabolic Full kernel tracks exact evolution for dominant hopping") {
  const auto p = make(6, Topology::LinearParabolic, 1.5, 1.0, 0.5, 50.0);
  const auto basis = mode_basis(p);
  const double ratio = p.atom_photon_coupling / basis.detunings.cwiseAbs().minCoeff();
  const auto s0 = SingleExcitationState::photon_excitation_at(6, 0);
  double worst = 0.0;
  for (double t : linspace(0.0, kPi / p.hop_strength, 60)) {
    const auto ker = rg::parabolic_kernel(p, t, rg::ParabolicKernelMode::Full);
    const auto exact = evolve_exact(s0, t, p, basis);
    worst = std::max(worst, (ker.k_a * s0.photon - exact.photon).cwiseAbs().maxCoeff());
  }
  CHECK(worst < regime_tol(ratio));
}

TEST_CASE("parabolic kernel requires the parabolic topology and nonsingular detunings") {
  CHECK_THROWS_AS((void)rg::parabolic_kernel(make(4, Topology::CyclicUniform, 4.0, 1.0, 0.1, 1.0),
                                             0.5, rg::ParabolicKernelMode::Full),
                  TopologyError);
  // N=5 with delta = 0 leaves the middle mode resonant
  CHECK_THROWS_AS((void)rg::parabolic_kernel(make(5, Topology::LinearParabolic, 1.0, 1.0, 0.1, 1.0),
                                             0.5, rg::ParabolicKernelMode::Full),
                  SingularDetuningError);
}

TEST_CASE("large-detuning parabolic kernel converges to exact with the redefined constants") {
  // kappa/delta halved twice; photon-sector deviation shrinks ~quadratically
  double prev = std::numeric_limits<double>::infinity();
  for (double ratio : {0.04, 0.02, 0.01}) {
    const double kappa = 1.0, delta = kappa / ratio;
    const double g = 0.5 * ratio * delta;
    const auto p = make(6, Topology::LinearParabolic, 3.0 + delta, 3.0, g, kappa);
    const auto basis = mode_basis(p);
    const double kp = kappa * (1.0 - (g / delta) * (g / delta));
    const auto s0 = SingleExcitationState::photon_excitation_at(6, 0);
    double worst = 0.0;
    for (double t : linspace(0.0, kPi / (2.0 * kp), 40)) {
      const auto ker = rg::parabolic_kernel(p, t, rg::ParabolicKernelMode::LargeDetuning);
      const auto exact = evolve_exact(s0, t, p, basis);
      worst = std::max(worst, (ker.k_a * s0.photon - exact.photon).cwiseAbs().maxCoeff());
    }
    CHECK(worst < regime_tol(ratio));
    CHECK(worst < prev);
    prev = worst;
  }
}

// ----------------------------------------------------------------- closed form

TEST_CASE("closed form at z = 1 is the identity kernel") {
  for (int n : {2, 5, 12, 31}) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const auto f = rg::parabolic_closed_form_f(j, k, n, {1.0, 0.0});
        CHECK(std::abs(f - (j == k ? 1.0 : 0.0)) < 1e-13);
      }
    }
  }
}

TEST_CASE("closed form row j = 0 is the binomial profile") {
  const int n = 9;
  const double kappa = 1.0;
  for (double t : linspace(0.05, 2.9, 12)) {
    const complex<double> z = std::polar(1.0, 2.0 * kappa * t);
    for (int k = 0; k < n; ++k) {
      const auto f = rg::parabolic_closed_form_f(0, k, n, z);
      double binom = 1.0;
      for (int i = 0; i < k; ++i) binom *= static_cast<double>(n - 1 - i) / (i + 1);
      const double expect = std::sqrt(binom) * std::pow(std::abs(std::sin(kappa * t)), k) *
                            std::pow(std::abs(std::cos(kappa * t)), n - 1 - k);
      CHECK(std::abs(std::abs(f) - expect) < 1e-12);
    }
  }
}

TEST_CASE("closed form equals the spectral sum, all pairs, N <= 32") {
  for (int n : {3, 8, 17, 32}) {
    const auto u = krawtchouk_basis(n);
    double worst = 0.0;
    for (int it = 0; it < 64; ++it) {
      const double t = (it + 0.37) * 0.11;
      const complex<double> z = std::polar(1.0, 2.0 * t);
      Eigen::VectorXcd zl(n);
      zl(0) = 1.0;
      for (int l = 1; l < n; ++l) zl(l) = zl(l - 1) * z;
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          complex<double> spec = 0.0;
          for (int l = 0; l < n; ++l) spec += u(j, l) * u(k, l) * zl(l);
          worst = std::max(worst, std::abs(spec - rg::parabolic_closed_form_f(j, k, n, z)));
        }
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("closed form is consistent with the standalone 2F1 away from z = 1") {
  const int n = 10;
  for (double t : {0.9, 2.0}) {
    const complex<double> z = std::polar(1.0, 2.0 * t);
    const complex<double> u_arg = -4.0 * z / ((1.0 - z) * (1.0 - z));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; j + k < n; ++k) {
        double binom = 1.0;
        for (int i = 0; i < j; ++i) binom *= static_cast<double>(n - 1 - i) / (i + 1);
        double binom2 = 1.0;
        for (int i = 0; i < k; ++i) binom2 *= static_cast<double>(n - 1 - i) / (i + 1);
        const complex<double> expect =
            std::sqrt(binom * binom2) / std::pow(2.0, n - 1) *
            std::pow(1.0 - z, j + k) * std::pow(1.0 + z, n - 1 - j - k) *
            jch::specfun::hyp2f1_terminating(j, k, n, u_arg);
        CHECK(std::abs(rg::parabolic_closed_form_f(j, k, n, z) - expect) < 1e-9);
      }
    }
  }
}

// -------------------------------------------------------------- transfer bound

TEST_CASE("transfer bound: g = 0 reaches exactly one at the transfer time") {
  const auto p = make(8, Topology::LinearParabolic, 5.0, 1.0, 0.0, 1.0);
  const auto grid = linspace(0.0, kPi / p.hop_strength, 257);
  const auto report = rg::parabolic_transfer_bound_check(p, grid);
  CHECK(report.bound_ok);
  CHECK(report.max_fidelity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.argmax_time == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("transfer bound: finite coupling keeps the peak strictly below one") {
  const auto p = make(6, Topology::LinearParabolic, 1.0, 1.0, 3.0, 20.0);
  const auto grid = linspace(0.0, 6.0 * kPi / (2.0 * p.hop_strength), 4001);
  const auto report = rg::parabolic_transfer_bound_check(p, grid);
  CHECK(report.bound_ok);
  CHECK(report.max_fidelity < 1.0 - 1e-4);
}

TEST_CASE("transfer bound holds on random grids") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> tdist(0.0, 20.0);
  std::uniform_real_distribution<double> uni(0.1, 2.0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto p = make(n, Topology::LinearParabolic, 1.0 + uni(rng), 1.0, uni(rng),
                        10.0 + 5.0 * uni(rng));
    std::vector<double> grid(50);
    for (auto& t : grid) t = tdist(rng);
    CHECK(rg::parabolic_transfer_bound_check(p, grid).bound_ok);
  }
}

// --------------------------------------------------------- parabolic resonance

TEST_CASE("three-site parabolic resonance transfers perfectly through mode 1") {
  const double g = 0.04, kappa = 1.0;
  const auto p = make(3, Topology::LinearParabolic, 1.0, 1.0, g, kappa);  // Delta^_1 = 0
  Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(3);
  b0(0) = 1.0;
  for (int nn : {0, 1}) {
    const double t = (2 * nn + 1) * kPi / g;
    const auto res = rg::resonance_parabolic(p, 1, t, b0);
    // (U_01)^2 = 1/2 makes the end-site weight 2 * 1/2 = 1
    CHECK(std::abs(res.atom(2)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const auto at0 = rg::resonance_parabolic(p, 1, 0.0, b0);
  CHECK((at0.atom - b0).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("parabolic resonance tracks exact evolution, N = 5, l = 2") {
  const double kappa = 1.0;
  const double ratio = 0.02;
  const double g = ratio * 2.0 * kappa;
  const auto p = make(5, Topology::LinearParabolic, 1.0, 1.0, g, kappa);  // Delta^_2 = 0
  const auto basis = mode_basis(p);
  CHECK(std::abs(basis.detunings(2)) < 1e-14);
  Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(5);
  b0(0) = 1.0;
  const auto s0 = SingleExcitationState::atom_excitation_at(5, 0);
  double worst_fid = 0.0;
  for (double t : linspace(0.0, 2.0 * kPi / g, 50)) {
    const auto res = rg::resonance_parabolic(p, 2, t, b0);
    const auto exact = evolve_exact(s0, t, p, basis);
    worst_fid = std::max(worst_fid,
                         std::abs(std::abs(res.atom(4)) - std::abs(exact.atom(4))));
  }
  CHECK(worst_fid < regime_tol(ratio));
}

// -------------------------------------------------------------- fidelity curves

TEST_CASE("transfer fidelity: parabolic photon transfer peaks at pi/2kappa") {
  const auto p = make(8, Topology::LinearParabolic, 1.0, 1.0, 0.0, 1.0);
  const auto basis = mode_basis(p);
  rg::Propagator prop = [&](const SingleExcitationState& s, double t) {
    return evolve_exact(s, t, p, basis);
  };
  const auto grid = linspace(0.0, kPi, 129);
  const auto curve = rg::transfer_fidelity(prop, 0, 7, rg::Channel::Photon, grid, 8);
  CHECK(curve.peak == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(curve.peak_time == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("transfer fidelity: degenerate ring resonance peaks at pi/g") {
  const double g = 0.04;
  const auto p = make(4, Topology::CyclicUniform, 1.0, 1.0, g, 1.0);
  rg::Propagator prop = [&](const SingleExcitationState& s, double t) {
    const auto res = rg::resonance_cyclic_degenerate(p, 1, t, s.atom);
    return SingleExcitationState::from_amplitudes(res.photon, res.atom, false);
  };
  const auto grid = linspace(0.0, 2.0 * kPi / g, 257);
  const auto curve = rg::transfer_fidelity(prop, 0, 2, rg::Channel::Atom, grid, 4);
  CHECK(curve.peak == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(curve.peak_time == doctest::Approx(kPi / g).epsilon(1e-12));
}

TEST_CASE("transfer fidelity: trivial single-point grid") {
  const auto p = make(4, Topology::CyclicUniform, 1.0, 1.0, 0.1, 1.0);
  const auto basis = mode_basis(p);
  rg::Propagator prop = [&](const SingleExcitationState& s, double t) {
    return evolve_exact(s, t, p, basis);
  };
  const std::vector<double> grid{0.0};
  const auto curve = rg::transfer_fidelity(prop, 1, 1, rg::Channel::Atom, grid, 4);
  CHECK(curve.peak == 1.0);
}

// -------------------------------------------------------------- validity report

TEST_CASE("validity reports expose the governing ratios") {
  const auto p = make(4, Topology::CyclicUniform, 6.0, 1.0, 1.0, 50.0);
  const auto rep = rg::regime_validity({rg::RegimeKind::LargeHopping, 0}, p);
  CHECK(rep.ratios.size() == 3);
  CHECK(rep.worst().value > 0.0);

  const auto pres = make(4, Topology::CyclicUniform, 1.0, 1.0, 0.04, 1.0);
  const auto rres = rg::regime_validity({rg::RegimeKind::ResonanceDegenerate, 1}, pres);
  bool found = false;
  for (const auto& r : rres.ratios) {
    if (r.name == "Delta_l/g") {
      found = true;
      CHECK(r.value == doctest::Approx(0.0));
    }
  }
  CHECK(found);
  CHECK(rres.worst().name == "g/Delta_offres");
  CHECK(rres.worst().value == doctest::Approx(0.02));
}
