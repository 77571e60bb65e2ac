#include "jch/validation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "jch/dynamics.hpp"
#include "jch/krawtchouk.hpp"
#include "jch/params.hpp"
#include "jch/regimes.hpp"
#include "jch/specfun.hpp"
#include "jch/state.hpp"
#include "jch/topology.hpp"

namespace jch::validation {

namespace {

using std::complex;
constexpr double kPi = std::numbers::pi;

CheckResult make_result(std::string module, std::string name, double err, double threshold) {
  return {std::move(module), std::move(name), err, threshold, err < threshold};
}

SingleExcitationState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Eigen::VectorXcd a(n), b(n);
  for (int j = 0; j < n; ++j) {
    a(j) = complex<double>(dist(rng), dist(rng));
    b(j) = complex<double>(dist(rng), dist(rng));
  }
  return SingleExcitationState::from_amplitudes(std::move(a), std::move(b), true);
}

ChainParams random_params(int n, Topology topo, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  ChainParams p;
  p.n_cavities = n;
  p.topology = topo;
  p.cavity_freq = 2.0 * uni(rng);
  p.atom_freq = p.cavity_freq + 3.0 * uni(rng);
  p.atom_photon_coupling = std::abs(uni(rng)) + 0.05;
  p.hop_strength = 1.5 * uni(rng);
  return p;
}

double state_distance(const SingleExcitationState& x, const SingleExcitationState& y) {
  return std::max((x.photon - y.photon).cwiseAbs().maxCoeff(),
                  (x.atom - y.atom).cwiseAbs().maxCoeff());
}

// ---- topology ----

void topology_checks(std::vector<CheckResult>& out) {
  double worst_dft = 0.0, worst_mub = 0.0;
  for (int n = 1; n <= 64; ++n) {
    const Eigen::MatrixXcd u = dft_matrix(n);
    worst_dft = std::max(worst_dft,
                         (u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
    const double expect = 1.0 / std::sqrt(static_cast<double>(n));
    worst_mub = std::max(worst_mub, (u.cwiseAbs().array() - expect).abs().maxCoeff());
  }
  out.push_back(make_result("topology", "dft_unitarity", worst_dft, kUnitarityTol));
  out.push_back(make_result("topology", "dft_mutually_unbiased", worst_mub, kUnitarityTol));

  double worst_kraw = 0.0, worst_sym = 0.0, worst_parity = 0.0;
  for (int n : {2, 3, 5, 8, 16, 32, 48, 64}) {
    const Eigen::MatrixXd u = krawtchouk_basis(n);
    worst_kraw = std::max(worst_kraw,
                          (u * u.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
    worst_sym = std::max(worst_sym, (u - u.transpose()).cwiseAbs().maxCoeff());
    for (int j = 0; j < n; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      worst_parity = std::max(worst_parity, std::abs(u(n - 1, j) - sign * u(0, j)));
    }
  }
  out.push_back(make_result("topology", "krawtchouk_orthogonality", worst_kraw, kDiagTol));
  out.push_back(make_result("topology", "krawtchouk_symmetry", worst_sym, kUnitarityTol));
  out.push_back(check_krawtchouk_parity(krawtchouk_basis(16)));
  out.push_back(make_result("topology", "krawtchouk_parity_all_n", worst_parity, kUnitarityTol));

  double worst_diag = 0.0, worst_degen = 0.0;
  for (int n : {2, 3, 4, 5, 8, 16, 33}) {
    for (Topology topo : {Topology::CyclicUniform, Topology::LinearParabolic}) {
      ChainParams p;
      p.n_cavities = n;
      p.topology = topo;
      p.cavity_freq = 0.3;
      p.atom_freq = 1.1;
      p.hop_strength = 0.7;
      p.atom_photon_coupling = 0.2;
      const ModeBasis basis = mode_basis(p);
      const Eigen::MatrixXcd d = basis.transform *
                                 (p.hop_strength * coupling_matrix(p)).cast<complex<double>>() *
                                 basis.transform.adjoint();
      Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(n, n);
      for (int j = 0; j < n; ++j) expected(j, j) = basis.mode_freqs(j) - p.cavity_freq;
      worst_diag = std::max(worst_diag, (d - expected).cwiseAbs().maxCoeff());
      if (topo == Topology::CyclicUniform && n > 2) {
        for (int j = 1; 2 * j < n; ++j) {
          worst_degen = std::max(worst_degen,
                                 std::abs(basis.mode_freqs(j) - basis.mode_freqs(n - j)));
        }
      }
    }
  }
  out.push_back(make_result("topology", "mode_diagonalization", worst_diag, kDiagTol));
  out.push_back(make_result("topology", "cyclic_degeneracy_exact", worst_degen,
                            std::numeric_limits<double>::min()));
}

// ---- krawtchouk ----

void krawtchouk_checks(std::vector<CheckResult>& out) {
  namespace kw = jch::krawtchouk;
  double worst_gram = 0.0;
  for (int big_n : {1, 4, 12, 24, 40, 64}) {
    Eigen::MatrixXd u(big_n + 1, big_n + 1);
    for (int x = 0; x <= big_n; ++x) {
      const auto row = kw::normalized_krawtchouk_row(x, 0.5, big_n);
      for (int n = 0; n <= big_n; ++n) u(x, n) = row[n];
    }
    worst_gram = std::max(worst_gram, (u.transpose() * u - Eigen::MatrixXd::Identity(
                                                               big_n + 1, big_n + 1))
                                          .cwiseAbs()
                                          .maxCoeff());
  }
  out.push_back(make_result("krawtchouk", "orthonormality", worst_gram, 1e-10));

  // recurrence path vs terminating-sum path; the alternating sum keeps
  // ~1e-10 absolute accuracy only up to 𝔑 ~ 16 (the exact-rational test
  // oracle covers the full range)
  double worst_paths = 0.0;
  for (int big_n : {4, 10, 13, 16}) {
    for (int n = 0; n <= big_n; ++n) {
      for (int x = 0; x <= big_n; ++x) {
        const double a = kw::normalized_krawtchouk(n, x, 0.5, big_n);
        const double b = kw::normalized_krawtchouk_direct(n, x, 0.5, big_n);
        worst_paths = std::max(worst_paths, std::abs(a - b) / std::max(1.0, std::abs(a)));
      }
    }
  }
  out.push_back(make_result("krawtchouk", "sum_vs_recurrence", worst_paths, 1e-10));

  bool parity_ok = true;
  for (int big_n : {2, 4, 6, 9, 16}) {
    for (int l = 0; l <= big_n; ++l) {
      for (int j = 0; j <= big_n; ++j) parity_ok = parity_ok && kw::parity_check(l, j, big_n);
    }
  }
  out.push_back(make_result("krawtchouk", "parity_identities", parity_ok ? 0.0 : 1.0, 0.5));

  double worst_dual = 0.0;
  for (int big_n : {7, 15, 31}) {
    for (int n = 0; n <= big_n; ++n) {
      for (int x = 0; x < n; ++x) {
        worst_dual = std::max(worst_dual, std::abs(kw::normalized_krawtchouk(n, x, 0.5, big_n) -
                                                   kw::normalized_krawtchouk(x, n, 0.5, big_n)));
      }
    }
  }
  out.push_back(make_result("krawtchouk", "self_duality", worst_dual, 1e-12));
}

// ---- specfun ----

void specfun_checks(std::vector<CheckResult>& out) {
  namespace sf = jch::specfun;

  double worst_rec = 0.0;
  for (double x : {0.7, 3.3, 11.0, 42.0, 120.0}) {
    const auto seq = sf::bessel_j_sequence(80, x);
    for (int n = 1; n < 60; ++n) {
      const double lhs = seq[n - 1] + seq[n + 1];
      const double rhs = 2.0 * n / x * seq[n];
      worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  out.push_back(make_result("specfun", "bessel_recurrence", worst_rec, 1e-9));

  double worst_norm = 0.0;
  for (double x : {0.5, 5.0, 25.0, 90.0}) {
    const auto seq = sf::bessel_j_sequence(sf::kBesselOrderMax, x);
    double s = seq[0] * seq[0];
    for (int n = 1; n <= sf::kBesselOrderMax; ++n) s += 2.0 * seq[n] * seq[n];
    worst_norm = std::max(worst_norm, std::abs(s - 1.0));
  }
  out.push_back(make_result("specfun", "bessel_squared_sum", worst_norm, 1e-10));

  // Jacobi-Anger: sum_n i^n J_n(x) e^{in theta} = e^{ix cos theta}
  double worst_ja = 0.0;
  for (double x : {1.0, 8.0, 20.0}) {
    const int m = static_cast<int>(x) + 40;
    const auto seq = sf::bessel_j_sequence(m, x);
    for (double theta : {0.0, 0.41, 1.7, 2.9}) {
      complex<double> s = seq[0];
      for (int n = 1; n <= m; ++n) {
        const complex<double> in = std::polar(1.0, 0.5 * kPi * n);
        const double jn = seq[n];
        s += in * jn * std::polar(1.0, n * theta) +
             std::conj(in) * ((n & 1) ? -jn : jn) * std::polar(1.0, -n * theta);
      }
      worst_ja = std::max(worst_ja, std::abs(s - std::polar(1.0, x * std::cos(theta))));
    }
  }
  out.push_back(make_result("specfun", "jacobi_anger", worst_ja, 1e-10));

  double worst_parity = 0.0;
  for (int n : {1, 3, 8}) {
    for (double x : {0.3, 2.5, 17.0}) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      worst_parity =
          std::max(worst_parity, std::abs(sf::bessel_j(-n, x) - sign * sf::bessel_j(n, x)));
    }
  }
  out.push_back(make_result("specfun", "bessel_parity", worst_parity, 1e-15));

  double worst_hyp = 0.0;
  for (int n : {2, 5, 9}) {
    for (int k = 0; k < n; ++k) {
      worst_hyp = std::max(worst_hyp,
                           std::abs(sf::hyp2f1_terminating(0, k, n, {0.37, 1.2}) - 1.0));
    }
  }
  out.push_back(make_result("specfun", "hyp2f1_degenerate_cases", worst_hyp, 1e-15));
}

// ---- dynamics ----

void dynamics_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> tdist(-4.0, 4.0);

  double worst_oracle = 0.0, worst_norm = 0.0, worst_group = 0.0, worst_reverse = 0.0;
  for (Topology topo : {Topology::CyclicUniform, Topology::LinearParabolic}) {
    for (int n : {2, 3, 4, 5, 8, 16}) {
      for (int draw = 0; draw < 50; ++draw) {
        const ChainParams p = random_params(n, topo, rng);
        const ModeBasis basis = mode_basis(p);
        const SingleExcitationState s0 = random_state(n, rng);
        const double t = tdist(rng);
        const auto fast = evolve_exact(s0, t, p, basis);
        worst_oracle = std::max(worst_oracle, state_distance(fast, dense_oracle_evolve(s0, t, p)));
        worst_norm = std::max(worst_norm, std::abs(fast.norm() - s0.norm()));
        if (draw < 8) {
          const double t2 = tdist(rng);
          worst_group = std::max(
              worst_group, state_distance(evolve_exact(fast, t2, p, basis),
                                          evolve_exact(s0, t + t2, p, basis)));
          worst_reverse =
              std::max(worst_reverse, state_distance(evolve_exact(fast, -t, p, basis), s0));
        }
      }
    }
  }
  out.push_back(make_result("dynamics", "oracle_equivalence", worst_oracle, kOracleTol));
  out.push_back(make_result("dynamics", "unitarity", worst_norm, 1e-12));
  out.push_back(make_result("dynamics", "group_law", worst_group, 1e-10));
  out.push_back(make_result("dynamics", "time_reversal", worst_reverse, 1e-10));

  double worst_shift = 0.0, worst_eigen = 0.0;
  for (int n : {3, 4, 7, 12}) {
    const ChainParams p = random_params(n, Topology::CyclicUniform, rng);
    const ModeBasis basis = mode_basis(p);
    const SingleExcitationState s0 = random_state(n, rng);
    const double t = tdist(rng);
    worst_shift = std::max(
        worst_shift,
        state_distance(shift_apply(evolve_exact(s0, t, p, basis), 1, Topology::CyclicUniform),
                       evolve_exact(shift_apply(s0, 1, Topology::CyclicUniform), t, p, basis)));
    // shifted state's delocalized photon modes pick up the eigenphase w^j
    const auto modes0 = to_delocalized(s0, basis);
    const auto modes1 = to_delocalized(shift_apply(s0, 1, Topology::CyclicUniform), basis);
    for (int j = 0; j < n; ++j) {
      const complex<double> w = std::polar(1.0, 2.0 * kPi * j / n);
      worst_eigen = std::max(worst_eigen, std::abs(modes1.photon_modes(j) -
                                                   w * modes0.photon_modes(j)));
    }
  }
  out.push_back(make_result("dynamics", "shift_commutes_with_evolution", worst_shift, 1e-10));
  out.push_back(make_result("dynamics", "shift_mode_eigenphase", worst_eigen, 1e-12));

  double worst_trace = 0.0;
  for (int n : {2, 5, 9}) {
    const ChainParams p = random_params(n, Topology::CyclicUniform, rng);
    const ModeBasis basis = mode_basis(p);
    const auto sys = block_eigensystem(p, basis);
    const double lhs = sys.omega_plus.sum() + sys.omega_minus.sum();
    const double rhs = basis.mode_freqs.sum() + n * p.atom_freq;
    worst_trace = std::max(worst_trace, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  out.push_back(make_result("dynamics", "spectral_sum_rule", worst_trace, 1e-12));
}

// ---- regimes ----

void regimes_checks(std::vector<CheckResult>& out, std::mt19937_64& rng) {
  namespace rg = jch::regimes;

  // closed-form / spectral-sum identity
  double worst_cf = 0.0;
  for (int n : {2, 3, 6, 12, 24, 32}) {
    const Eigen::MatrixXd u = krawtchouk_basis(n);
    for (int it = 0; it < 16; ++it) {
      const double t = (it + 0.41) * 0.13;
      const complex<double> z = std::polar(1.0, 2.0 * t);
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          complex<double> spec = 0.0;
          for (int l = 0; l < n; ++l) spec += u(j, l) * u(k, l) * std::pow(z, l);
          worst_cf = std::max(worst_cf, std::abs(spec - rg::parabolic_closed_form_f(j, k, n, z)));
        }
      }
    }
  }
  out.push_back(make_result("regimes", "closed_form_identity", worst_cf, 1e-10));

  // sector norms under the phase kernels are conserved exactly
  double worst_sector = 0.0;
  {
    ChainParams p;
    p.n_cavities = 5;
    p.topology = Topology::CyclicUniform;
    p.cavity_freq = 1.0;
    p.atom_freq = 1.0;
    p.hop_strength = 50.0;
    p.atom_photon_coupling = 0.31;
    std::normal_distribution<double> dist;
    Eigen::VectorXcd a(5), b(5);
    for (int j = 0; j < 5; ++j) {
      a(j) = complex<double>(dist(rng), dist(rng));
      b(j) = complex<double>(dist(rng), dist(rng));
    }
    for (double t : {0.3, 2.2, 17.0}) {
      const auto ker = rg::kernel_large_hopping_cyclic(p, t);
      worst_sector = std::max(worst_sector,
                              std::abs((ker.k_a * a).squaredNorm() - a.squaredNorm()));
      worst_sector = std::max(worst_sector,
                              std::abs((ker.k_b * b).squaredNorm() - b.squaredNorm()));
    }
  }
  out.push_back(make_result("regimes", "sector_conservation", worst_sector, 1e-12));

  // circulant structure of the cyclic kernel
  double worst_circ = 0.0;
  {
    ChainParams p;
    p.n_cavities = 6;
    p.topology = Topology::CyclicUniform;
    p.cavity_freq = 0.5;
    p.atom_freq = 1.7;
    p.hop_strength = 9.0;
    p.atom_photon_coupling = 0.11;
    const auto ker = rg::kernel_large_hopping_cyclic(p, 1.37);
    for (int j = 0; j < 6; ++j) {
      for (int k = 0; k < 6; ++k) {
        worst_circ = std::max(worst_circ,
                              std::abs(ker.k_a(j, k) - ker.k_a((j + 1) % 6, (k + 1) % 6)));
      }
    }
  }
  out.push_back(make_result("regimes", "dft_kernel_circulancy", worst_circ,
                            std::numeric_limits<double>::min()));

  // Krawtchouk kernel mirror symmetry |K(N-1-j, N-1-k)| = |K(j,k)|
  double worst_mirror = 0.0;
  {
    ChainParams p;
    p.n_cavities = 7;
    p.topology = Topology::LinearParabolic;
    p.cavity_freq = 1.0;
    p.atom_freq = 4.5;
    p.hop_strength = 1.0;
    p.atom_photon_coupling = 0.2;
    const auto ker = rg::parabolic_kernel(p, 0.73, rg::ParabolicKernelMode::Full);
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) {
        worst_mirror = std::max(worst_mirror, std::abs(std::abs(ker.k_a(6 - j, 6 - k)) -
                                                       std::abs(ker.k_a(j, k))));
      }
    }
  }
  out.push_back(make_result("regimes", "krawtchouk_kernel_mirror", worst_mirror, 1e-12));

  // transfer claims
  {
    ChainParams p;
    p.n_cavities = 8;
    p.topology = Topology::LinearParabolic;
    p.cavity_freq = 1.0;
    p.atom_freq = 1.0;
    p.hop_strength = 1.0;
    p.atom_photon_coupling = 0.0;
    const ModeBasis basis = mode_basis(p);
    const auto s0 = SingleExcitationState::photon_excitation_at(8, 0);
    const auto st = evolve_exact(s0, kPi / (2.0 * p.hop_strength), p, basis);
    out.push_back(make_result("regimes", "parabolic_perfect_transfer",
                              std::abs(std::abs(st.photon(7)) - 1.0), 1e-9));
  }
  {
    ChainParams p;
    p.n_cavities = 4;
    p.topology = Topology::CyclicUniform;
    p.cavity_freq = 1.0;
    p.atom_freq = 1.0;  // resonant with modes 1 and 3
    p.hop_strength = 1.0;
    p.atom_photon_coupling = 0.02;
    Eigen::VectorXcd b0 = Eigen::VectorXcd::Zero(4);
    b0(0) = 1.0;
    const auto res = rg::resonance_cyclic_degenerate(p, 1, kPi / 0.02, b0);
    out.push_back(make_result("regimes", "degenerate_resonance_transfer",
                              std::abs(std::abs(res.atom(2)) - 1.0), 1e-12));
  }

  // transfer bound on random grids
  {
    ChainParams p;
    p.n_cavities = 6;
    p.topology = Topology::LinearParabolic;
    p.cavity_freq = 1.0;
    p.atom_freq = 1.0;
    p.hop_strength = 20.0;
    p.atom_photon_coupling = 1.0;
    std::uniform_real_distribution<double> tdist(0.0, 10.0);
    std::vector<double> grid(64);
    bool ok = true;
    for (int rep = 0; rep < 50; ++rep) {
      for (auto& t : grid) t = tdist(rng);
      ok = ok && rg::parabolic_transfer_bound_check(p, grid).bound_ok;
    }
    out.push_back(make_result("regimes", "transfer_bound", ok ? 0.0 : 1.0, 0.5));
  }

  // large-hopping kernel vs exact dynamics on the populated sector
  {
    ChainParams p;
    p.n_cavities = 5;
    p.topology = Topology::CyclicUniform;
    p.cavity_freq = 1.0;
    p.atom_freq = 1.0;
    p.hop_strength = 50.0;
    const auto [freqs, det] = mode_frequencies(p);
    const double ratio = 0.02;
    p.atom_photon_coupling = ratio * det.cwiseAbs().minCoeff();
    const ModeBasis basis = mode_basis(p);
    const auto s0 = SingleExcitationState::atom_excitation_at(5, 0);
    double worst = 0.0;
    for (int i = 0; i <= 48; ++i) {
      const double t = i * (10.0 / p.atom_photon_coupling) / 48.0;
      const auto ker = rg::kernel_large_hopping_cyclic(p, t);
      const auto exact = evolve_exact(s0, t, p, basis);
      worst = std::max(worst, (ker.k_b * s0.atom - exact.atom).cwiseAbs().maxCoeff());
    }
    out.push_back(make_result("regimes", "large_hopping_sector_accuracy", worst,
                              20.0 * ratio * ratio));
  }
}

}  // namespace

bool Summary::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::vector<std::string> Summary::failed_names() const {
  std::vector<std::string> names;
  for (const auto& c : checks) {
    if (!c.pass) names.push_back(c.module + "/" + c.name);
  }
  return names;
}

CheckResult check_unitarity(const Eigen::MatrixXcd& w, const std::string& label) {
  const int n = static_cast<int>(w.rows());
  const double err =
      (w * w.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  return make_result("topology", "unitarity(" + label + ")", err, kUnitarityTol);
}

CheckResult check_krawtchouk_parity(const Eigen::MatrixXd& u) {
  const int n = static_cast<int>(u.rows());
  double err = 0.0;
  for (int j = 0; j < n; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    err = std::max(err, std::abs(u(n - 1, j) - sign * u(0, j)));
  }
  return make_result("topology", "krawtchouk_parity", err, kUnitarityTol);
}

CheckResult check_diagonalizes(const Eigen::MatrixXcd& w, const Eigen::MatrixXd& scaled_coupling,
                               const Eigen::VectorXd& expected_diag, const std::string& label) {
  const int n = static_cast<int>(w.rows());
  Eigen::MatrixXcd d = w * scaled_coupling.cast<std::complex<double>>() * w.adjoint();
  for (int j = 0; j < n; ++j) d(j, j) -= expected_diag(j);
  return make_result("topology", "diagonalization(" + label + ")", d.cwiseAbs().maxCoeff(),
                     kDiagTol);
}

bool scope_is_known(const std::string& scope) {
  return scope == "all" || scope == "topology" || scope == "krawtchouk" ||
         scope == "specfun" || scope == "dynamics" || scope == "regimes";
}

Summary run_validation(const std::string& scope, std::uint64_t seed) {
  if (!scope_is_known(scope)) {
    throw std::invalid_argument("unknown validation scope: " + scope);
  }
  std::mt19937_64 rng(seed);
  Summary summary;
  if (scope == "all" || scope == "topology") topology_checks(summary.checks);
  if (scope == "all" || scope == "krawtchouk") krawtchouk_checks(summary.checks);
  if (scope == "all" || scope == "specfun") specfun_checks(summary.checks);
  if (scope == "all" || scope == "dynamics") dynamics_checks(summary.checks, rng);
  if (scope == "all" || scope == "regimes") regimes_checks(summary.checks, rng);
  return summary;
}

}  // namespace jch::validation
