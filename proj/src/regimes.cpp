#include "jch/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dd_real.hpp"
#include "jch/krawtchouk.hpp"
#include "jch/specfun.hpp"
#include "jch/topology.hpp"

namespace jch::regimes {

namespace {

using std::complex;
constexpr double kPi = std::numbers::pi;

void require_topology(const ChainParams& params, Topology expected, const char* what) {
  if (params.topology != expected) {
    throw TopologyError(std::string(what) + ": wrong chain topology");
  }
}

void require_nonsingular(const Eigen::VectorXd& detunings) {
  for (int j = 0; j < detunings.size(); ++j) {
    if (std::abs(detunings(j)) < kDetuningFloor) {
      throw SingularDetuningError(j, std::abs(detunings(j)));
    }
  }
}

bool mode_is_nondegenerate(int l, int n) { return l == ((n - l) % n + n) % n; }

void require_mode_index(int l, int n) {
  if (l < 0 || l >= n) throw std::out_of_range("resonant mode index out of range");
}

double require_positive_coupling(const ChainParams& params) {
  const double g = params.atom_photon_coupling;
  if (g <= 0.0) {
    throw std::invalid_argument("resonance kernel: needs atom_photon_coupling > 0");
  }
  return g;
}

// circulant fill from first column
Eigen::MatrixXcd circulant(const Eigen::VectorXcd& col) {
  const int n = static_cast<int>(col.size());
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) m(j, k) = col(((j - k) % n + n) % n);
  }
  return m;
}

}  // namespace

ValidityRatio ValidityReport::worst() const {
  ValidityRatio w{"none", 0.0};
  for (const auto& r : ratios) {
    if (r.value > w.value) w = r;
  }
  return w;
}

std::string regime_name(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Exact: return "exact";
    case RegimeKind::LargeHopping: return "large_hopping";
    case RegimeKind::LargeDetuning: return "large_detuning";
    case RegimeKind::ResonanceNondegenerate: return "resonance_nondegenerate";
    case RegimeKind::ResonanceDegenerate: return "resonance_degenerate";
    case RegimeKind::ParabolicFull: return "parabolic_full";
    case RegimeKind::ParabolicDispersionFree: return "parabolic_dispersion_free";
    case RegimeKind::ParabolicLargeDetuning: return "parabolic_large_detuning";
    case RegimeKind::ParabolicResonance: return "parabolic_resonance";
  }
  return "unknown";
}

ValidityReport regime_validity(const RegimeSpec& spec, const ChainParams& params) {
  params.validate();
  const auto [freqs, det] = mode_frequencies(params);
  const double g = params.atom_photon_coupling;
  const double delta = params.detuning();
  const double kappa = params.hop_strength;
  const int n = params.n_cavities;

  auto min_abs_detuning_except = [&](int skip_a, int skip_b) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j == skip_a || j == skip_b) continue;
      m = std::min(m, std::abs(det(j)));
    }
    return m;
  };
  auto ratio_or_inf = [](double num, double den) {
    return den == 0.0 ? std::numeric_limits<double>::infinity() : std::abs(num / den);
  };

  ValidityReport report;
  switch (spec.kind) {
    case RegimeKind::Exact:
      break;
    case RegimeKind::LargeHopping:
    case RegimeKind::ParabolicFull:
      report.ratios.push_back({"delta/kappa", ratio_or_inf(delta, kappa)});
      report.ratios.push_back({"g/kappa", ratio_or_inf(g, kappa)});
      report.ratios.push_back({"g/Delta_min", ratio_or_inf(g, min_abs_detuning_except(-1, -1))});
      break;
    case RegimeKind::LargeDetuning:
    case RegimeKind::ParabolicLargeDetuning:
      report.ratios.push_back({"kappa/delta", ratio_or_inf(kappa, delta)});
      report.ratios.push_back({"g/delta", ratio_or_inf(g, delta)});
      break;
    case RegimeKind::ResonanceNondegenerate:
    case RegimeKind::ResonanceDegenerate:
    case RegimeKind::ParabolicResonance: {
      require_mode_index(spec.resonant_mode, n);
      const int l = spec.resonant_mode;
      const int partner =
          (spec.kind == RegimeKind::ResonanceDegenerate) ? ((n - l) % n + n) % n : l;
      report.ratios.push_back({"Delta_l/g", ratio_or_inf(det(l), g)});
      report.ratios.push_back(
          {"g/Delta_offres", ratio_or_inf(g, min_abs_detuning_except(l, partner))});
      break;
    }
    case RegimeKind::ParabolicDispersionFree:
      report.ratios.push_back({"g/kappa", ratio_or_inf(g, kappa)});
      report.ratios.push_back({"delta/kappa", ratio_or_inf(delta, kappa)});
      break;
  }
  return report;
}

KernelMatrix kernel_large_hopping_cyclic(const ChainParams& params, double t) {
  params.validate();
  require_topology(params, Topology::CyclicUniform, "kernel_large_hopping_cyclic");
  const auto [freqs, det] = mode_frequencies(params);
  require_nonsingular(det);
  const int n = params.n_cavities;
  const double g = params.atom_photon_coupling;
  const double eps = params.atom_freq;

  Eigen::VectorXcd col_a = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd col_b = Eigen::VectorXcd::Zero(n);
  for (int d = 0; d < n; ++d) {
    complex<double> sa = 0.0, sb = 0.0;
    for (int l = 0; l < n; ++l) {
      const double geom = 2.0 * kPi * ((d * l) % n) / n;
      const double stark = g * g / det(l);
      sa += std::polar(1.0 / n, -(geom + (freqs(l) - stark) * t));
      sb += std::polar(1.0 / n, -(geom + (eps + stark) * t));
    }
    col_a(d) = sa;
    col_b(d) = sb;
  }
  return {circulant(col_a), circulant(col_b), t};
}

Eigen::VectorXcd kernel_large_detuning_cyclic(const ChainParams& params, double t) {
  params.validate();
  require_topology(params, Topology::CyclicUniform, "kernel_large_detuning_cyclic");
  const int n = params.n_cavities;
  const double g = params.atom_photon_coupling;
  const double delta = params.detuning();
  const double kappa = params.hop_strength;
  if (delta == 0.0) throw SingularDetuningError(0, 0.0);

  const double x = 2.0 * kappa * (1.0 - g * g / (delta * delta)) * t;
  const double ax = std::abs(x);
  const auto bessel = specfun::bessel_j_sequence(specfun::kBesselOrderMax, ax);
  // J_m for signed order and signed argument
  auto j_at = [&](long long m) {
    double v = bessel[static_cast<int>(std::llabs(m))];
    if (m < 0 && (m & 1)) v = -v;
    if (x < 0.0 && (std::llabs(m) & 1)) v = -v;
    return v;
  };
  constexpr complex<double> kPowMinusI[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(n);
  constexpr double kShellTol = 1e-14;
  for (int j = 0; j < n; ++j) {
    complex<double> sum = kPowMinusI[j % 4] * j_at(j);  // nu = 0
    int quiet_shells = 0;
    bool converged = false;
    for (int nu = 1;; ++nu) {
      const long long up = j + static_cast<long long>(nu) * n;
      const long long dn = j - static_cast<long long>(nu) * n;
      if (std::max(std::llabs(up), std::llabs(dn)) > specfun::kBesselOrderMax) {
        if (quiet_shells >= 1) converged = true;  // tail already negligible
        break;
      }
      const complex<double> shell = kPowMinusI[((up % 4) + 4) % 4] * j_at(up) +
                                    kPowMinusI[((dn % 4) + 4) % 4] * j_at(dn);
      sum += shell;
      if (std::abs(shell) < kShellTol) {
        if (++quiet_shells >= 2) {
          converged = true;
          break;
        }
      } else {
        quiet_shells = 0;
      }
    }
    if (!converged) {
      throw std::runtime_error(
          "kernel_large_detuning_cyclic: Bessel tail not converged within order bound "
          "(argument too large)");
    }
    amps(j) = std::polar(1.0, -(params.cavity_freq - g * g / delta) * t) * sum;
  }
  return amps;
}

Eigen::VectorXcd green_propagator(const ChainParams& params) {
  params.validate();
  require_topology(params, Topology::CyclicUniform, "green_propagator");
  const auto [freqs, det] = mode_frequencies(params);
  require_nonsingular(det);
  const int n = params.n_cavities;
  Eigen::VectorXcd g_vec(n);
  for (int j = 0; j < n; ++j) {
    complex<double> s = 0.0;
    for (int k = 0; k < n; ++k) {
      s += std::polar(1.0, -2.0 * kPi * ((j * k) % n) / n) / (n * det(k));
    }
    g_vec(j) = s;
  }
  return g_vec;
}

namespace {

// Shared structure of the three resonance kernels: off-resonant modes keep the
// bare atomic phase e^{-i eps t}; the resonant projection rotates at
// nu = g + Delta_l^2/(8g) under the prefactor e^{-i(eps - Delta_l/2) t}.
struct ResonanceFactors {
  complex<double> bare;       // e^{-i eps t}
  complex<double> pref_sin;   // -i pref sin(nu t)
  complex<double> pref_cos;   // pref cos(nu t)
};

ResonanceFactors resonance_factors(double eps, double delta_l, double g, double t) {
  const double nu = g + delta_l * delta_l / (8.0 * g);
  const complex<double> pref = std::polar(1.0, -(eps - 0.5 * delta_l) * t);
  return {std::polar(1.0, -eps * t), complex<double>(0.0, -1.0) * pref * std::sin(nu * t),
          pref * std::cos(nu * t)};
}

}  // namespace

SectorAmplitudes resonance_cyclic_nondegenerate(const ChainParams& params, int l, double t,
                                                const Eigen::VectorXcd& atom_init) {
  params.validate();
  require_topology(params, Topology::CyclicUniform, "resonance_cyclic_nondegenerate");
  const int n = params.n_cavities;
  require_mode_index(l, n);
  if (atom_init.size() != n) throw std::invalid_argument("atom_init size mismatch");
  if (!mode_is_nondegenerate(l, n)) {
    throw ModeClassError("resonance_cyclic_nondegenerate: mode " + std::to_string(l) +
                         " is degenerate (pairs with " + std::to_string((n - l) % n) + ")");
  }
  const double g = require_positive_coupling(params);
  const auto [freqs, det] = mode_frequencies(params);
  const auto f = resonance_factors(params.atom_freq, det(l), g, t);

  // S_j = sum_k w^{-l(j-k)} b_k(0) = w^{-lj} sum_k w^{lk} b_k(0)
  complex<double> s = 0.0;
  for (int k = 0; k < n; ++k) {
    s += std::polar(1.0, 2.0 * kPi * ((l * k) % n) / n) * atom_init(k);
  }
  SectorAmplitudes out{Eigen::VectorXcd(n), Eigen::VectorXcd(n)};
  for (int j = 0; j < n; ++j) {
    const complex<double> proj = std::polar(1.0, -2.0 * kPi * ((l * j) % n) / n) * s;
    out.photon(j) = f.pref_sin * proj / static_cast<double>(n);
    out.atom(j) = f.bare * (atom_init(j) - proj / static_cast<double>(n)) +
                  f.pref_cos * proj / static_cast<double>(n);
  }
  return out;
}

SectorAmplitudes resonance_cyclic_degenerate(const ChainParams& params, int l, double t,
                                             const Eigen::VectorXcd& atom_init) {
  params.validate();
  require_topology(params, Topology::CyclicUniform, "resonance_cyclic_degenerate");
  const int n = params.n_cavities;
  require_mode_index(l, n);
  if (atom_init.size() != n) throw std::invalid_argument("atom_init size mismatch");
  if (mode_is_nondegenerate(l, n)) {
    throw ModeClassError("resonance_cyclic_degenerate: mode " + std::to_string(l) +
                         " is nondegenerate");
  }
  const double g = require_positive_coupling(params);
  const auto [freqs, det] = mode_frequencies(params);
  const auto f = resonance_factors(params.atom_freq, det(l), g, t);

  // C_j = sum_k cos(2 pi l (j-k)/N) b_k(0), from the two conjugate mode sums
  complex<double> s_plus = 0.0, s_minus = 0.0;
  for (int k = 0; k < n; ++k) {
    const double ang = 2.0 * kPi * ((l * k) % n) / n;
    s_plus += std::polar(1.0, ang) * atom_init(k);
    s_minus += std::polar(1.0, -ang) * atom_init(k);
  }
  SectorAmplitudes out{Eigen::VectorXcd(n), Eigen::VectorXcd(n)};
  const double inv_n = 1.0 / n;
  for (int j = 0; j < n; ++j) {
    const double ang = 2.0 * kPi * ((l * j) % n) / n;
    const complex<double> proj =
        0.5 * (std::polar(1.0, -ang) * s_plus + std::polar(1.0, ang) * s_minus);
    out.photon(j) = 2.0 * f.pref_sin * proj * inv_n;
    out.atom(j) = f.bare * (atom_init(j) - 2.0 * proj * inv_n) +
                  2.0 * f.pref_cos * proj * inv_n;
  }
  return out;
}

SectorAmplitudes resonance_parabolic(const ChainParams& params, int l, double t,
                                     const Eigen::VectorXcd& atom_init) {
  params.validate();
  require_topology(params, Topology::LinearParabolic, "resonance_parabolic");
  const int n = params.n_cavities;
  require_mode_index(l, n);
  if (atom_init.size() != n) throw std::invalid_argument("atom_init size mismatch");
  const double g = require_positive_coupling(params);
  const auto [freqs, det] = mode_frequencies(params);
  const auto f = resonance_factors(params.atom_freq, det(l), g, t);
  const Eigen::MatrixXd u = krawtchouk_basis(n);

  complex<double> s = 0.0;
  for (int k = 0; k < n; ++k) s += u(k, l) * atom_init(k);
  SectorAmplitudes out{Eigen::VectorXcd(n), Eigen::VectorXcd(n)};
  for (int j = 0; j < n; ++j) {
    const complex<double> proj = u(j, l) * s;
    out.photon(j) = f.pref_sin * proj;
    out.atom(j) = f.bare * (atom_init(j) - proj) + f.pref_cos * proj;
  }
  return out;
}

KernelMatrix parabolic_kernel(const ChainParams& params, double t, ParabolicKernelMode mode) {
  params.validate();
  require_topology(params, Topology::LinearParabolic, "parabolic_kernel");
  const int n = params.n_cavities;
  const double g = params.atom_photon_coupling;
  const double eps = params.atom_freq;
  const double omega = params.cavity_freq;
  const double kappa = params.hop_strength;
  const double delta = params.detuning();
  const auto [freqs, det] = mode_frequencies(params);

  Eigen::VectorXcd phase_a(n), phase_b(n);
  switch (mode) {
    case ParabolicKernelMode::Full:
      require_nonsingular(det);
      for (int l = 0; l < n; ++l) {
        const double stark = g * g / det(l);
        phase_a(l) = std::polar(1.0, -(freqs(l) - stark) * t);
        phase_b(l) = std::polar(1.0, -(eps + stark) * t);
      }
      break;
    case ParabolicKernelMode::DispersionFree:
      for (int l = 0; l < n; ++l) {
        phase_a(l) = std::polar(1.0, -freqs(l) * t);
        phase_b(l) = std::polar(1.0, -eps * t);
      }
      break;
    case ParabolicKernelMode::LargeDetuning: {
      if (std::abs(delta) < kDetuningFloor) throw SingularDetuningError(0, std::abs(delta));
      // 1/Delta^_l expanded to first order in kappa/delta
      const double omega_p = omega - g * g / delta;
      const double kappa_p = kappa * (1.0 - (g / delta) * (g / delta));
      const double eps_p = eps + g * g / delta;
      const double kappa_b = kappa * (g / delta) * (g / delta);
      for (int l = 0; l < n; ++l) {
        phase_a(l) = std::polar(1.0, -(omega_p + kappa_p * (n - 1 - 2 * l)) * t);
        phase_b(l) = std::polar(1.0, -(eps_p + kappa_b * (n - 1 - 2 * l)) * t);
      }
      break;
    }
  }

  const Eigen::MatrixXd u = krawtchouk_basis(n);
  KernelMatrix out{Eigen::MatrixXcd(n, n), Eigen::MatrixXcd(n, n), t};
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      complex<double> sa = 0.0, sb = 0.0;
      for (int l = 0; l < n; ++l) {
        const double w = u(j, l) * u(k, l);
        sa += w * phase_a(l);
        sb += w * phase_b(l);
      }
      out.k_a(j, k) = sa;
      out.k_b(j, k) = sb;
    }
  }
  return out;
}

std::complex<double> parabolic_closed_form_f(int j, int k, int n, std::complex<double> z) {
  if (n < 2) throw std::invalid_argument("parabolic_closed_form_f: need N >= 2");
  if (j < 0 || k < 0 || j > n - 1 || k > n - 1) {
    throw std::domain_error("parabolic_closed_form_f: site index out of range");
  }
  // mirror reduction f_{j,k}(z) = f_{N-1-j,k}(-z) until j+k <= N-1, so the
  // (1+z) exponent stays nonnegative
  if (j + k > n - 1) {
    if (j >= k) {
      j = n - 1 - j;
    } else {
      k = n - 1 - k;
    }
    z = -z;
  }
  using namespace jch::detail;
  const int m_max = std::min(j, k);
  const DDC one_minus = ddc_from(1.0 - z.real(), -z.imag());
  const DDC one_plus = ddc_from(1.0 + z.real(), z.imag());
  const DDC minus_4z = ddc_from(-4.0 * z.real(), -4.0 * z.imag());

  const DDC tail = ddc_pow(one_plus, n - 1 - j - k);
  DDC total = ddc_from(0.0, 0.0);
  DD coeff = dd_from(1.0);  // (-j)_m (-k)_m / ((-(N-1))_m m!)
  for (int m = 0; m <= m_max; ++m) {
    DDC term = ddc_mul(ddc_pow(minus_4z, m), ddc_pow(one_minus, j + k - 2 * m));
    term = ddc_mul(term, tail);
    term = ddc_mul(term, coeff);
    total = ddc_add(total, term);
    if (m < m_max) {
      const double num = static_cast<double>(-j + m) * static_cast<double>(-k + m);
      const double den = static_cast<double>(-(n - 1) + m) * static_cast<double>(m + 1);
      coeff = dd_div(dd_mul(coeff, num), den);
    }
  }
  // sqrt(C(N-1,j) C(N-1,k)) / 2^(N-1)
  const auto lg = [](double v) { return std::lgamma(v); };
  const double log_pref = 0.5 * (lg(n) - lg(j + 1.0) - lg(n - j) + lg(n) - lg(k + 1.0) -
                                 lg(n - k)) -
                          (n - 1) * std::numbers::ln2;
  const double pref = std::exp(log_pref);
  return {total.re.hi * pref + total.re.lo * pref, total.im.hi * pref + total.im.lo * pref};
}

TransferBoundReport parabolic_transfer_bound_check(const ChainParams& params,
                                                   std::span<const double> t_grid) {
  params.validate();
  require_topology(params, Topology::LinearParabolic, "parabolic_transfer_bound_check");
  const int n = params.n_cavities;
  const auto [freqs, det] = mode_frequencies(params);
  require_nonsingular(det);
  const double g = params.atom_photon_coupling;
  const Eigen::MatrixXd u = krawtchouk_basis(n);

  Eigen::VectorXd weight(n), rate(n);
  for (int l = 0; l < n; ++l) {
    weight(l) = u(n - 1, l) * u(0, l);
    rate(l) = freqs(l) - g * g / det(l);
  }
  TransferBoundReport report;
  for (double t : t_grid) {
    complex<double> amp = 0.0;
    for (int l = 0; l < n; ++l) amp += weight(l) * std::polar(1.0, -rate(l) * t);
    const double mag = std::abs(amp);
    if (mag > report.max_fidelity) {
      report.max_fidelity = mag;
      report.argmax_time = t;
    }
  }
  report.bound_ok = report.max_fidelity <= 1.0 + 1e-12;
  return report;
}

FidelityCurve transfer_fidelity(const Propagator& propagate, int source, int target,
                                Channel channel, std::span<const double> t_grid, int n_sites) {
  if (source < 0 || source >= n_sites || target < 0 || target >= n_sites) {
    throw std::out_of_range("transfer_fidelity: site out of range");
  }
  const SingleExcitationState init =
      channel == Channel::Photon ? SingleExcitationState::photon_excitation_at(n_sites, source)
                                 : SingleExcitationState::atom_excitation_at(n_sites, source);
  FidelityCurve curve;
  curve.times.assign(t_grid.begin(), t_grid.end());
  curve.fidelity.resize(t_grid.size());
  for (size_t i = 0; i < t_grid.size(); ++i) {
    const SingleExcitationState evolved = propagate(init, t_grid[i]);
    const double mag = channel == Channel::Photon ? std::abs(evolved.photon(target))
                                                  : std::abs(evolved.atom(target));
    curve.fidelity[i] = mag;
    if (i == 0 || mag > curve.peak) {
      curve.peak = mag;
      curve.peak_time = t_grid[i];
    }
  }
  return curve;
}

}  // namespace jch::regimes
