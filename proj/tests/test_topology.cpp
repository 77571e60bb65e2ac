#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "jch/topology.hpp"

using namespace jch;
using std::complex;

namespace {

ChainParams make(int n, Topology topo, double eps = 1.3, double omega = 0.4,
                 double g = 0.2, double kappa = 0.9) {
  ChainParams p;
  p.n_cavities = n;
  p.topology = topo;
  p.atom_freq = eps;
  p.cavity_freq = omega;
  p.atom_photon_coupling = g;
  p.hop_strength = kappa;
  return p;
}

}  // namespace

TEST_CASE("cyclic adjacency at N=3: wrap edge coincides with a nearest-neighbor edge") {
  const auto c = coupling_matrix(make(3, Topology::CyclicUniform));
  for (int j = 0; j < 3; ++j) {
    CHECK(c(j, j) == 0.0);
    for (int k = 0; k < 3; ++k) {
      if (j != k) CHECK(c(j, k) == 1.0);
    }
  }
}

TEST_CASE("cyclic adjacency at N=2 keeps a single edge") {
  const auto c = coupling_matrix(make(2, Topology::CyclicUniform));
  CHECK(c(0, 1) == 1.0);
  CHECK(c(1, 0) == 1.0);
  CHECK(c(0, 0) == 0.0);
  CHECK(c(1, 1) == 0.0);
}

TEST_CASE("parabolic adjacency entries") {
  const auto c3 = coupling_matrix(make(3, Topology::LinearParabolic));
  CHECK(c3(1, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c3(2, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(c3(2, 0) == 0.0);
  CHECK(c3 == c3.transpose().eval());

  const auto c2 = coupling_matrix(make(2, Topology::LinearParabolic));
  CHECK(c2(0, 1) == 1.0);
  CHECK(c2(1, 0) == 1.0);
}

TEST_CASE("dft matrix small cases") {
  CHECK(dft_matrix(1)(0, 0) == complex<double>(1.0, 0.0));

  const auto u2 = dft_matrix(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u2(0, 0) - complex<double>(s, 0)) < 1e-15);
  CHECK(std::abs(u2(1, 1) - complex<double>(-s, 0)) < 1e-15);

  // N=4: entry (j,k) = i^{jk}/2
  const auto u4 = dft_matrix(4);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      complex<double> expect(0.5, 0.0);
      for (int m = 0; m < (j * k) % 4; ++m) expect *= complex<double>(0.0, 1.0);
      CHECK(std::abs(u4(j, k) - expect) < 1e-15);
    }
  }
  CHECK((u4 * u4.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <
        kUnitarityTol);
}

TEST_CASE("dft is unitary and mutually unbiased against the site basis") {
  for (int n : {2, 3, 7, 16, 45, 64}) {
    const auto u = dft_matrix(n);
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <
          kUnitarityTol);
    const double expect = 1.0 / std::sqrt(static_cast<double>(n));
    CHECK((u.cwiseAbs().array() - expect).abs().maxCoeff() < kUnitarityTol);
  }
}

TEST_CASE("krawtchouk basis small cases and structure") {
  const auto u2 = krawtchouk_basis(2);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u2(0, 0) - s) < 1e-15);
  CHECK(std::abs(u2(0, 1) - s) < 1e-15);
  CHECK(std::abs(u2(1, 0) - s) < 1e-15);
  CHECK(std::abs(u2(1, 1) + s) < 1e-15);

  const auto u3 = krawtchouk_basis(3);
  CHECK(std::abs(u3(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(u3(0, 1) - s) < 1e-15);
  CHECK(std::abs(u3(0, 2) - 0.5) < 1e-15);

  for (int n : {2, 3, 9, 21, 64}) {
    const auto u = krawtchouk_basis(n);
    CHECK((u * u.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <kDiagTol);
    CHECK((u - u.transpose()).cwiseAbs().maxCoeff() < kUnitarityTol);
    for (int j = 0; j < n; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(u(n - 1, j) - sign * u(0, j)) < kUnitarityTol);
    }
  }
  CHECK_THROWS_AS((void)krawtchouk_basis(66), std::overflow_error);
}

TEST_CASE("krawtchouk basis diagonalizes the parabolic adjacency") {
  for (int n : {2, 5, 12, 33}) {
    const auto u = krawtchouk_basis(n);
    const auto c = coupling_matrix(make(n, Topology::LinearParabolic));
    const Eigen::MatrixXd d = u * c * u.transpose();
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double expect = (j == k) ? static_cast<double>(n - 1 - 2 * j) : 0.0;
        CHECK(std::abs(d(j, k) - expect) < kDiagTol);
      }
    }
  }
}

TEST_CASE("mode frequencies") {
  // cyclic N=4, j=1 sits at the band center
  const auto p4 = make(4, Topology::CyclicUniform);
  const auto f4 = mode_frequencies(p4);
  CHECK(f4.mode_freqs(1) == doctest::Approx(p4.cavity_freq).epsilon(1e-15));
  CHECK(f4.mode_freqs(0) == doctest::Approx(p4.cavity_freq + 2.0 * p4.hop_strength));
  CHECK(f4.mode_freqs(2) == doctest::Approx(p4.cavity_freq - 2.0 * p4.hop_strength));

  // parabolic N=3 ladder
  const auto p3 = make(3, Topology::LinearParabolic);
  const auto f3 = mode_frequencies(p3);
  CHECK(f3.mode_freqs(0) == doctest::Approx(p3.cavity_freq + 2.0 * p3.hop_strength));
  CHECK(f3.mode_freqs(1) == doctest::Approx(p3.cavity_freq));
  CHECK(f3.mode_freqs(2) == doctest::Approx(p3.cavity_freq - 2.0 * p3.hop_strength));

  // kappa = 0 collapses the band
  auto flat = make(5, Topology::CyclicUniform);
  flat.hop_strength = 0.0;
  const auto ff = mode_frequencies(flat);
  for (int j = 0; j < 5; ++j) {
    CHECK(ff.mode_freqs(j) == flat.cavity_freq);
    CHECK(ff.detunings(j) == flat.detuning());
  }

  // detunings are eps - Omega_j, and the cyclic band is exactly degenerate
  for (int n : {3, 4, 5, 8, 17}) {
    const auto p = make(n, Topology::CyclicUniform);
    const auto f = mode_frequencies(p);
    for (int j = 0; j < n; ++j) CHECK(f.detunings(j) == p.atom_freq - f.mode_freqs(j));
    for (int j = 1; 2 * j < n; ++j) CHECK(f.mode_freqs(j) == f.mode_freqs(n - j));
  }
}

TEST_CASE("mode basis diagonalizes kappa*C with diagonal Omega_j - Omega") {
  for (Topology topo : {Topology::CyclicUniform, Topology::LinearParabolic}) {
    for (int n : {2, 3, 6, 16}) {
      const auto p = make(n, topo, 2.0, -0.3, 0.1, 1.7);
      const auto basis = mode_basis(p);
      CHECK((basis.transform * basis.transform.adjoint() -
             Eigen::MatrixXcd::Identity(n, n))
                .cwiseAbs()
                .maxCoeff() < kUnitarityTol);
      const Eigen::MatrixXcd d =
          basis.transform * (p.hop_strength * coupling_matrix(p)).cast<complex<double>>() *
          basis.transform.adjoint();
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          const complex<double> expect =
              (j == k) ? complex<double>(basis.mode_freqs(j) - p.cavity_freq, 0.0) : 0.0;
          CHECK(std::abs(d(j, k) - expect) < kDiagTol);
        }
      }
      if (topo == Topology::LinearParabolic) {
        CHECK(basis.transform.imag().cwiseAbs().maxCoeff() == 0.0);
        CHECK((basis.transform - basis.transform.transpose()).cwiseAbs().maxCoeff() <
              kUnitarityTol);
      }
    }
  }
}

TEST_CASE("chain params validation") {
  CHECK_THROWS_AS(coupling_matrix(make(1, Topology::CyclicUniform)), std::invalid_argument);
  auto bad = make(4, Topology::CyclicUniform);
  bad.atom_freq = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(make(4, Topology::CyclicUniform, 1.5, 0.5).detuning() == 1.0);
}
