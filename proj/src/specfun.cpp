#include "jch/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jch::specfun {

std::complex<double> hyp2f1_terminating(int j, int k, int n_sites,
                                        std::complex<double> z) {
  if (j < 0 || k < 0 || j > n_sites - 1 || k > n_sites - 1) {
    throw std::domain_error("hyp2f1_terminating: need 0 <= j,k <= N-1, got j=" +
                            std::to_string(j) + " k=" + std::to_string(k) +
                            " N=" + std::to_string(n_sites));
  }
  const int m_max = std::min(j, k);
  std::complex<double> sum = 1.0;
  std::complex<double> term = 1.0;
  for (int m = 0; m < m_max; ++m) {
    // term ratio (-j+m)(-k+m) / ((-(N-1)+m)(m+1)) * z
    const double num = static_cast<double>(-j + m) * static_cast<double>(-k + m);
    const double den = static_cast<double>(-(n_sites - 1) + m) * static_cast<double>(m + 1);
    term *= (num / den) * z;
    sum += term;
  }
  return sum;
}

std::vector<double> bessel_j_sequence(int nmax, double x) {
  if (nmax < 0 || nmax > kBesselOrderMax) {
    throw std::range_error("bessel_j_sequence: order out of range: " + std::to_string(nmax));
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("bessel_j_sequence: need finite x >= 0");
  }
  std::vector<double> out(nmax + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }

  // Start the downward recurrence well above both the target order and the
  // turning point n ~ x, so the minimal solution dominates at orders of
  // interest; normalize with J_0 + 2*sum_{k>=1} J_{2k} = 1.
  const double top = std::max(static_cast<double>(nmax), x);
  int m_start = static_cast<int>(top) + 40 + static_cast<int>(std::sqrt(40.0 * top));
  if (m_start % 2) ++m_start;

  constexpr double kBig = 1e250;
  constexpr double kScale = 1e-250;
  double jp = 0.0;     // J_{n+1} (unnormalized)
  double jc = 1e-30;   // J_n
  double even_sum = 0.0;
  for (int n = m_start; n >= 1; --n) {
    const double jm = (2.0 * n / x) * jc - jp;
    jp = jc;
    jc = jm;
    if (n - 1 <= nmax) out[n - 1] = jc;
    if (((n - 1) & 1) == 0) even_sum += (n - 1 == 0) ? jc : 2.0 * jc;
    if (std::abs(jc) > kBig) {
      jc *= kScale;
      jp *= kScale;
      even_sum *= kScale;
      for (double& v : out) v *= kScale;
    }
  }
  for (double& v : out) v /= even_sum;
  return out;
}

double bessel_j(int n, double x) {
  if (std::abs(n) > kBesselOrderMax) {
    throw std::range_error("bessel_j: |n| > " + std::to_string(kBesselOrderMax));
  }
  double sign = 1.0;
  if (n < 0) {
    n = -n;
    if (n & 1) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (n & 1) sign = -sign;
  }
  return sign * bessel_j_sequence(n, x)[n];
}

}  // namespace jch::specfun
