#pragma once

#include <complex>
#include <vector>

namespace jch::specfun {

// Largest Bessel order served by bessel_j / bessel_j_sequence.
inline constexpr int kBesselOrderMax = 200;

// Terminating Gauss hypergeometric sum
//   2F1(-j, -k; -(N-1); z) = sum_{m=0}^{min(j,k)} [(-j)_m (-k)_m / ((-(N-1))_m m!)] z^m.
// The lower parameter is a negative integer; the series stops at m = min(j,k)
// strictly before the denominator Pochhammer vanishes, so no gamma functions
// of nonpositive integers are ever formed.
// Requires 0 <= j,k <= N-1 (std::domain_error otherwise).
std::complex<double> hyp2f1_terminating(int j, int k, int n_sites,
                                        std::complex<double> z);

// Bessel function of the first kind, integer order.
// Backward (Miller) recurrence normalized with J_0 + 2*sum J_{2k} = 1.
// Negative order and negative argument resolve through J_{-n} = (-1)^n J_n
// and J_n(-x) = (-1)^n J_n(x).  std::range_error for |n| > kBesselOrderMax.
double bessel_j(int n, double x);

// J_0(x) .. J_nmax(x) in one downward pass; requires x >= 0 and
// 0 <= nmax <= kBesselOrderMax.
std::vector<double> bessel_j_sequence(int nmax, double x);

}  // namespace jch::specfun
