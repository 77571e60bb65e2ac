#pragma once

#include <vector>

namespace jch::krawtchouk {

// Largest admissible 𝔑 for the normalized evaluators.
inline constexpr int kMaxDegreeParam = 64;

// Krawtchouk polynomial K_n(x; p, 𝔑) = 2F1(-x, -n; -𝔑; 1/p), evaluated as the
// terminating sum with Kahan-compensated accumulation.  Exact definition path;
// for large 𝔑 near the center the alternating sum cancels, so quantitative
// work goes through the recurrence-based normalized evaluators below.
// std::domain_error unless 0 <= n,x <= 𝔑 and 0 < p < 1.
double krawtchouk(int n, int x, double p, int big_n);

// Orthonormal Krawtchouk value K~_n(x) = sqrt(w(x)/d_n) K_n(x) with
//   w(x) = C(𝔑,x) p^x (1-p)^(𝔑-x),   d_n = ((1-p)/p)^n / C(𝔑,n),
// evaluated by the symmetric three-term recurrence in the degree
//   [p(𝔑-n) + n(1-p) - x] K~_n =
//       sqrt(p(1-p)(n+1)(𝔑-n)) K~_{n+1} + sqrt(p(1-p)n(𝔑-n+1)) K~_{n-1}
// seeded with K~_0 = sqrt(w(x)) via log-binomials.  At p = 1/2 the sweep is
// two-sided (the mirror identity K~_𝔑(x) = (-1)^x sqrt(w(x)) seeds the
// descending half), which holds the Gram error near machine precision for all
// 𝔑 <= 64.  std::overflow_error for 𝔑 > kMaxDegreeParam.
double normalized_krawtchouk(int n, int x, double p, int big_n);

// All degrees at once: row [K~_0(x), ..., K~_𝔑(x)].
std::vector<double> normalized_krawtchouk_row(int x, double p, int big_n);

// Cross-check path: sqrt(w(x)/d_n) * krawtchouk(n,x,p,𝔑) built from the
// terminating sum and log-weights.  Kept independent of the recurrence so the
// two routes can be compared; unreliable near the center for 𝔑 >~ 30.
double normalized_krawtchouk_direct(int n, int x, double p, int big_n);

// True iff both mirror identities at p = 1/2,
//   K~_j(l) = (-1)^l K~_{𝔑-j}(l)   and   K~_l(j) = (-1)^l K~_l(𝔑-j),
// hold within 1e-12.
bool parity_check(int l, int j, int big_n);

}  // namespace jch::krawtchouk
