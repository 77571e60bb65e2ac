#include "jch/krawtchouk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jch::krawtchouk {

namespace {

void check_args(int n, int x, double p, int big_n) {
  if (big_n < 0) throw std::domain_error("krawtchouk: need big_n >= 0");
  if (n < 0 || n > big_n || x < 0 || x > big_n) {
    throw std::domain_error("krawtchouk: need 0 <= n,x <= big_n, got n=" +
                            std::to_string(n) + " x=" + std::to_string(x) +
                            " big_n=" + std::to_string(big_n));
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("krawtchouk: need 0 < p < 1");
  }
}

void check_stable_bound(int big_n) {
  if (big_n > kMaxDegreeParam) {
    throw std::overflow_error("krawtchouk: big_n=" + std::to_string(big_n) +
                              " exceeds the stable-evaluation bound " +
                              std::to_string(kMaxDegreeParam));
  }
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// sqrt of the binomial weight w(x) = C(𝔑,x) p^x (1-p)^(𝔑-x)
double sqrt_weight(int x, double p, int big_n) {
  const double lw =
      log_binomial(big_n, x) + x * std::log(p) + (big_n - x) * std::log1p(-p);
  return std::exp(0.5 * lw);
}

}  // namespace

double krawtchouk(int n, int x, double p, int big_n) {
  check_args(n, x, p, big_n);
  const int m_max = std::min(n, x);
  const double inv_p = 1.0 / p;
  double sum = 1.0;
  double comp = 0.0;  // Kahan carry
  double term = 1.0;
  for (int m = 0; m < m_max; ++m) {
    const double num = static_cast<double>(-x + m) * static_cast<double>(-n + m);
    const double den = static_cast<double>(-big_n + m) * static_cast<double>(m + 1);
    term *= (num / den) * inv_p;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::vector<double> normalized_krawtchouk_row(int x, double p, int big_n) {
  check_args(0, x, p, big_n);
  check_stable_bound(big_n);
  std::vector<double> row(big_n + 1, 0.0);
  const double seed = sqrt_weight(x, p, big_n);
  row[0] = seed;
  if (big_n == 0) return row;

  const double pq = p * (1.0 - p);
  auto step_up = [&](int n, double cur, double prev) {
    const double mid = p * (big_n - n) + n * (1.0 - p) - x;
    const double c_up = std::sqrt(pq * (n + 1.0) * (big_n - n));
    const double c_dn = n > 0 ? std::sqrt(pq * n * (big_n - n + 1.0)) : 0.0;
    return (mid * cur - c_dn * prev) / c_up;
  };

  if (p == 0.5) {
    // ascend to the center, descend from the mirror-symmetric exact seed
    const int n_half = big_n / 2;
    double prev = 0.0;
    for (int n = 0; n < n_half; ++n) {
      const double next = step_up(n, row[n], prev);
      prev = row[n];
      row[n + 1] = next;
    }
    row[big_n] = (x % 2 == 0) ? seed : -seed;
    double above = 0.0;
    for (int n = big_n; n > n_half + 1; --n) {
      const double mid = 0.5 * big_n - x;
      const double c_up = n < big_n ? 0.5 * std::sqrt((n + 1.0) * (big_n - n)) : 0.0;
      const double c_dn = 0.5 * std::sqrt(n * (big_n - n + 1.0));
      const double below = (mid * row[n] - c_up * above) / c_dn;
      above = row[n];
      row[n - 1] = below;
    }
  } else {
    double prev = 0.0;
    for (int n = 0; n < big_n; ++n) {
      const double next = step_up(n, row[n], prev);
      prev = row[n];
      row[n + 1] = next;
    }
  }
  return row;
}

double normalized_krawtchouk(int n, int x, double p, int big_n) {
  check_args(n, x, p, big_n);
  check_stable_bound(big_n);
  return normalized_krawtchouk_row(x, p, big_n)[n];
}

double normalized_krawtchouk_direct(int n, int x, double p, int big_n) {
  check_args(n, x, p, big_n);
  check_stable_bound(big_n);
  // sqrt(w(x)/d_n) = sqrt(C(𝔑,x) C(𝔑,n)) p^{(x+n)/2} (1-p)^{(𝔑-x-n)/2}
  const double lg = 0.5 * (log_binomial(big_n, x) + log_binomial(big_n, n)) +
                    0.5 * (x + n) * std::log(p) +
                    0.5 * (big_n - x - n) * std::log1p(-p);
  return std::exp(lg) * krawtchouk(n, x, p, big_n);
}

bool parity_check(int l, int j, int big_n) {
  check_args(j, l, 0.5, big_n);
  check_stable_bound(big_n);
  constexpr double kTol = 1e-12;
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  const double lhs1 = normalized_krawtchouk(j, l, 0.5, big_n);
  const double rhs1 = sign * normalized_krawtchouk(big_n - j, l, 0.5, big_n);
  const double lhs2 = normalized_krawtchouk(l, j, 0.5, big_n);
  const double rhs2 = sign * normalized_krawtchouk(l, big_n - j, 0.5, big_n);
  return std::abs(lhs1 - rhs1) < kTol && std::abs(lhs2 - rhs2) < kTol;
}

}  // namespace jch::krawtchouk
