#pragma once

// Minimal double-double (~31 significant digits) arithmetic.  The terminating
// hypergeometric form of the Krawtchouk propagator is an alternating sum whose
// terms exceed the result by up to ~2^N; accumulating in double-double keeps
// the closed form bit-comparable with the spectral sum through N = 32.
// Error-free transforms follow Dekker/Knuth; products use FMA.

#include <cmath>

namespace jch::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
  // requires |a| >= |b|
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_from(double a) { return {a, 0.0}; }

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(DD a, double b) {
  const double q0 = a.hi / b;
  DD r = two_prod(q0, -b);
  r = dd_add(a, r);
  const double q1 = (r.hi + r.lo) / b;
  return quick_two_sum(q0, q1);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

// Complex value with double-double components.
struct DDC {
  DD re, im;
};

inline DDC ddc_from(double re, double im) { return {dd_from(re), dd_from(im)}; }

inline DDC ddc_add(DDC a, DDC b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline DDC ddc_mul(DDC a, DDC b) {
  return {dd_add(dd_mul(a.re, b.re), dd_neg(dd_mul(a.im, b.im))),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline DDC ddc_mul(DDC a, DD s) { return {dd_mul(a.re, s), dd_mul(a.im, s)}; }

// w^p for integer p >= 0 by binary exponentiation; w^0 = 1 including w = 0.
inline DDC ddc_pow(DDC w, int p) {
  DDC r = ddc_from(1.0, 0.0);
  while (p > 0) {
    if (p & 1) r = ddc_mul(r, w);
    w = ddc_mul(w, w);
    p >>= 1;
  }
  return r;
}

}  // namespace jch::detail
