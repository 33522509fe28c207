#pragma once

#include <cmath>
#include <cstdint>

namespace tsl {

// Double-double value hi + lo with |lo| <= ulp(hi)/2, ~106 significant bits.
// Used for phase arguments n*beta where plain doubles would drift past 2^53 ulps.
struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

namespace dd_detail {
inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}
inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace dd_detail

inline dd dd_from(double x) { return {x, 0.0}; }

inline dd dd_add(dd a, dd b) {
  using namespace dd_detail;
  dd s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return quick_two_sum(s.hi, lo);
}

inline dd dd_add_d(dd a, double b) {
  using namespace dd_detail;
  dd s = two_sum(a.hi, b);
  return quick_two_sum(s.hi, s.lo + a.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }
inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
  using namespace dd_detail;
  dd p = two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, lo);
}

inline dd dd_mul_d(dd a, double b) {
  using namespace dd_detail;
  dd p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline dd dd_div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = dd_sub(a, dd_mul_d(b, q1));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul_d(b, q2));
  double q3 = r.hi / b.hi;
  dd q = dd_detail::quick_two_sum(q1, q2);
  return dd_add_d(q, q3);
}

// One Newton step on a double seed already gives the full 106 bits.
inline dd dd_sqrt(double x) {
  double s = std::sqrt(x);
  dd s2 = dd_detail::two_prod(s, s);
  dd diff = dd_add_d(dd_neg(s2), x);
  double corr = diff.hi / (2.0 * s);
  return dd_detail::quick_two_sum(s, corr);
}

// Fractional part in [0,1). Exact as long as the integer part of hi is exactly
// representable (|x| < 2^52 in practice here).
inline dd dd_frac(dd a) {
  double f = std::floor(a.hi);
  dd r = dd_add_d(a, -f);
  while (r.hi < 0.0) r = dd_add_d(r, 1.0);
  while (r.hi >= 1.0) r = dd_add_d(r, -1.0);
  return r;
}

// frac(n * b) for integer n (exact as a double) and dd b.
inline dd dd_frac_mul_u(uint64_t n, dd b) {
  dd prod = dd_mul_d(b, double(n));
  return dd_frac(prod);
}

// Neumaier-compensated accumulator.
struct kahan {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      c += (sum - t) + v;
    else
      c += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

}  // namespace tsl
