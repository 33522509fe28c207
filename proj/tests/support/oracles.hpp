#pragma once

// Test-side oracles, independent of the library implementation paths they
// check: trial division, direct unit sums, a sine-integral evaluation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<std::pair<uint64_t, uint32_t>> trial_factor(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> f;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      uint32_t e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      f.push_back({d, e});
    }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int moebius(uint64_t n) {
  int m = 1;
  for (auto [p, e] : trial_factor(n)) {
    (void)p;
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

inline uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto [p, e] : trial_factor(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

inline uint32_t omega(uint64_t n) { return uint32_t(trial_factor(n).size()); }

inline uint64_t tau(uint64_t n) {
  uint64_t c = 0;
  for (uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) c += (d * d == n) ? 1 : 2;
  return c;
}

inline uint64_t tau3(uint64_t n) {
  // ordered triples d1 d2 d3 = n: sum over d1 | n of tau(n/d1)
  uint64_t c = 0;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    c += tau(n / d);
    if (d * d != n) c += tau(d);
  }
  return c;
}

inline uint64_t smallest_prime_factor(uint64_t n) {
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// sum over units b mod q of e(bn/q), the direct definition of c_q(n)
inline double ramanujan_direct(uint64_t q, int64_t n) {
  double s = 0.0;
  for (uint64_t b = 1; b <= q; ++b) {
    if (std::gcd(b, q) != 1) continue;
    s += std::cos(2.0 * std::numbers::pi * double((__int128(b) * n) % int64_t(q)) / double(q));
  }
  return s;
}

// Si(x) = int_0^x sin t / t dt: power series below 20, asymptotic expansion
// with auxiliary f, g above.
inline double sine_integral(double x) {
  double ax = std::abs(x);
  double r;
  if (ax <= 20.0) {
    // Si(x) = sum_k (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    double term = ax;  // x^(2k+1)/(2k+1)!
    double sum = ax;
    for (int k = 1; k < 80; ++k) {
      term *= -ax * ax / ((2.0 * k) * (2.0 * k + 1.0));
      double add = term / (2.0 * k + 1.0);
      sum += add;
      if (std::abs(add) < 1e-18) break;
    }
    r = sum;
  } else {
    // Si(x) = pi/2 - f(x) cos x - g(x) sin x,
    // f ~ (1/x)(1 - 2!/x^2 + 4!/x^4 - ...), g ~ (1/x^2)(1 - 3!/x^2 + ...)
    double inv = 1.0 / ax, inv2 = inv * inv;
    double f = inv, g = inv2, fk = inv, gk = inv2;
    double prev_f = std::abs(fk), prev_g = std::abs(gk);
    for (int k = 1; k < 30; ++k) {
      fk *= -(2.0 * k) * (2.0 * k - 1.0) * inv2;
      gk *= -(2.0 * k + 1.0) * (2.0 * k) * inv2;
      if (std::abs(fk) > prev_f || std::abs(gk) > prev_g) break;  // divergence onset
      prev_f = std::abs(fk);
      prev_g = std::abs(gk);
      f += fk;
      g += gk;
      if (prev_f < 1e-18 && prev_g < 1e-18) break;
    }
    r = std::numbers::pi / 2.0 - f * std::cos(ax) - g * std::sin(ax);
  }
  return x < 0 ? -r : r;
}

// closed form of the separation kernel through sine integrals:
//   (4/pi) int_{1/T}^T sin^2(vt/2) sin(ut)/t dt
//     = (2/pi) I(u) - (1/pi) I(u+v) - (1/pi) I(u-v),  I(a) = Si(aT) - Si(a/T)
inline double kernel_via_si(double u, double v, double T) {
  auto I = [T](double a) {
    if (a == 0.0) return 0.0;
    double s = a > 0 ? 1.0 : -1.0;
    a = std::abs(a);
    return s * (sine_integral(a * T) - sine_integral(a / T));
  };
  return (2.0 / std::numbers::pi) * I(u) - (1.0 / std::numbers::pi) * I(u + v) -
         (1.0 / std::numbers::pi) * I(u - v);
}

}  // namespace oracle
