#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tsl/dd.hpp"
#include "tsl/two_squares.hpp"

namespace tsl {

// A point of R/Z split as a/q + beta with (a,q) = 1, 0 <= a < q and beta held
// in double-double.  The rational part of every phase n*alpha is computed
// exactly as (n*a mod q)/q; only n*beta goes through floating point.
struct Alpha {
  int64_t a = 0;
  uint64_t q = 1;
  dd beta{};

  static Alpha rational(int64_t a, uint64_t q, double beta = 0.0);
  static Alpha from_dd(dd beta);   // a = 0, q = 1
  static Alpha sqrt2();            // q = 1, beta = sqrt(2) - 1
  double to_double() const { return double(a) / double(q) + beta.hi + beta.lo; }
};

struct ExpSumResult {
  std::complex<double> value{0.0, 0.0};
  uint64_t terms = 0;  // members contributing
  uint64_t N = 0;
};

// S(alpha; N) = sum_{n <= N} b(n) e(n alpha).
// Deterministic evaluation: fixed 2^14-wide index blocks, block sums combined
// in index order, so the result is bit-identical for every thread count.
ExpSumResult s_alpha(const Alpha& alpha, uint64_t N, const BMembership& mem);

// Same sum restricted to gcd(n, q_sift) = 1.
ExpSumResult s_q(const Alpha& alpha, uint64_t N, uint64_t q_sift, const BMembership& mem);

// sum_{r <= R} |S(r alpha; N)|; the rational part of r*alpha stays exact.
double family_sum(const Alpha& alpha, uint64_t R, uint64_t N, const BMembership& mem);

// S(j/G; N) for j = 0..G-1 by per-member phase rotation (no FFT).
std::vector<std::complex<double>> grid_spectrum(uint64_t N, uint64_t grid_size,
                                                const BMembership& mem);

// Riemann-sum approximation of int_0^1 |S(alpha;N)|^ell d alpha on a uniform
// grid; grid_size >= 4N enforced.
double lp_norm_grid(double ell, uint64_t N, uint64_t grid_size, const BMembership& mem);

// Empirical check of the global bound: measured |S| sqrt(log N) / N against
//   envelope_small = 1/phi(q) + sqrt(q/N) (log N)^7 + (log N)^{-A}
//   envelope_large = (1/sqrt(q) + N^{-1/6} + sqrt(q/N)) (log N)^7
// with implied constants 1.  The admissible-radius exponent defaults to
// 2A + 14 but is a free parameter (two readings circulate).
struct TrigoBoundReport {
  double measured_ratio = 0.0;   // |S| sqrt(log N) / N
  double modulus = 0.0;          // |S|
  double envelope_small = 0.0;
  double envelope_large = 0.0;
  bool pass_small = false;
  bool pass_large = false;
  double radius = 0.0;           // |alpha - a/q| measured
  double radius_allowed = 0.0;   // (log N)^radius_exponent / (q N)
  bool in_regime = false;
  bool convergent_quality = false;  // |q alpha - a| <= 1/q
  uint64_t q = 0;
  double phi_q = 0.0;
};
TrigoBoundReport bound_check_trigo(const Alpha& alpha, uint64_t N, double A,
                                   const BMembership& mem,
                                   double radius_exponent = -1.0 /* 2A+14 */);

// Number of worker threads: TSL_THREADS env var, 0 or unset = hardware.
unsigned effective_threads();

}  // namespace tsl
