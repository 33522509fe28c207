#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "tsl/dd.hpp"
#include "tsl/rational.hpp"
#include "tsl/two_squares.hpp"

namespace tsl {

// N_{k+2} = 2 N_{k+1} + N_k, N_1 = 1, N_2 = 2; consecutive values coprime and
// (N_{k+1}-N_k)/N_k approximates sqrt(2) to 1/(2 N_k^2), every [y,3y] hit.
struct PellPair {
  int k;
  mpz_class value;
  bool approx_ok;    // |sqrt2 - (N_{k+1}-N_k)/N_k| <= 1/(2 N_k^2), integer-only test
  bool coprime_next; // gcd(N_k, N_{k+1}) = 1
};
std::vector<PellPair> pell_sequence(int k_max);

// alpha = (p + q sqrt(d)) / r, q > 0, r > 0, d positive non-square.
struct QuadraticIrrational {
  int64_t p = 0;
  int64_t q = 1;
  int64_t r = 1;
  uint64_t d = 2;

  static QuadraticIrrational sqrt_of(uint64_t d);
  static QuadraticIrrational golden();  // (1 + sqrt 5)/2
  static QuadraticIrrational make(int64_t p, int64_t q, int64_t r, uint64_t d);

  dd to_dd() const;
  double to_double() const { return to_dd().hi; }
};

struct Convergent {
  i128 a;
  i128 q;
  bool quality_ok;       // |q alpha - a| <= 1/q, exact integer test
  bool next_quality_ok;  // |q alpha - a| < 1/q_next (verified once the next
                         // denominator exists; true for the last entry)
};

// Continued-fraction convergents with denominator <= q_max (q_max <= 1e12),
// exact integer state throughout.
std::vector<Convergent> convergents(const QuadraticIrrational& alpha, uint64_t q_max);

// Exact count of members b <= N with ||b alpha - beta0|| <= delta.  Phases in
// double-double; anything within 1e-18 of the threshold is re-decided exactly
// through the quadratic's integer polynomial.
struct EquidistCount {
  uint64_t count = 0;
  uint64_t boundary_cases = 0;  // phases that needed the exact tie-break
};
EquidistCount equidist_count(const QuadraticIrrational& alpha, double beta0, double delta,
                             uint64_t N, const BMembership& mem);

// Sandwich test of the clustered count against 2 delta B(N) with the error
// budget delta * sum_{r<=R} |S(r alpha; N)| + B(N)/R (constant 5).
struct TrigoApproxReport {
  uint64_t lhs = 0;          // exact clustered count
  double main_term = 0.0;    // 2 delta B(N)
  double family_budget = 0.0;
  double truncation_budget = 0.0;
  double deviation = 0.0;    // |lhs - main_term|
  bool within = false;       // deviation <= 5 (delta*family + B(N)/R)
};
TrigoApproxReport trigo_approx_check(const QuadraticIrrational& alpha, double beta0,
                                     double delta, uint64_t R, uint64_t N,
                                     const BMembership& mem);

}  // namespace tsl
