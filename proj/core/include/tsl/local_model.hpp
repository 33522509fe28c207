#pragma once

#include <complex>
#include <cstdint>

#include "tsl/expsum.hpp"
#include "tsl/factor_sieve.hpp"
#include "tsl/two_squares.hpp"

namespace tsl {

// K-periodic local model of the sifted sequence:
//   S_flat(alpha; N) = 4C prod_{p<K, p=3[4]} (1-1/p)^{-1}
//                      sum_{3<=n<=N, n=1[4], (n,P(K))=1} e(n alpha)/sqrt(log n)
// where P(K) = prod_{p<K, p=3[4]} p.  The product and the sift use the same
// strict p < K so leading = 4C/delta_K holds exactly; pass K + 1/2 for the
// closed endpoint.
struct LocalModelParams {
  double K = 2.0;
  uint64_t N = 0;
  double C = 0.0;       // leading constant input (landau_constant value)
  double C_tail = 0.0;  // its tail bound, propagated into predictions
  uint64_t P = 1;       // prod class primes < K
  double delta_K = 1.0; // phi(P)/P
  double leading = 0.0; // 4C * P/phi(P)
};

LocalModelParams make_local_model_params(double K, uint64_t N, double C, double C_tail,
                                         const FactorSieve& sieve);

// sum_{3<=n<=N, n=1[4]} e(n beta)/sqrt(log n)  (no constant applied).
std::complex<double> smooth_main(dd beta, uint64_t N);

// The model polynomial itself, leading constant applied.
std::complex<double> s_flat(const Alpha& alpha, const LocalModelParams& params,
                            const FactorSieve& sieve);

// Sigma_d(N; alpha) = sum_{3<=n<=N, n=1[4], d|n} e(n alpha)/sqrt(log n).
// When q | 4d and d is a squarefree product of primes = 3 mod 4, the phase
// factors: Sigma_d(N; a/q + beta) = e(a q_* / q_2) Sigma_d(N; beta); the
// companion residual is reported whenever those preconditions hold.
struct SigmaD {
  std::complex<double> value;
  bool identity_checked = false;
  double identity_residual = 0.0;
};
SigmaD sigma_d(uint64_t N, const Alpha& alpha, uint64_t d, const FactorSieve& sieve);

// Side-by-side comparison of S, the local model, and the predicted main term
// in the applicable regime (q = q_2 q_*, q_2 in {1,2,4,8}).
struct MajorArcReport {
  int regime = 0;  // 1: q_* | P(infty), q_2 != 4; 2: q_2 = 4; 3: q_* not | P(infty)
  std::complex<double> measured;   // S(alpha; N)
  std::complex<double> model;      // S_flat(alpha; N)
  std::complex<double> predicted;  // main term of the applicable regime
  double abs_dev_measured = 0.0;   // |measured - predicted|
  double rel_dev_measured = 0.0;
  double abs_dev_model = 0.0;      // |model - predicted|
  double prediction_band = 0.0;    // uncertainty from the constant's tail bound
  uint64_t q2 = 1, qstar = 1;
};
MajorArcReport major_arc_compare(int64_t a, uint64_t q, double beta, uint64_t N, double K,
                                 const BMembership& mem, const FactorSieve& sieve,
                                 const LandauConstant& C);

// Riemann-sum L^ell norm of the model polynomial, grid_size >= 4N.
double lp_norm_flat(double ell, const LocalModelParams& params, uint64_t grid_size,
                    const FactorSieve& sieve);

}  // namespace tsl
