#pragma once

#include <cstdint>
#include <vector>

#include "tsl/report.hpp"
#include "tsl/sieve_identity.hpp"

namespace tsl {

// Fourier separation kernel
//   (4/pi) int_{1/T}^{T} sin^2(v t / 2) sin(u t) / t dt
//     = 1_{u < v} + O(1/(T|v-u|) + 1/(Tu) + v^2 u / T^3),
// evaluated by oscillation-bounded quadrature.  u = v is refused.
double vfa_kernel(double u, double v, double T);

// Coefficients of the separated bilinear decomposition:
//   atilde_l = mu(l) for l | P(z), max(M, M0) <= l < M0 P^-(l), else 0
//   a_l(t)   = (4/pi) mu(l) sin^2(log(P^-(l) - 1/2) t / 2) on the Harman
//              range (without the l >= M cut), else 0
//   b_k(t)   = sum_{p' d m = k, p' class prime < z, d | P(p')} mu(d)
//              sin(t log p').
// Requires M0 >= 2 so P^-(l) is finite on the support.
class ASCoefficients {
 public:
  ASCoefficients(const SieveParams& params, const PrimeClass& cls, const FactorSieve& sieve);

  int atilde(uint64_t ell) const;
  double a(uint64_t ell, double t) const;
  double b(uint64_t k, double t) const;

  double z() const { return params_.z; }
  double M() const { return params_.M; }
  double M0() const { return params_.M0; }
  double T() const { return params_.T; }
  const std::vector<uint64_t>& harman_ells() const { return harman_ells_; }

 private:
  friend DecompositionReport precise_as_check(const std::vector<int64_t>&, const SieveParams&,
                                              const PrimeClass&, const FactorSieve&);
  bool in_harman_range(uint64_t ell) const;
  SieveParams params_;
  const FactorSieve* sieve_;
  PrimeClass cls_;
  std::vector<uint64_t> class_primes_;  // class primes < z
  std::vector<uint64_t> harman_ells_;   // l | P(z), M0 <= l < M0 P^-(l)
};

ASCoefficients as_coefficients(const SieveParams& params, const PrimeClass& cls,
                               const FactorSieve& sieve);

// Numerical verification of the separated decomposition on theta supported on
// [1, N] (theta[0] unused, N <= 1e4):
//   sum_{(n,P(z))=1} theta(n)
//     = sum_{d<M} mu(d) psi(d) + sum_l atilde_l psi(l)
//       - int_{1/T}^T sum a_l(t) b_k(t) theta(kl) dt/t + error,
// |error| <= (z/T) sum_{l in Harman range} sum_{d | P(z), l d >= M} |psi(l d)|
// with slack factor 10 (implied constant unspecified).
DecompositionReport precise_as_check(const std::vector<int64_t>& theta,
                                     const SieveParams& params, const PrimeClass& cls,
                                     const FactorSieve& sieve);

}  // namespace tsl
