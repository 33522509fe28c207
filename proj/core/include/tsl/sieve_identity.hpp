#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tsl/factor_sieve.hpp"
#include "tsl/prime_class.hpp"
#include "tsl/rational.hpp"
#include "tsl/report.hpp"

namespace tsl {

// Parameters steering the decompositions: sift levels z <= Z, linear-part
// truncation D, bilinear thresholds M >= M0 >= 1, kernel cutoff T.
struct SieveParams {
  double z = 2.0;
  double Z = 2.0;
  double D = 2.0;
  double M = 1.0;
  double M0 = 1.0;
  double T = 1.0;
};

// Finitely supported rational weights u_1..u_N (index 0 unused).
struct WeightedSeq {
  uint64_t N = 0;
  std::vector<Rat> u;

  static WeightedSeq zeros(uint64_t N) {
    WeightedSeq s;
    s.N = N;
    s.u.assign(N + 1, Rat());
    return s;
  }
  Rat sum_abs_sq() const {
    Rat r;
    for (uint64_t n = 1; n <= N; ++n) r += u[n] * u[n];
    return r;
  }
  bool bounded_by_one() const {
    for (uint64_t n = 1; n <= N; ++n)
      if (Rat(1) < u[n].abs()) return false;
    return true;
  }
};

// Damping weight: 0 unless (m, P(z)) = 1, else 1/(1 + #{class primes in the
// interval dividing m}).  The interval follows the closed [z, Z] convention
// by default; identities internally use [z, Z).
Rat rho(uint64_t m, double z, double Z, const PrimeClass& cls, const FactorSieve& sieve,
        bool include_hi = true);

// All divisors of P(z) = prod of class primes < z, ascending; throws
// resource_error past 2^20 divisors.
std::vector<uint64_t> class_divisors(double z, const PrimeClass& cls);

// Divisor-closed truncation function for the fundamental sieve identity.
struct Nabla {
  enum class Kind { Threshold, OmegaLE, Custom } kind = Kind::Threshold;
  double threshold = 1.0;
  uint32_t omega_le = 0;
  std::function<bool(uint64_t)> custom;

  static Nabla threshold_below(double M) { return {Kind::Threshold, M, 0, nullptr}; }
  static Nabla omega_at_most(uint32_t k) { return {Kind::OmegaLE, 0.0, k, nullptr}; }
  static Nabla custom_fn(std::function<bool(uint64_t)> f) {
    return {Kind::Custom, 0.0, 0, std::move(f)};
  }
  bool operator()(uint64_t d, const FactorSieve& sieve) const;
  // Custom predicates must be divisor-closed with nabla(1) = 1; verified over
  // the actual divisor list before use.
  void validate(const std::vector<uint64_t>& divisors, const FactorSieve& sieve) const;
};

using PsiFn = std::function<i128(uint64_t)>;

// Fundamental sieve identity:
//   sum_{d|P(z)} mu(d) psi(d)
//     = sum_{d|P(z)} mu(d) psi(d) nabla(d)
//       + sum_{l|P(z)} nbar(l) sum_{delta|P(P^-(l))} mu(l delta) psi(l delta),
// nbar(1) = 0, nbar(l) = nabla(l/P^-(l)) - nabla(l).  Exact integer check.
DecompositionReport fsi_check(const PsiFn& psi, const Nabla& nabla, double z,
                              const PrimeClass& cls, const FactorSieve& sieve);

// Buchstab step at fixed l (squarefree, class primes only, l > 1):
//   sum_{delta|P(P^-(l))} mu(delta) 1_{l delta >= M} psi(l delta)
//     = 1_{l >= M} psi(l)
//       - sum_{p' < P^-(l)} sum_{d|P(p')} mu(d) 1_{l d p' >= M} psi(l d p').
DecompositionReport buchstab_check(const PsiFn& psi, uint64_t ell, double M,
                                   const PrimeClass& cls, const FactorSieve& sieve);

// d = delta * l with delta | P(P^-(l)) and M0 <= l < M0 P^-(l); the minimal
// descending prefix product >= M0 (P^-(1) treated as +infinity).
struct HarmanSplit {
  uint64_t delta = 1;
  uint64_t ell = 1;
};
HarmanSplit harman_decompose(uint64_t d, double M0, const FactorSieve& sieve);

// Three-part split of sum_{d|P(z)} mu(d) psi(d) into d < M, a Harman-range
// linear piece and a triple sum; also re-derived through harman_decompose as
// an independent second route.  Exact.
DecompositionReport simple_sieve_decompose(const PsiFn& psi, double z, double M, double M0,
                                           const PrimeClass& cls, const FactorSieve& sieve);

// Exact three-term identity behind the Vinogradov split: with the class-prime
// interval I (default [z, Z)) and omega#(n) = #{p in I : p | n},
//   sum_{n<=N, (n,P(z))=1, no p in I divides n} u_n
//     = sum_{(n,P(z))=1} u_n
//       - sum_{p in I} sum_{m<=N/p} rho_I(m) u_{pm}
//       - sum_{p in I} sum_{l<=N/p^2, (l,P(z))=1} u_{p^2 l}
//                       / (omega#(pl) (1 + omega#(pl))).
// The last (discarded) term is reported against 2 sqrt(N/z) ||u||_2, and
// against N/z when |u_n| <= 1.
struct FirstbaseReport {
  DecompositionReport report;       // residual of the 3-term identity (exact 0)
  double discarded = 0.0;           // the p^2 term
  double bound_l2 = 0.0;            // 2 sqrt(N/z) ||u||_2
  double bound_linf = 0.0;          // N/z, when applicable
  bool linf_applicable = false;
  bool discard_within_bounds = false;
};
FirstbaseReport firstbase_decompose(const WeightedSeq& u, double z, double Z,
                                    const PrimeClass& cls, const FactorSieve& sieve,
                                    bool include_hi = false);

// Truncated split: LHS = linear(d <= D) - bilinear(rho) + residual,
//   E  = sqrt(N sum|u|^2) (1/sqrt(z) + exp(-log D/log z) (log 3z)^31)
//   E' = U/z + N exp(-(log D/log z) log(log D/(2 log z))) sqrt(log z)
// (E' when |u_n| <= 1 and u is supported in (N-U, N]).
struct VinoReport {
  DecompositionReport report;
  double bound_E = 0.0;
  double bound_E_improved = 0.0;  // first term N/z instead of sqrt(N)/sqrt(z)||u||
  double bound_Eprime = 0.0;
  bool eprime_applicable = false;
  double U = 0.0;
};
VinoReport vino_decompose(const WeightedSeq& u, const SieveParams& params,
                          const PrimeClass& cls, const FactorSieve& sieve,
                          bool include_hi = false);

// Exact sum_{d > D, d | P(z)} mu^2(d)/d by divisor enumeration, against the
// envelope sqrt(log z) exp(-(log D/log z) log(log D/(2 log z))).
struct RankinTail {
  Rat exact{};
  double lhs = 0.0;
  double envelope = 0.0;
  bool regime_ok = false;  // z >= 10 and 2 log D >= log z
};
RankinTail rankin_tail(double D, double z, const PrimeClass& cls, const FactorSieve& sieve);

}  // namespace tsl
