#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl {

// A sifting class of primes with a (logarithmic) density kappa:
//   sum_{p<=X, p in class} log p / p = kappa log X + O(1).
// Mod4Res3 (p = 3 mod 4) is the working class throughout; the other kinds
// keep the machinery generic.
enum class PrimeClassKind { Mod4Res3, Mod3Res2, NotOneMod12, Explicit };

struct PrimeClass {
  PrimeClassKind kind = PrimeClassKind::Mod4Res3;
  std::vector<uint64_t> explicit_primes;  // sorted, only for Explicit
  Rat kappa{1, 2};

  bool contains(uint64_t p) const;

  static PrimeClass mod4_res3() { return {PrimeClassKind::Mod4Res3, {}, Rat(1, 2)}; }
  static PrimeClass mod3_res2() { return {PrimeClassKind::Mod3Res2, {}, Rat(1, 2)}; }
  static PrimeClass not_one_mod12() { return {PrimeClassKind::NotOneMod12, {}, Rat(3, 4)}; }
  static PrimeClass explicit_list(std::vector<uint64_t> ps, Rat k);
};

// Visit every prime < z (strict), ascending.  Segmented, so z up to 1e8 is
// fine without a factor table.
void for_primes_below(uint64_t z, const std::function<void(uint64_t)>& fn);

// Class primes p < z, ascending.
std::vector<uint64_t> class_primes_below(double z, const PrimeClass& cls);

// Class primes in [lo, hi) or [lo, hi] depending on include_hi.
std::vector<uint64_t> class_primes_in(double lo, double hi, bool include_hi,
                                      const PrimeClass& cls);

// prod_{p < z, p in class} p, held exactly.  Empty product = 1.
// z above 1e6 is refused (resource error: big-integer budget).
mpz_class prime_class_product(double z, const PrimeClass& cls);

// sum_{p < z, p in class} log p / (p+1), compensated summation.
double mertens_class_sum(double z, const PrimeClass& cls);

}  // namespace tsl
