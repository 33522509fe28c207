#pragma once

#include <cstdint>
#include <vector>

#include "tsl/factor_sieve.hpp"

namespace tsl {

// Membership table for the odd integers that are sums of two coprime squares.
// Equivalently: n odd with no prime factor = 3 mod 4 (so every prime factor
// is 1 mod 4, and every member except 1 is itself = 1 mod 4).
// Built by striking evens and multiples of primes = 3 mod 4.
class BMembership {
 public:
  explicit BMembership(uint64_t limit);

  uint64_t limit() const { return limit_; }
  bool test(uint64_t n) const {
    return n >= 1 && n <= limit_ && (words_[n >> 6] >> (n & 63)) & 1;
  }
  // Members <= n_max, ascending.
  std::vector<uint32_t> elements_upto(uint64_t n_max) const;
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  uint64_t limit_;
  std::vector<uint64_t> words_;
};

// Factorization route: n odd and no prime factor = 3 mod 4.  b(1) = 1.
bool is_b(uint64_t n, const FactorSieve& sieve);

// Independent oracle: exhaustive search for x^2 + y^2 = n with gcd(x,y) = 1.
// n <= 1e7.
bool is_b_bruteforce(uint64_t n);

// Exact count of members <= N.
uint64_t count_b(uint64_t N, const BMembership& mem);

struct LandauConstant {
  double value;       // sqrt(2) * prod_{p <= prime_limit, p=3 mod 4} (1 - 1/p^2)^{-1/2}
  double tail_bound;  // rigorous bound on the omitted p > prime_limit factors
};

// Partial Euler product for the constant sqrt(2) * prod_{p=3[4]} (1-1/p^2)^{-1/2}.
// Tail: sum_{p>L} p^{-2} <= 1/(L-1), so the missing factor is at most
// exp(1/(2(L-1)) * (1 + 1/(L^2-1))).
LandauConstant landau_constant(uint64_t prime_limit);

}  // namespace tsl
