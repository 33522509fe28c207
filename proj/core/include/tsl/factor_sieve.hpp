#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsl/errors.hpp"

namespace tsl {

// Smallest-prime-factor table for 2..limit.  One 32-bit word per entry,
// immutable after construction, safe for concurrent readers.
class FactorSieve {
 public:
  explicit FactorSieve(uint64_t limit);

  uint64_t limit() const { return limit_; }

  uint32_t spf(uint64_t n) const { return spf_[n]; }
  bool is_prime(uint64_t n) const { return n >= 2 && spf_[n] == n; }

  struct PrimePower {
    uint64_t p;
    uint32_t e;
  };
  // Distinct prime powers of n, ascending in p.  n <= limit.
  std::vector<PrimePower> factorize(uint64_t n) const;

  int moebius(uint64_t n) const;          // mu(n) in {-1,0,1}
  uint64_t euler_phi(uint64_t n) const;   // phi(n)
  uint32_t omega(uint64_t n) const;       // number of distinct prime factors
  uint64_t tau3(uint64_t n) const;        // 3-fold divisor count, prod C(e+2,2)
  uint64_t phi_plus(uint64_t n) const;    // n * prod_{p|n} (1 + 1/p), an integer
  bool is_squarefree(uint64_t n) const;

  uint64_t least_prime_factor(uint64_t n) const;  // P^-(1) reported as 0 sentinel by callers

  std::vector<uint64_t> primes_upto(uint64_t n) const;

  // Flat cache: 16-byte header ("SPF1", limit as 64-bit LE, 4 zero bytes),
  // then (limit+1) little-endian 32-bit entries.
  void save(const std::string& path) const;
  static FactorSieve load(const std::string& path);

  // Looks for <cache_dir>/spf_<limit>.bin, builds and stores it when absent.
  static FactorSieve build_or_load_cached(uint64_t limit, const std::string& cache_dir);

 private:
  FactorSieve() = default;
  void check_range(uint64_t n) const {
    if (n < 1 || n > limit_) throw precondition_error("FactorSieve: n out of range");
  }
  uint64_t limit_ = 0;
  std::vector<uint32_t> spf_;
};

// Range-checked constructor wrapper: 2 <= limit <= 1e8.
FactorSieve build_factor_sieve(uint64_t limit);

}  // namespace tsl
