#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "tsl/factor_sieve.hpp"

namespace tsl {

// A Dirichlet character mod q, stored as an exponent table over the common
// order L (= exponent of the unit group): chi(n) = e(expo[n]/L) on units,
// chi(n) = 0 off units.  Exponent storage keeps the values exact roots of
// unity and the full set of phi(q) characters affordable.
class DirichletCharacter {
 public:
  uint32_t modulus() const { return q_; }
  uint32_t order_lcm() const { return L_; }
  bool is_principal() const { return principal_; }
  uint32_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == q_; }

  std::complex<double> operator()(int64_t n) const {
    int64_t r = n % int64_t(q_);
    if (r < 0) r += q_;
    uint32_t e = expo_[size_t(r)];
    if (e == kNonUnit) return {0.0, 0.0};
    return (*roots_)[e];
  }
  // Exponent k with chi(n) = e(k/L), or kNonUnit.
  uint32_t exponent(uint32_t n) const { return expo_[n % q_]; }

  static constexpr uint32_t kNonUnit = 0xffffffffu;

 private:
  friend std::vector<DirichletCharacter> characters_mod(uint32_t q);
  uint32_t q_ = 1, L_ = 1, conductor_ = 1;
  bool principal_ = true;
  std::vector<uint32_t> expo_;
  std::shared_ptr<const std::vector<std::complex<double>>> roots_;
};

// All phi(q) characters mod q, principal first, pairwise distinct, closed
// under conjugation.  Built from the unit-group decomposition (CRT over odd
// prime powers with primitive roots; <-1,5> for powers of two).  q <= 1e4.
std::vector<DirichletCharacter> characters_mod(uint32_t q);

// chi4(n): 0 for even n, (-1)^((n-1)/2) for odd n.
int chi4(int64_t n);

// tau_q(chi) = sum over units b mod q of chi(b) e(b/q), direct summation.
std::complex<double> gauss_sum(const DirichletCharacter& chi);

// c_q(n) = sum_{d | n, d | q} d mu(q/d), exact.
int64_t ramanujan_sum(uint64_t q, int64_t n, const FactorSieve& sieve);

struct Lprime4 {
  double value;       // L'(1, chi4)
  double tail_bound;  // bound on the truncation of the accelerated series
};

// L'(1, chi4) through the accelerated series
//   -L'(1,chi4) = sum_{k>=0} [2 log(4k+1) - (4k+1) log(1 + 2/(4k+1))]
//                           / ((4k+1)(4k+3)),
// whose terms are non-negative for k >= 1.  terms >= 1e4.
Lprime4 lprime_chi4(uint64_t terms);

// 0.5 * (L'(1,chi4)/L(1,chi4) - gamma - log 2), with L(1,chi4) = pi/4 exact.
double lprime_chi4_combined(double lprime_value);

}  // namespace tsl
