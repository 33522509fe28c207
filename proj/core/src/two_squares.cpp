#include "tsl/two_squares.hpp"

#include <cmath>
#include <numeric>

#include "tsl/dd.hpp"
#include "tsl/errors.hpp"
#include "tsl/prime_class.hpp"

namespace tsl {

BMembership::BMembership(uint64_t limit) : limit_(limit) {
  if (limit < 1) throw precondition_error("BMembership: limit must be >= 1");
  words_.assign(limit / 64 + 1, ~0ull);
  auto clear = [&](uint64_t n) { words_[n >> 6] &= ~(1ull << (n & 63)); };
  clear(0);
  for (uint64_t n = 2; n <= limit; n += 2) clear(n);
  for_primes_below(limit + 1, [&](uint64_t p) {
    if (p % 4 == 3)
      for (uint64_t m = p; m <= limit; m += p) clear(m);
  });
}

std::vector<uint32_t> BMembership::elements_upto(uint64_t n_max) const {
  if (n_max > limit_) throw precondition_error("BMembership: n_max above table limit");
  std::vector<uint32_t> out;
  for (uint64_t n = 1; n <= n_max; n += 2)
    if (test(n)) out.push_back(uint32_t(n));
  return out;
}

bool is_b(uint64_t n, const FactorSieve& sieve) {
  if (n > sieve.limit()) throw precondition_error("is_b: n above sieve limit");
  if (n % 2 == 0) return false;
  while (n > 1) {
    uint64_t p = sieve.spf(n);
    if (p % 4 == 3) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

namespace {
uint64_t isqrt_u64(uint64_t n) {
  uint64_t r = uint64_t(std::sqrt(double(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}
}  // namespace

bool is_b_bruteforce(uint64_t n) {
  if (n > 10000000ull) throw precondition_error("is_b_bruteforce: n above 1e7");
  if (n % 2 == 0) return false;
  for (uint64_t x = 0; 2 * x * x <= n; ++x) {
    uint64_t y2 = n - x * x;
    uint64_t y = isqrt_u64(y2);
    if (y * y == y2 && std::gcd(x, y) == 1) return true;
  }
  return false;
}

uint64_t count_b(uint64_t N, const BMembership& mem) {
  if (N > mem.limit()) throw precondition_error("count_b: N above table limit");
  uint64_t full = N / 64, cnt = 0;
  const auto& w = mem.words();
  for (uint64_t i = 0; i < full; ++i) cnt += uint64_t(__builtin_popcountll(w[i]));
  uint64_t rem = N % 64;
  // bits full*64 .. full*64+rem inclusive
  uint64_t mask = rem == 63 ? ~0ull : ((1ull << (rem + 1)) - 1);
  cnt += uint64_t(__builtin_popcountll(w[full] & mask));
  return cnt;
}

LandauConstant landau_constant(uint64_t prime_limit) {
  if (prime_limit < 10000) throw precondition_error("landau_constant: prime_limit below 1e4");
  kahan logsum;
  for_primes_below(prime_limit + 1, [&](uint64_t p) {
    if (p % 4 == 3) logsum.add(-0.5 * std::log1p(-1.0 / (double(p) * double(p))));
  });
  double value = std::sqrt(2.0) * std::exp(logsum.value());
  double L = double(prime_limit);
  double tail_expo = 0.5 * (1.0 / (L - 1.0)) * (1.0 + 1.0 / (L * L - 1.0));
  return {value, value * std::expm1(tail_expo)};
}

}  // namespace tsl
