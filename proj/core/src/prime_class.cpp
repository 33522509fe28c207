#include "tsl/prime_class.hpp"

#include <algorithm>
#include <cmath>

#include "tsl/dd.hpp"
#include "tsl/errors.hpp"

namespace tsl {

bool PrimeClass::contains(uint64_t p) const {
  switch (kind) {
    case PrimeClassKind::Mod4Res3:
      return p % 4 == 3;
    case PrimeClassKind::Mod3Res2:
      return p % 3 == 2;
    case PrimeClassKind::NotOneMod12:
      return p % 12 != 1;
    case PrimeClassKind::Explicit:
      return std::binary_search(explicit_primes.begin(), explicit_primes.end(), p);
  }
  return false;
}

PrimeClass PrimeClass::explicit_list(std::vector<uint64_t> ps, Rat k) {
  std::sort(ps.begin(), ps.end());
  return {PrimeClassKind::Explicit, std::move(ps), k};
}

void for_primes_below(uint64_t z, const std::function<void(uint64_t)>& fn) {
  if (z <= 2) return;
  uint64_t limit = z - 1;  // primes p < z
  uint64_t root = uint64_t(std::sqrt(double(limit))) + 2;
  std::vector<char> small(root + 1, 1);
  std::vector<uint64_t> base;
  for (uint64_t i = 2; i <= root; ++i) {
    if (small[i]) {
      if (i * i <= root)
        for (uint64_t j = i * i; j <= root; j += i) small[j] = 0;
      base.push_back(i);
    }
  }
  const uint64_t seg = 1u << 20;
  std::vector<char> mark(seg);
  for (uint64_t lo = 2; lo <= limit; lo += seg) {
    uint64_t hi = std::min(lo + seg - 1, limit);
    std::fill(mark.begin(), mark.begin() + (hi - lo + 1), 1);
    for (uint64_t p : base) {
      if (p * p > hi) break;
      uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (uint64_t j = start; j <= hi; j += p) mark[j - lo] = 0;
    }
    for (uint64_t n = lo; n <= hi; ++n)
      if (mark[n - lo]) fn(n);
  }
}

std::vector<uint64_t> class_primes_below(double z, const PrimeClass& cls) {
  std::vector<uint64_t> out;
  if (z <= 2) return out;
  uint64_t zc = uint64_t(std::ceil(z));
  // p < z with real z: p <= ceil(z)-1, and exclude p == z when z integral
  for_primes_below(zc, [&](uint64_t p) {
    if (double(p) < z && cls.contains(p)) out.push_back(p);
  });
  return out;
}

std::vector<uint64_t> class_primes_in(double lo, double hi, bool include_hi,
                                      const PrimeClass& cls) {
  std::vector<uint64_t> out;
  if (hi < lo) return out;
  uint64_t cap = uint64_t(std::floor(hi)) + 2;
  for_primes_below(cap, [&](uint64_t p) {
    double pd = double(p);
    bool in = (pd >= lo) && (include_hi ? pd <= hi : pd < hi);
    if (in && cls.contains(p)) out.push_back(p);
  });
  return out;
}

mpz_class prime_class_product(double z, const PrimeClass& cls) {
  if (z > 1e6 + 0.5) throw resource_error("prime_class_product: z above exact-product budget (1e6)");
  mpz_class prod = 1;
  for (uint64_t p : class_primes_below(z, cls)) prod *= mpz_class(static_cast<unsigned long>(p));
  return prod;
}

double mertens_class_sum(double z, const PrimeClass& cls) {
  if (z > 1e8 + 0.5) throw precondition_error("mertens_class_sum: z above 1e8");
  kahan acc;
  if (z > 2) {
    for_primes_below(uint64_t(std::ceil(z)), [&](uint64_t p) {
      if (double(p) < z && cls.contains(p)) acc.add(std::log(double(p)) / double(p + 1));
    });
  }
  return acc.value();
}

}  // namespace tsl
