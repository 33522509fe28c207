#include "tsl/factor_sieve.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>

namespace tsl {

FactorSieve::FactorSieve(uint64_t limit) : limit_(limit) {
  spf_.assign(limit + 1, 0);
  for (uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = uint32_t(i);
      for (uint64_t j = i * i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = uint32_t(i);
    }
  }
}

FactorSieve build_factor_sieve(uint64_t limit) {
  if (limit < 2 || limit > 100000000ull)
    throw precondition_error("build_factor_sieve: limit must be in [2, 1e8]");
  return FactorSieve(limit);
}

std::vector<FactorSieve::PrimePower> FactorSieve::factorize(uint64_t n) const {
  check_range(n);
  std::vector<PrimePower> out;
  while (n > 1) {
    uint64_t p = spf_[n];
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

int FactorSieve::moebius(uint64_t n) const {
  check_range(n);
  int m = 1;
  while (n > 1) {
    uint64_t p = spf_[n];
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return m;
}

uint64_t FactorSieve::euler_phi(uint64_t n) const {
  check_range(n);
  uint64_t r = n;
  while (n > 1) {
    uint64_t p = spf_[n];
    r -= r / p;
    while (n % p == 0) n /= p;
  }
  return r;
}

uint32_t FactorSieve::omega(uint64_t n) const {
  check_range(n);
  uint32_t c = 0;
  while (n > 1) {
    uint64_t p = spf_[n];
    ++c;
    while (n % p == 0) n /= p;
  }
  return c;
}

uint64_t FactorSieve::tau3(uint64_t n) const {
  uint64_t r = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    r *= uint64_t(e + 2) * (e + 1) / 2;
  }
  return r;
}

uint64_t FactorSieve::phi_plus(uint64_t n) const {
  // n * prod (1+1/p) = prod p^(e-1) * (p+1)
  uint64_t r = 1;
  for (auto [p, e] : factorize(n)) {
    for (uint32_t i = 1; i < e; ++i) r *= p;
    r *= p + 1;
  }
  return r;
}

bool FactorSieve::is_squarefree(uint64_t n) const {
  check_range(n);
  while (n > 1) {
    uint64_t p = spf_[n];
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

uint64_t FactorSieve::least_prime_factor(uint64_t n) const {
  check_range(n);
  return n == 1 ? 0 : spf_[n];
}

std::vector<uint64_t> FactorSieve::primes_upto(uint64_t n) const {
  check_range(n);
  std::vector<uint64_t> out;
  for (uint64_t i = 2; i <= n; ++i)
    if (spf_[i] == i) out.push_back(i);
  return out;
}

namespace {
void put_u64_le(unsigned char* b, uint64_t v) {
  for (int i = 0; i < 8; ++i) b[i] = (unsigned char)(v >> (8 * i));
}
uint64_t get_u64_le(const unsigned char* b) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t(b[i]) << (8 * i);
  return v;
}
}  // namespace

void FactorSieve::save(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw resource_error("FactorSieve::save: cannot open " + path);
  unsigned char hdr[16] = {'S', 'P', 'F', '1'};
  put_u64_le(hdr + 4, limit_);
  std::fwrite(hdr, 1, 16, f);
  std::vector<unsigned char> row(4);
  // x86 is little-endian, but keep the format byte-defined regardless of host
  for (uint64_t i = 0; i <= limit_; ++i) {
    uint32_t v = spf_[i];
    row[0] = (unsigned char)(v);
    row[1] = (unsigned char)(v >> 8);
    row[2] = (unsigned char)(v >> 16);
    row[3] = (unsigned char)(v >> 24);
    std::fwrite(row.data(), 1, 4, f);
  }
  std::fclose(f);
}

FactorSieve FactorSieve::load(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw resource_error("FactorSieve::load: cannot open " + path);
  unsigned char hdr[16];
  if (std::fread(hdr, 1, 16, f) != 16 || std::memcmp(hdr, "SPF1", 4) != 0) {
    std::fclose(f);
    throw resource_error("FactorSieve::load: bad header in " + path);
  }
  FactorSieve s;
  s.limit_ = get_u64_le(hdr + 4);
  s.spf_.assign(s.limit_ + 1, 0);
  std::vector<unsigned char> buf(4 * (s.limit_ + 1));
  if (std::fread(buf.data(), 1, buf.size(), f) != buf.size()) {
    std::fclose(f);
    throw resource_error("FactorSieve::load: truncated file " + path);
  }
  std::fclose(f);
  for (uint64_t i = 0; i <= s.limit_; ++i) {
    const unsigned char* b = buf.data() + 4 * i;
    s.spf_[i] = uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 | uint32_t(b[3]) << 24;
  }
  return s;
}

FactorSieve FactorSieve::build_or_load_cached(uint64_t limit, const std::string& cache_dir) {
  if (cache_dir.empty()) return build_factor_sieve(limit);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::string path = cache_dir + "/spf_" + std::to_string(limit) + ".bin";
  if (std::FILE* f = std::fopen(path.c_str(), "rb")) {
    std::fclose(f);
    FactorSieve s = load(path);
    if (s.limit() == limit) return s;
  }
  FactorSieve s = build_factor_sieve(limit);
  s.save(path);
  return s;
}

}  // namespace tsl
