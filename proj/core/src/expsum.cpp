#include "tsl/expsum.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <thread>

#include "tsl/errors.hpp"
#include "tsl/rational.hpp"

namespace tsl {

namespace {
constexpr uint64_t kBlock = 1ull << 14;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

unsigned effective_threads() {
  if (const char* e = std::getenv("TSL_THREADS")) {
    long v = std::atol(e);
    if (v > 0) return unsigned(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

Alpha Alpha::rational(int64_t a, uint64_t q, double beta) {
  if (q == 0) throw precondition_error("Alpha: q = 0");
  int64_t r = a % int64_t(q);
  if (r < 0) r += int64_t(q);
  if (std::gcd(uint64_t(r), q) != 1 && !(r == 0 && q == 1))
    throw precondition_error("Alpha: gcd(a, q) != 1");
  Alpha al;
  al.a = r;
  al.q = q;
  al.beta = dd_from(beta);
  return al;
}

Alpha Alpha::from_dd(dd beta) {
  Alpha al;
  al.a = 0;
  al.q = 1;
  al.beta = dd_frac(beta);
  return al;
}

Alpha Alpha::sqrt2() {
  Alpha al;
  al.a = 0;
  al.q = 1;
  al.beta = dd_add_d(dd_sqrt(2.0), -1.0);
  return al;
}

namespace {

struct BlockSummer {
  const Alpha& alpha;
  const BMembership& mem;
  uint64_t N;
  uint64_t q_sift;  // 1 = no restriction

  // Sum over members in [lo, hi].
  std::complex<double> block(uint64_t lo, uint64_t hi, uint64_t& terms) const {
    double re = 0.0, im = 0.0;
    const bool has_beta = alpha.beta.hi != 0.0 || alpha.beta.lo != 0.0;
    const uint64_t q = alpha.q;
    const uint64_t a = uint64_t(alpha.a);
    for (uint64_t n = lo | 1; n <= hi; n += 2) {
      if (!mem.test(n)) continue;
      if (q_sift != 1 && std::gcd(n, q_sift) != 1) continue;
      double ph;
      if (q == 1) {
        ph = has_beta ? dd_frac_mul_u(n, alpha.beta).hi : 0.0;
      } else {
        double rat = double((u128(n) * a) % q) / double(q);
        ph = has_beta ? dd_frac(dd_add_d(dd_frac_mul_u(n, alpha.beta), rat)).hi : rat;
      }
      double t = kTwoPi * ph;
      re += std::cos(t);
      im += std::sin(t);
      ++terms;
    }
    return {re, im};
  }
};

ExpSumResult run_blocks(const BlockSummer& s, uint64_t N) {
  uint64_t nblocks = (N + kBlock - 1) / kBlock;
  std::vector<std::complex<double>> sums(nblocks, {0.0, 0.0});
  std::vector<uint64_t> counts(nblocks, 0);

  unsigned nt = std::min<uint64_t>(effective_threads(), nblocks ? nblocks : 1);
  auto work = [&](unsigned tid) {
    for (uint64_t b = tid; b < nblocks; b += nt) {
      uint64_t lo = b * kBlock + 1;
      uint64_t hi = std::min(N, (b + 1) * kBlock);
      sums[b] = s.block(lo, hi, counts[b]);
    }
  };
  if (nt <= 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (unsigned t = 0; t < nt; ++t) ts.emplace_back(work, t);
    for (auto& t : ts) t.join();
  }

  ExpSumResult r;
  r.N = N;
  std::complex<double> acc{0.0, 0.0};
  for (uint64_t b = 0; b < nblocks; ++b) {  // index order: bit-identical reduction
    acc += sums[b];
    r.terms += counts[b];
  }
  r.value = acc;
  return r;
}

}  // namespace

ExpSumResult s_alpha(const Alpha& alpha, uint64_t N, const BMembership& mem) {
  if (N > mem.limit()) throw precondition_error("s_alpha: N above membership limit");
  BlockSummer s{alpha, mem, N, 1};
  return run_blocks(s, N);
}

ExpSumResult s_q(const Alpha& alpha, uint64_t N, uint64_t q_sift, const BMembership& mem) {
  if (N > mem.limit()) throw precondition_error("s_q: N above membership limit");
  if (q_sift == 0) throw precondition_error("s_q: q_sift = 0");
  BlockSummer s{alpha, mem, N, q_sift};
  return run_blocks(s, N);
}

double family_sum(const Alpha& alpha, uint64_t R, uint64_t N, const BMembership& mem) {
  if (u128(R) * N > u128(1000000000ull))
    throw precondition_error("family_sum: R*N above phase budget 1e9");
  kahan acc;
  for (uint64_t r = 1; r <= R; ++r) {
    // gcd(r*a, q) may exceed 1; the phase (n*ra mod q)/q stays exact either
    // way, so the Alpha is assembled directly instead of via rational().
    Alpha ar;
    ar.q = alpha.q;
    ar.a = int64_t((u128(uint64_t(alpha.a)) * r) % alpha.q);
    ar.beta = dd_frac(dd_mul_d(alpha.beta, double(r)));
    acc.add(std::abs(s_alpha(ar, N, mem).value));
  }
  return acc.value();
}

std::vector<std::complex<double>> grid_spectrum(uint64_t N, uint64_t grid_size,
                                                const BMembership& mem) {
  if (N > mem.limit()) throw precondition_error("grid_spectrum: N above membership limit");
  auto elems = mem.elements_upto(N);
  std::vector<std::complex<double>> acc(grid_size, {0.0, 0.0});

  // rotation blocks aligned to absolute multiples of 256 so every acc[j] is
  // computed from the same expression for any thread count
  unsigned nt = effective_threads();
  uint64_t chunk = ((grid_size + nt - 1) / nt + 255) & ~uint64_t(255);
  auto work = [&](unsigned tid) {
    uint64_t jlo = tid * chunk, jhi = std::min<uint64_t>(grid_size, jlo + chunk);
    if (jlo >= jhi) return;
    for (uint32_t n : elems) {
      uint64_t step = n % grid_size;
      double dt = kTwoPi * double(step) / double(grid_size);
      std::complex<double> rot{std::cos(dt), std::sin(dt)};
      for (uint64_t j0 = jlo; j0 < jhi; j0 += 256) {
        double t0 = kTwoPi * double((u128(j0) * step) % grid_size) / double(grid_size);
        std::complex<double> w{std::cos(t0), std::sin(t0)};
        uint64_t jend = std::min(jhi, j0 + 256);
        for (uint64_t j = j0; j < jend; ++j) {
          acc[j] += w;
          w *= rot;
        }
      }
    }
  };
  if (nt <= 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (unsigned t = 0; t < nt; ++t) ts.emplace_back(work, t);
    for (auto& t : ts) t.join();
  }
  return acc;
}

double lp_norm_grid(double ell, uint64_t N, uint64_t grid_size, const BMembership& mem) {
  if (grid_size < 4 * N) throw precondition_error("lp_norm_grid: grid_size below 4N");
  auto spec = grid_spectrum(N, grid_size, mem);
  kahan acc;
  for (auto& v : spec) acc.add(std::pow(std::abs(v), ell));
  return acc.value() / double(grid_size);
}

TrigoBoundReport bound_check_trigo(const Alpha& alpha, uint64_t N, double A,
                                   const BMembership& mem, double radius_exponent) {
  TrigoBoundReport rep;
  rep.q = alpha.q;
  double logN = std::log(double(N));
  if (radius_exponent < 0) radius_exponent = 2.0 * A + 14.0;
  rep.radius = std::abs(alpha.beta.hi + alpha.beta.lo);
  rep.radius_allowed = std::pow(logN, radius_exponent) / (double(alpha.q) * double(N));
  rep.in_regime = rep.radius <= rep.radius_allowed;
  rep.convergent_quality = rep.radius * double(alpha.q) * double(alpha.q) <= 1.0 + 1e-15;

  auto S = s_alpha(alpha, N, mem);
  rep.modulus = std::abs(S.value);
  rep.measured_ratio = rep.modulus * std::sqrt(logN) / double(N);

  // phi(q) by trial division, q is small here
  uint64_t q = alpha.q, phi = q;
  for (uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      phi -= phi / p;
      while (q % p == 0) q /= p;
    }
  if (q > 1) phi -= phi / q;
  rep.phi_q = double(phi);

  double l7 = std::pow(logN, 7.0);
  rep.envelope_small =
      1.0 / rep.phi_q + std::sqrt(double(alpha.q) / double(N)) * l7 + std::pow(logN, -A);
  rep.envelope_large =
      (1.0 / std::sqrt(double(alpha.q)) + std::pow(double(N), -1.0 / 6.0) +
       std::sqrt(double(alpha.q) / double(N))) *
      l7;
  rep.pass_small = rep.measured_ratio <= rep.envelope_small;
  rep.pass_large = rep.measured_ratio <= rep.envelope_large;
  return rep;
}

}  // namespace tsl
