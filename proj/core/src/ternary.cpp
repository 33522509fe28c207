#include "tsl/ternary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "tsl/dd.hpp"
#include "tsl/errors.hpp"
#include "tsl/expsum.hpp"
#include "tsl/prime_class.hpp"

namespace tsl {

double ArcDissection::length_sum() const {
  kahan s;
  for (auto& a : arcs) s.add(2.0 * a.radius);
  return s.value();
}

bool ArcDissection::covers(double alpha) const {
  alpha -= std::floor(alpha);
  for (auto& arc : arcs) {
    double c = double(arc.a) / double(arc.q);
    double d = std::abs(alpha - c);
    d = std::min(d, 1.0 - d);
    if (d <= arc.radius) return true;
  }
  return false;
}

ArcDissection dissect(uint64_t N, double K, double B_exponent) {
  if (N < 100) throw precondition_error("dissect: N >= 100 required");
  // the working regime is K <= log log N + 5; larger K still produces a
  // well-defined dissection and is allowed for exploration
  ArcDissection out;
  out.N = N;
  out.K = K;
  out.B_exponent = B_exponent;
  out.Q = double(N) / std::pow(std::log(double(N)), B_exponent);

  auto cps = class_primes_below(K, PrimeClass::mod4_res3());
  std::vector<uint64_t> qstars{1};
  for (uint64_t p : cps) {
    size_t base = qstars.size();
    for (size_t i = 0; i < base; ++i) qstars.push_back(qstars[i] * p);
  }

  for (uint64_t q2 : {1ull, 2ull, 4ull})
    for (uint64_t qs : qstars) {
      if (double(qs) > double(N) / (out.Q * double(q2))) continue;
      uint64_t q = q2 * qs;
      for (uint64_t a = 0; a < q; ++a) {
        if (q > 1 && std::gcd(a, q) != 1) continue;
        if (q == 1 && a != 0) continue;
        out.arcs.push_back({a, q, 1.0 / (double(q) * out.Q)});
      }
    }
  std::sort(out.arcs.begin(), out.arcs.end(), [](const auto& x, const auto& y) {
    return x.q != y.q ? x.q < y.q : x.a < y.a;
  });
  return out;
}

SubsetSpec SubsetSpec::residue_class(uint64_t mod, uint64_t r) {
  SubsetSpec s;
  s.kind = Kind::Residue;
  s.residue_mod = mod;
  s.residue = r % mod;
  return s;
}
SubsetSpec SubsetSpec::thinned(double density, uint64_t seed) {
  SubsetSpec s;
  s.kind = Kind::Thinned;
  s.density = density;
  s.seed = seed;
  return s;
}
SubsetSpec SubsetSpec::explicit_list(std::vector<uint32_t> xs) {
  SubsetSpec s;
  s.kind = Kind::Explicit;
  s.list = std::move(xs);
  return s;
}

namespace {
// per-element decision keyed by (seed, n): order-independent, reproducible
uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

std::vector<uint32_t> materialize(const SubsetSpec& spec, uint64_t N, const BMembership& mem) {
  if (N > mem.limit()) throw precondition_error("materialize: N above member table");
  std::vector<uint32_t> out;
  switch (spec.kind) {
    case SubsetSpec::Kind::Full:
      return mem.elements_upto(N);
    case SubsetSpec::Kind::Residue:
      for (uint32_t n : mem.elements_upto(N))
        if (n % spec.residue_mod == spec.residue) out.push_back(n);
      return out;
    case SubsetSpec::Kind::Thinned: {
      uint64_t thr = uint64_t(spec.density * double(~0ull));
      for (uint32_t n : mem.elements_upto(N))
        if (splitmix64(spec.seed ^ (uint64_t(n) * 0x9e3779b97f4a7c15ull)) <= thr)
          out.push_back(n);
      return out;
    }
    case SubsetSpec::Kind::Explicit:
      for (uint32_t n : spec.list)
        if (n >= 1 && n <= N && mem.test(n)) out.push_back(n);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
  }
  return out;
}

namespace {
std::vector<uint64_t> to_words(const std::vector<uint32_t>& xs, uint64_t N) {
  std::vector<uint64_t> w(N / 64 + 1, 0);
  for (uint32_t x : xs) w[x >> 6] |= 1ull << (x & 63);
  return w;
}
}  // namespace

uint64_t ternary_count(uint64_t N, const SubsetSpec& b1, const SubsetSpec& b2,
                       const BMembership& mem) {
  if (N % 4 != 3) throw precondition_error("ternary_count: N = 3 mod 4 required");
  if (N > 2000000ull) throw precondition_error("ternary_count: N above 2e6");
  auto l1 = materialize(b1, N, mem);
  auto l2 = materialize(b2, N, mem);
  auto w2 = to_words(l2, N);

  // rev[s] = 1 iff N - s is a member, s = 0..N; then for fixed b1 the count
  // over b2 is popcount(B2 & (rev >> b1)).
  std::vector<uint64_t> rev(N / 64 + 1, 0);
  for (uint64_t s = 0; s <= N; ++s) {
    uint64_t n = N - s;
    if (n >= 1 && mem.test(n)) rev[s >> 6] |= 1ull << (s & 63);
  }

  size_t nwords = w2.size();
  auto count_for = [&](uint64_t b) {
    uint64_t shift = b & 63, word0 = b >> 6, cnt = 0;
    for (size_t i = 0; i + word0 < nwords; ++i) {
      uint64_t r = rev[i + word0] >> shift;
      if (shift && i + word0 + 1 < rev.size()) r |= rev[i + word0 + 1] << (64 - shift);
      cnt += uint64_t(__builtin_popcountll(w2[i] & r));
    }
    return cnt;
  };

  unsigned nt = effective_threads();
  std::vector<uint64_t> partial(nt, 0);
  auto work = [&](unsigned tid) {
    uint64_t acc = 0;
    for (size_t i = tid; i < l1.size(); i += nt) acc += count_for(l1[i]);
    partial[tid] = acc;
  };
  if (nt <= 1) {
    work(0);
  } else {
    std::vector<std::thread> ts;
    for (unsigned t = 0; t < nt; ++t) ts.emplace_back(work, t);
    for (auto& t : ts) t.join();
  }
  uint64_t total = 0;
  for (uint64_t p : partial) total += p;  // integer merge: schedule-independent
  return total;
}

std::vector<uint32_t> pair_sum_counts(uint64_t N, const SubsetSpec& b1, const SubsetSpec& b2,
                                      const BMembership& mem) {
  auto l1 = materialize(b1, N, mem);
  auto l2 = materialize(b2, N, mem);
  std::vector<uint32_t> r2(N + 1, 0);
  for (uint32_t x : l1) {
    uint64_t lim = N - x;
    for (uint32_t y : l2) {
      if (y > lim) break;
      ++r2[x + uint64_t(y)];
    }
  }
  return r2;
}

TernaryMainTerm ternary_main_term(uint64_t N, double K, const SubsetSpec& b1,
                                  const SubsetSpec& b2, const BMembership& mem, double C) {
  TernaryMainTerm out;
  uint64_t M = 1, phiM = 1;
  for (uint64_t p : class_primes_below(K, PrimeClass::mod4_res3())) {
    M *= p;
    phiM *= p - 1;
  }
  out.M = M;
  auto r2 = pair_sum_counts(N, b1, b2, mem);

  kahan weighted;
  uint64_t pairs = 0;
  for (uint64_t s = 2; s <= N; ++s) {
    if (r2[s] == 0) continue;
    uint64_t n = N - s;
    if (std::gcd(n, M) != 1) continue;
    pairs += r2[s];
    if (n >= 3) weighted.add(double(r2[s]) / std::sqrt(std::log(double(n))));
  }
  out.pair_count_coprime = pairs;
  double ratioM = double(M) / double(phiM);
  out.flat = C * ratioM / std::sqrt(std::log(double(N))) * double(pairs);
  out.weighted = 4.0 * C * ratioM * weighted.value();
  return out;
}

MinorArcMass minor_arc_mass(uint64_t N, double K, double B_exponent, double ell,
                            uint64_t grid_size, const BMembership& mem) {
  if (grid_size < 4 * N) throw precondition_error("minor_arc_mass: grid_size below 4N");
  auto arcs = dissect(N, K, B_exponent);
  auto spec = grid_spectrum(N, grid_size, mem);

  MinorArcMass out;
  kahan lp;
  uint64_t covered = 0;
  for (uint64_t j = 0; j < grid_size; ++j) {
    double alpha = double(j) / double(grid_size);
    if (arcs.covers(alpha)) {
      ++covered;
      continue;
    }
    double m = std::abs(spec[j]);
    out.max_minor = std::max(out.max_minor, m);
    lp.add(std::pow(m, ell));
  }
  out.lp_integral_minor = lp.value() / double(grid_size);
  out.covered_fraction = double(covered) / double(grid_size);
  out.envelope = double(N) / (K * std::sqrt(std::log(double(N))));
  out.max_within_envelope = out.max_minor <= out.envelope;
  return out;
}

uint64_t ternary_count_bruteforce(uint64_t N, const std::vector<uint32_t>& b1,
                                  const std::vector<uint32_t>& b2, const BMembership& mem) {
  uint64_t c = 0;
  for (uint32_t x : b1)
    for (uint32_t y : b2) {
      uint64_t s = uint64_t(x) + y;
      if (s >= N) continue;
      uint64_t n = N - s;
      if (mem.test(n)) ++c;
    }
  return c;
}

}  // namespace tsl
