#include "tsl/sieve_identity.hpp"

#include <algorithm>
#include <cmath>

#include "tsl/errors.hpp"

namespace tsl {

namespace {

double kInf = 1e300;  // stand-in for P^-(1) = +infinity in range tests

uint64_t least_class_prime_factor(uint64_t n, const FactorSieve& sieve) {
  // n squarefree product of class primes in all uses; plain least factor
  return n == 1 ? 0 : sieve.spf(n);
}

double pminus_or_inf(uint64_t n, const FactorSieve& sieve) {
  return n == 1 ? kInf : double(sieve.spf(n));
}

int mu_of_squarefree(uint64_t d, const FactorSieve& sieve) { return sieve.moebius(d); }

}  // namespace

std::vector<uint64_t> class_divisors(double z, const PrimeClass& cls) {
  auto ps = class_primes_below(z, cls);
  if (ps.size() > 20) throw resource_error("class_divisors: more than 2^20 divisors");
  std::vector<uint64_t> divs{1};
  divs.reserve(size_t(1) << ps.size());
  for (uint64_t p : ps) {
    size_t base = divs.size();
    for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * p);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rat rho(uint64_t m, double z, double Z, const PrimeClass& cls, const FactorSieve& sieve,
        bool include_hi) {
  if (m > sieve.limit()) throw precondition_error("rho: m above sieve limit");
  uint32_t count = 0;
  for (auto [p, e] : sieve.factorize(m)) {
    (void)e;
    if (!cls.contains(p)) continue;
    if (double(p) < z) return Rat(0);
    bool in_hi = include_hi ? double(p) <= Z : double(p) < Z;
    if (double(p) >= z && in_hi) ++count;
  }
  return Rat(1, 1 + count);
}

bool Nabla::operator()(uint64_t d, const FactorSieve& sieve) const {
  switch (kind) {
    case Kind::Threshold:
      return double(d) < threshold;
    case Kind::OmegaLE:
      return sieve.omega(d) <= omega_le;
    case Kind::Custom:
      return custom(d);
  }
  return false;
}

void Nabla::validate(const std::vector<uint64_t>& divisors, const FactorSieve& sieve) const {
  if (!(*this)(1, sieve)) throw precondition_error("Nabla: nabla(1) = 1 is required");
  if (kind != Kind::Custom) return;  // threshold and omega forms are divisor-closed
  for (uint64_t d : divisors) {
    if (!custom(d)) continue;
    for (auto [p, e] : sieve.factorize(d)) {
      (void)e;
      if (!custom(d / p))
        throw precondition_error("Nabla: custom predicate not divisor-closed at " +
                                 std::to_string(d));
    }
  }
}

DecompositionReport fsi_check(const PsiFn& psi, const Nabla& nabla, double z,
                              const PrimeClass& cls, const FactorSieve& sieve) {
  auto divs = class_divisors(z, cls);
  nabla.validate(divs, sieve);
  auto ps = class_primes_below(z, cls);

  i128 lhs = 0, t1 = 0, t2 = 0;
  for (uint64_t d : divs) lhs += i128(mu_of_squarefree(d, sieve)) * psi(d);
  for (uint64_t d : divs)
    if (nabla(d, sieve)) t1 += i128(mu_of_squarefree(d, sieve)) * psi(d);

  for (uint64_t l : divs) {
    if (l == 1) continue;  // nbar(1) = 0
    uint64_t pm = least_class_prime_factor(l, sieve);
    int nbar = int(nabla(l / pm, sieve)) - int(nabla(l, sieve));
    if (nbar == 0) continue;
    // delta over divisors of P(P^-(l)): class primes < pm
    std::vector<uint64_t> sub{1};
    for (uint64_t p : ps) {
      if (p >= pm) break;
      size_t base = sub.size();
      for (size_t i = 0; i < base; ++i) sub.push_back(sub[i] * p);
    }
    for (uint64_t delta : sub)
      t2 += i128(nbar) * mu_of_squarefree(l * delta, sieve) * psi(l * delta);
  }

  DecompositionReport rep;
  rep.id = "fsi";
  rep.exact = true;
  rep.lhs = double(lhs);
  rep.add_part("truncated", double(t1));
  rep.add_part("remainder", double(t2));
  i128 res = lhs - t1 - t2;
  rep.residual = double(res);
  rep.residual_exact = Rat(res);
  rep.residual_is_zero = (res == 0);
  rep.bound = 0.0;
  rep.satisfied = rep.residual_is_zero;
  return rep;
}

DecompositionReport buchstab_check(const PsiFn& psi, uint64_t ell, double M,
                                   const PrimeClass& cls, const FactorSieve& sieve) {
  if (ell < 2) throw precondition_error("buchstab_check: ell must exceed 1");
  if (!sieve.is_squarefree(ell)) throw precondition_error("buchstab_check: ell not squarefree");
  for (auto [p, e] : sieve.factorize(ell)) {
    (void)e;
    if (!cls.contains(p)) throw precondition_error("buchstab_check: ell has a non-class factor");
  }
  uint64_t pm = sieve.spf(ell);
  auto ps = class_primes_below(double(pm), cls);  // class primes < P^-(ell)

  std::vector<uint64_t> sub{1};
  for (uint64_t p : ps) {
    size_t base = sub.size();
    for (size_t i = 0; i < base; ++i) sub.push_back(sub[i] * p);
  }
  i128 lhs = 0;
  for (uint64_t delta : sub)
    if (double(ell) * double(delta) >= M)
      lhs += i128(mu_of_squarefree(delta, sieve)) * psi(ell * delta);

  i128 rhs = double(ell) >= M ? i128(psi(ell)) : 0;
  for (uint64_t pp : ps) {
    std::vector<uint64_t> sub2{1};
    for (uint64_t p : ps) {
      if (p >= pp) break;
      size_t base = sub2.size();
      for (size_t i = 0; i < base; ++i) sub2.push_back(sub2[i] * p);
    }
    for (uint64_t d : sub2)
      if (double(ell) * double(d) * double(pp) >= M)
        rhs -= i128(mu_of_squarefree(d, sieve)) * psi(ell * d * pp);
  }

  DecompositionReport rep;
  rep.id = "buchstab";
  rep.exact = true;
  rep.lhs = double(lhs);
  rep.add_part("rhs", double(rhs));
  i128 res = lhs - rhs;
  rep.residual = double(res);
  rep.residual_exact = Rat(res);
  rep.residual_is_zero = (res == 0);
  rep.satisfied = rep.residual_is_zero;
  return rep;
}

HarmanSplit harman_decompose(uint64_t d, double M0, const FactorSieve& sieve) {
  if (M0 < 1.0) throw precondition_error("harman_decompose: M0 must be >= 1");
  if (double(d) < M0) throw precondition_error("harman_decompose: requires d >= M0");
  if (!sieve.is_squarefree(d)) throw precondition_error("harman_decompose: d not squarefree");

  std::vector<uint64_t> ps;
  for (auto [p, e] : sieve.factorize(d)) {
    (void)e;
    ps.push_back(p);
  }
  std::sort(ps.rbegin(), ps.rend());  // descending

  // minimal prefix product >= M0; the empty prefix (l = 1) counts when 1 >= M0
  uint64_t ell = 1;
  size_t i = 0;
  while (double(ell) < M0) ell *= ps[i++];
  uint64_t delta = 1;
  for (; i < ps.size(); ++i) delta *= ps[i];
  return {delta, ell};
}

DecompositionReport simple_sieve_decompose(const PsiFn& psi, double z, double M, double M0,
                                           const PrimeClass& cls, const FactorSieve& sieve) {
  if (!(M >= M0 && M0 >= 1.0))
    throw precondition_error("simple_sieve_decompose: need M >= M0 >= 1");
  auto divs = class_divisors(z, cls);
  auto ps = class_primes_below(z, cls);

  i128 lhs = 0;
  for (uint64_t d : divs) lhs += i128(mu_of_squarefree(d, sieve)) * psi(d);

  i128 t1 = 0;
  for (uint64_t d : divs)
    if (double(d) < M) t1 += i128(mu_of_squarefree(d, sieve)) * psi(d);

  // Harman-range linear piece: M <= l < M0 P^-(l)
  i128 t2 = 0;
  for (uint64_t l : divs) {
    double pm = pminus_or_inf(l, sieve);
    if (double(l) >= M && double(l) < M0 * pm) t2 += i128(mu_of_squarefree(l, sieve)) * psi(l);
  }

  // triple sum over M0 <= l < M0 P^-(l), p' < P^-(l), d | P(p'), l d p' >= M
  i128 t3 = 0;
  for (uint64_t l : divs) {
    double pm = pminus_or_inf(l, sieve);
    if (!(double(l) >= M0 && double(l) < M0 * pm)) continue;
    int mul = mu_of_squarefree(l, sieve);
    for (uint64_t pp : ps) {
      if (double(pp) >= pm) break;
      std::vector<uint64_t> sub{1};
      for (uint64_t p : ps) {
        if (p >= pp) break;
        size_t base = sub.size();
        for (size_t i = 0; i < base; ++i) sub.push_back(sub[i] * p);
      }
      for (uint64_t d : sub)
        if (double(l) * double(d) * double(pp) >= M)
          t3 += i128(mul) * mu_of_squarefree(d, sieve) * psi(l * d * pp);
    }
  }

  // Independent second route: d < M piece plus the two-term Harman form
  //   sum_{l: M0 <= l < M0 P^-(l)} mu(l) sum_{delta | P(P^-(l)), delta l >= M}
  //     mu(delta) psi(l delta)
  i128 t2b = 0;
  for (uint64_t l : divs) {
    double pm = pminus_or_inf(l, sieve);
    if (!(double(l) >= M0 && double(l) < M0 * pm)) continue;
    int mul = mu_of_squarefree(l, sieve);
    std::vector<uint64_t> sub{1};
    for (uint64_t p : ps) {
      if (double(p) >= pm) break;
      size_t base = sub.size();
      for (size_t i = 0; i < base; ++i) sub.push_back(sub[i] * p);
    }
    for (uint64_t delta : sub)
      if (double(delta) * double(l) >= M)
        t2b += i128(mul) * mu_of_squarefree(delta, sieve) * psi(l * delta);
  }

  DecompositionReport rep;
  rep.id = "simple_sieve";
  rep.exact = true;
  rep.lhs = double(lhs);
  rep.add_part("d_below_M", double(t1));
  rep.add_part("harman_linear", double(t2));
  rep.add_part("triple", double(t3));
  rep.add_part("two_term_route", double(t1 + t2b));
  i128 res = lhs - (t1 + t2 - t3);
  i128 res2 = lhs - (t1 + t2b);
  rep.residual = double(res);
  rep.residual_exact = Rat(res);
  rep.residual_is_zero = (res == 0) && (res2 == 0);
  rep.satisfied = rep.residual_is_zero;
  if (res2 != 0) rep.note = "two-term route residual nonzero";
  return rep;
}

namespace {

struct ClassInterval {
  std::vector<uint64_t> primes;  // class primes in the interval
  // omega#(n): distinct interval primes dividing n
  uint32_t omega_sharp(uint64_t n, const FactorSieve& sieve, const PrimeClass& cls, double lo,
                       double hi, bool include_hi) const {
    uint32_t c = 0;
    for (auto [p, e] : sieve.factorize(n)) {
      (void)e;
      if (!cls.contains(p)) continue;
      double pd = double(p);
      if (pd >= lo && (include_hi ? pd <= hi : pd < hi)) ++c;
    }
    return c;
  }
};

bool coprime_to_class_below(uint64_t n, double z, const PrimeClass& cls,
                            const FactorSieve& sieve) {
  for (auto [p, e] : sieve.factorize(n)) {
    (void)e;
    if (cls.contains(p) && double(p) < z) return false;
  }
  return true;
}

}  // namespace

FirstbaseReport firstbase_decompose(const WeightedSeq& u, double z, double Z,
                                    const PrimeClass& cls, const FactorSieve& sieve,
                                    bool include_hi) {
  if (u.N > sieve.limit()) throw precondition_error("firstbase_decompose: N above sieve limit");
  uint64_t N = u.N;
  ClassInterval ci{class_primes_in(z, Z, include_hi, cls)};

  auto omega_sharp = [&](uint64_t n) {
    return ci.omega_sharp(n, sieve, cls, z, Z, include_hi);
  };

  Rat lhs, t1, t2, t3;
  for (uint64_t n = 1; n <= N; ++n) {
    if (u.u[n].is_zero()) continue;
    if (!coprime_to_class_below(n, z, cls, sieve)) continue;
    t1 += u.u[n];
    if (omega_sharp(n) == 0) lhs += u.u[n];
  }
  for (uint64_t p : ci.primes) {
    for (uint64_t m = 1; m <= N / p; ++m) {
      if (u.u[m * p].is_zero()) continue;
      if (!coprime_to_class_below(m, z, cls, sieve)) continue;
      t2 += u.u[m * p] / Rat(1 + omega_sharp(m));
    }
    for (uint64_t l = 1; l <= N / (p * p); ++l) {
      if (u.u[p * p * l].is_zero()) continue;
      if (!coprime_to_class_below(l, z, cls, sieve)) continue;
      uint32_t os = omega_sharp(p * l);
      t3 += u.u[p * p * l] / Rat(i128(os) * (1 + os));
    }
  }

  FirstbaseReport out;
  out.report.id = "firstbase";
  out.report.exact = true;
  out.report.lhs = lhs.to_double();
  out.report.add_part("sift_at_z", t1.to_double());
  out.report.add_part("bilinear_rho", t2.to_double());
  out.report.add_part("discarded_square", t3.to_double());
  Rat res = lhs - (t1 - t2 - t3);
  out.report.residual = res.to_double();
  out.report.residual_exact = res;
  out.report.residual_is_zero = res.is_zero();
  out.report.satisfied = res.is_zero();

  out.discarded = t3.abs().to_double();
  double l2 = std::sqrt(u.sum_abs_sq().to_double());
  out.bound_l2 = 2.0 * std::sqrt(double(N) / z) * l2;
  out.linf_applicable = u.bounded_by_one();
  out.bound_linf = double(N) / z;
  out.discard_within_bounds =
      out.discarded <= out.bound_l2 && (!out.linf_applicable || out.discarded <= out.bound_linf);
  return out;
}

VinoReport vino_decompose(const WeightedSeq& u, const SieveParams& params,
                          const PrimeClass& cls, const FactorSieve& sieve, bool include_hi) {
  const double z = params.z, Z = params.Z, D = params.D;
  if (!(2.0 <= z && z <= D)) throw precondition_error("vino_decompose: need 2 <= z <= D");
  if (Z < z) throw precondition_error("vino_decompose: need Z >= z");
  uint64_t N = u.N;
  if (N > sieve.limit()) throw precondition_error("vino_decompose: N above sieve limit");

  ClassInterval ci{class_primes_in(z, Z, include_hi, cls)};
  auto omega_sharp = [&](uint64_t n) {
    return ci.omega_sharp(n, sieve, cls, z, Z, include_hi);
  };

  // LHS: n <= N coprime to every class prime < z and to every interval prime
  Rat lhs;
  uint64_t support_lo = N + 1;
  for (uint64_t n = 1; n <= N; ++n) {
    if (u.u[n].is_zero()) continue;
    support_lo = std::min(support_lo, n);
    if (coprime_to_class_below(n, z, cls, sieve) && omega_sharp(n) == 0) lhs += u.u[n];
  }

  Rat lin;
  for (uint64_t d : class_divisors(z, cls)) {
    if (double(d) > D) continue;
    Rat s;
    for (uint64_t n = d; n <= N; n += d) s += u.u[n];
    lin += Rat(sieve.moebius(d)) * s;
  }

  Rat bil;
  for (uint64_t p : ci.primes)
    for (uint64_t m = 1; m <= N / p; ++m) {
      if (u.u[m * p].is_zero()) continue;
      Rat r = rho(m, z, Z, cls, sieve, include_hi);
      if (!r.is_zero()) bil += r * u.u[m * p];
    }

  Rat res = lhs - lin + bil;

  VinoReport out;
  out.report.id = "vino";
  out.report.exact = true;
  out.report.lhs = lhs.to_double();
  out.report.add_part("linear", lin.to_double());
  out.report.add_part("bilinear_rho", bil.to_double());
  out.report.residual = res.to_double();
  out.report.residual_exact = res;
  out.report.residual_is_zero = res.is_zero();

  double l2sq = u.sum_abs_sq().to_double();
  double tail = std::exp(-std::log(D) / std::log(z)) * std::pow(std::log(3.0 * z), 31.0);
  out.bound_E = std::sqrt(double(N) * l2sq) * (1.0 / std::sqrt(z) + tail);
  out.bound_E_improved = double(N) / z + std::sqrt(double(N) * l2sq) * tail;

  out.eprime_applicable = u.bounded_by_one();
  out.U = support_lo <= N ? double(N - support_lo + 1) : 0.0;
  double logD = std::log(D), logz = std::log(z);
  double inner = std::log(logD / (2.0 * logz));
  out.bound_Eprime =
      out.U / z + double(N) * std::exp(-(logD / logz) * inner) * std::sqrt(logz);

  double bound = out.bound_E;
  if (u.bounded_by_one()) bound = std::min(bound, out.bound_E_improved);
  out.report.bound = bound;
  out.report.satisfied = std::abs(out.report.residual) <= bound;
  return out;
}

RankinTail rankin_tail(double D, double z, const PrimeClass& cls, const FactorSieve& sieve) {
  RankinTail out;
  Rat s;
  for (uint64_t d : class_divisors(z, cls)) {
    (void)sieve;
    if (double(d) > D) s += Rat(1, i128(d));
  }
  out.exact = s;
  out.lhs = s.to_double();
  double logD = std::log(std::max(D, 1.0)), logz = std::log(z);
  out.regime_ok = z >= 10.0 && 2.0 * logD >= logz;
  double inner = logD > 0 ? std::log(logD / (2.0 * logz)) : 0.0;
  out.envelope = std::sqrt(logz) * std::exp(-(logD / logz) * inner);
  return out;
}

}  // namespace tsl
