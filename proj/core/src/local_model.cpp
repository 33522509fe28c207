#include "tsl/local_model.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "tsl/errors.hpp"
#include "tsl/characters.hpp"
#include "tsl/prime_class.hpp"

namespace tsl {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// members of the model class: 3 <= n <= N, n = 1 mod 4, no class prime < K
// divides n
std::vector<uint32_t> model_class(uint64_t N, double K, const PrimeClass& cls) {
  std::vector<uint8_t> keep(N + 1, 0);
  for (uint64_t n = 5; n <= N; n += 4) keep[n] = 1;
  for (uint64_t p : class_primes_below(K, cls)) {
    uint64_t start = p;
    for (uint64_t m = start; m <= N; m += p) keep[m] = 0;
  }
  std::vector<uint32_t> out;
  for (uint64_t n = 5; n <= N; n += 4)
    if (keep[n]) out.push_back(uint32_t(n));
  return out;
}
}  // namespace

LocalModelParams make_local_model_params(double K, uint64_t N, double C, double C_tail,
                                         const FactorSieve& sieve) {
  (void)sieve;
  if (K < 2.0) throw precondition_error("local model: K >= 2 required");
  LocalModelParams p;
  p.K = K;
  p.N = N;
  p.C = C;
  p.C_tail = C_tail;
  uint64_t prod = 1, phi = 1;
  for (uint64_t q : class_primes_below(K, PrimeClass::mod4_res3())) {
    if (prod > UINT64_MAX / q) throw resource_error("local model: P(K) exceeds 64 bits");
    prod *= q;
    phi *= q - 1;
  }
  p.P = prod;
  p.delta_K = double(phi) / double(prod);
  p.leading = 4.0 * C / p.delta_K;
  return p;
}

std::complex<double> smooth_main(dd beta, uint64_t N) {
  if (N < 3) throw precondition_error("smooth_main: N >= 3 required");
  kahan re, im;
  bool has_beta = beta.hi != 0.0 || beta.lo != 0.0;
  for (uint64_t n = 5; n <= N; n += 4) {
    double w = 1.0 / std::sqrt(std::log(double(n)));
    if (has_beta) {
      double t = kTwoPi * dd_frac_mul_u(n, beta).hi;
      re.add(w * std::cos(t));
      im.add(w * std::sin(t));
    } else {
      re.add(w);
    }
  }
  return {re.value(), im.value()};
}

std::complex<double> s_flat(const Alpha& alpha, const LocalModelParams& params,
                            const FactorSieve& sieve) {
  (void)sieve;
  uint64_t N = params.N;
  auto elems = model_class(N, params.K, PrimeClass::mod4_res3());
  kahan re, im;
  bool has_beta = alpha.beta.hi != 0.0 || alpha.beta.lo != 0.0;
  for (uint32_t n : elems) {
    double w = 1.0 / std::sqrt(std::log(double(n)));
    double ph;
    if (alpha.q == 1) {
      ph = has_beta ? dd_frac_mul_u(n, alpha.beta).hi : 0.0;
    } else {
      double rat = double((u128(n) * uint64_t(alpha.a)) % alpha.q) / double(alpha.q);
      ph = has_beta ? dd_frac(dd_add_d(dd_frac_mul_u(n, alpha.beta), rat)).hi : rat;
    }
    double t = kTwoPi * ph;
    re.add(w * std::cos(t));
    im.add(w * std::sin(t));
  }
  return params.leading * std::complex<double>{re.value(), im.value()};
}

SigmaD sigma_d(uint64_t N, const Alpha& alpha, uint64_t d, const FactorSieve& sieve) {
  if (d == 0) throw precondition_error("sigma_d: d >= 1");
  SigmaD out;
  auto eval = [&](const Alpha& al) {
    kahan re, im;
    if (d % 2 == 0) return std::complex<double>{0.0, 0.0};  // no n = 1 mod 4
    bool has_beta = al.beta.hi != 0.0 || al.beta.lo != 0.0;
    // multiples of d that are 1 mod 4: n = d k with k = d mod 4, step 4d
    for (uint64_t n = d * (d % 4); n <= N; n += 4 * d) {
      if (n < 3) continue;
      double w = 1.0 / std::sqrt(std::log(double(n)));
      double ph;
      if (al.q == 1) {
        ph = has_beta ? dd_frac_mul_u(n, al.beta).hi : 0.0;
      } else {
        double rat = double((u128(n) * uint64_t(al.a)) % al.q) / double(al.q);
        ph = has_beta ? dd_frac(dd_add_d(dd_frac_mul_u(n, al.beta), rat)).hi : rat;
      }
      double t = kTwoPi * ph;
      re.add(w * std::cos(t));
      im.add(w * std::sin(t));
    }
    return std::complex<double>{re.value(), im.value()};
  };
  out.value = eval(alpha);

  // phase identity applies when q | 4d and d | P_{4;3}(infty)
  bool d_in_class = sieve.is_squarefree(d);
  if (d_in_class)
    for (auto [p, e] : sieve.factorize(d)) {
      (void)e;
      if (p % 4 != 3) {
        d_in_class = false;
        break;
      }
    }
  if (d == 1) d_in_class = true;
  if (d_in_class && (4 * d) % alpha.q == 0) {
    uint64_t q2 = 1, qs = alpha.q;
    while (qs % 2 == 0) {
      q2 *= 2;
      qs /= 2;
    }
    double phase = double((u128(uint64_t(alpha.a)) * qs) % q2) / double(q2);
    std::complex<double> factor{std::cos(kTwoPi * phase), std::sin(kTwoPi * phase)};
    Alpha beta_only = Alpha::from_dd(alpha.beta);
    std::complex<double> rhs = factor * eval(beta_only);
    out.identity_checked = true;
    out.identity_residual = std::abs(out.value - rhs);
  }
  return out;
}

MajorArcReport major_arc_compare(int64_t a, uint64_t q, double beta, uint64_t N, double K,
                                 const BMembership& mem, const FactorSieve& sieve,
                                 const LandauConstant& C) {
  MajorArcReport rep;
  uint64_t q2 = 1, qs = q;
  while (qs % 2 == 0) {
    q2 *= 2;
    qs /= 2;
  }
  if (q2 > 8) throw precondition_error("major_arc_compare: q_2 must be in {1,2,4,8}");
  rep.q2 = q2;
  rep.qstar = qs;

  auto pars = make_local_model_params(K, N, C.value, C.tail_bound, sieve);
  if (double(q) * double(pars.P) * std::abs(beta) > 1.0 + 1e-12)
    throw precondition_error("major_arc_compare: q P(K) |beta| <= 1 violated");

  Alpha alpha = Alpha::rational(a, q, beta);
  rep.measured = s_alpha(alpha, N, mem).value;
  rep.model = s_flat(alpha, pars, sieve);

  bool qs_in_class = true;
  {
    uint64_t m = qs;
    while (m > 1) {
      uint64_t p = sieve.spf(m);
      if (p % 4 != 3) {
        qs_in_class = false;
        break;
      }
      while (m % p == 0) m /= p;
    }
  }

  std::complex<double> sm = smooth_main(dd_from(beta), N);
  double band_scale = 0.0;
  if (!qs_in_class) {
    rep.regime = 3;
    rep.predicted = {0.0, 0.0};
  } else if (q2 != 4) {
    rep.regime = 1;
    double coef = 4.0 * C.value * sieve.moebius(q) / double(sieve.euler_phi(q));
    rep.predicted = coef * sm;
    band_scale = std::abs(4.0 * sieve.moebius(q) / double(sieve.euler_phi(q)));
  } else {
    rep.regime = 2;
    double coef = 4.0 * C.value * sieve.moebius(qs) / double(sieve.euler_phi(qs));
    rep.predicted = std::complex<double>{0.0, double(chi4(a))} * coef * sm;
    band_scale = std::abs(4.0 * sieve.moebius(qs) / double(sieve.euler_phi(qs)));
  }
  rep.prediction_band = band_scale * C.tail_bound * std::abs(sm);
  rep.abs_dev_measured = std::abs(rep.measured - rep.predicted);
  double denom = std::max(std::abs(rep.predicted), 1e-300);
  rep.rel_dev_measured = rep.abs_dev_measured / denom;
  rep.abs_dev_model = std::abs(rep.model - rep.predicted);
  return rep;
}

double lp_norm_flat(double ell, const LocalModelParams& params, uint64_t grid_size,
                    const FactorSieve& sieve) {
  (void)sieve;
  uint64_t N = params.N;
  if (grid_size < 4 * N) throw precondition_error("lp_norm_flat: grid_size below 4N");
  auto elems = model_class(N, params.K, PrimeClass::mod4_res3());
  std::vector<std::complex<double>> acc(grid_size, {0.0, 0.0});
  for (uint32_t n : elems) {
    double w = 1.0 / std::sqrt(std::log(double(n)));
    uint64_t step = n % grid_size;
    double dt = kTwoPi * double(step) / double(grid_size);
    std::complex<double> rot{std::cos(dt), std::sin(dt)};
    std::complex<double> cur{w, 0.0};
    for (uint64_t j = 0; j < grid_size; ++j) {
      acc[j] += cur;
      if ((j & 255) == 255) {
        double t = kTwoPi * double((u128(j + 1) * step) % grid_size) / double(grid_size);
        cur = {w * std::cos(t), w * std::sin(t)};
      } else {
        cur *= rot;
      }
    }
  }
  kahan s;
  double lead = std::abs(params.leading);
  for (auto& v : acc) s.add(std::pow(lead * std::abs(v), ell));
  return s.value() / double(grid_size);
}

}  // namespace tsl
