#include "tsl/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "tsl/dd.hpp"
#include "tsl/errors.hpp"

namespace tsl {

namespace {

struct UnitComponent {
  uint32_t pe;                  // prime power q_i
  std::vector<uint32_t> gens;   // generators of (Z/pe)^*
  std::vector<uint32_t> orders; // matching orders
};

uint32_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return uint32_t(r);
}

std::vector<uint32_t> prime_factors_u32(uint32_t n) {
  std::vector<uint32_t> f;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

uint32_t primitive_root(uint32_t pe, uint32_t p) {
  uint32_t phi = pe / p * (p - 1);
  auto qs = prime_factors_u32(phi);
  for (uint32_t g = 2; g < pe; ++g) {
    if (std::gcd(g, pe) != 1) continue;
    bool ok = true;
    for (uint32_t f : qs)
      if (pow_mod(g, phi / f, pe) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw resource_error("primitive_root: none found");
}

std::vector<UnitComponent> unit_components(uint32_t q) {
  std::vector<UnitComponent> comps;
  uint32_t m = q;
  uint32_t two = 0;
  while (m % 2 == 0) {
    two = two ? two * 2 : 2;
    m /= 2;
  }
  if (two == 2) {
    // trivial group
  } else if (two == 4) {
    comps.push_back({4, {3}, {2}});
  } else if (two >= 8) {
    comps.push_back({two, {two - 1, 5}, {2, two / 4}});
  }
  for (uint32_t d = 3; uint64_t(d) * d <= m; d += 2)
    if (m % d == 0) {
      uint32_t pe = 1;
      while (m % d == 0) {
        pe *= d;
        m /= d;
      }
      comps.push_back({pe, {primitive_root(pe, d)}, {pe / d * (d - 1)}});
    }
  if (m > 1) comps.push_back({m, {primitive_root(m, m)}, {m - 1}});
  return comps;
}

}  // namespace

std::vector<DirichletCharacter> characters_mod(uint32_t q) {
  if (q == 0) throw precondition_error("characters_mod: q = 0");
  if (q > 10000) throw resource_error("characters_mod: q above table cap 1e4");

  auto comps = unit_components(q);
  size_t ncomp = comps.size();

  // Discrete logs per component: dlog[i][n mod pe] -> exponent vector entry.
  std::vector<std::vector<uint32_t>> dlog(ncomp);
  for (size_t i = 0; i < ncomp; ++i) {
    auto& c = comps[i];
    dlog[i].assign(c.pe, DirichletCharacter::kNonUnit);
    if (c.gens.size() == 1) {
      uint64_t x = 1;
      for (uint32_t k = 0; k < c.orders[0]; ++k) {
        dlog[i][x] = k;
        x = x * c.gens[0] % c.pe;
      }
    } else {
      // two generators (powers of two >= 8): store k0 + order1 * k1
      for (uint32_t k0 = 0; k0 < c.orders[0]; ++k0)
        for (uint32_t k1 = 0; k1 < c.orders[1]; ++k1) {
          uint64_t x = uint64_t(pow_mod(c.gens[0], k0, c.pe)) * pow_mod(c.gens[1], k1, c.pe) % c.pe;
          dlog[i][x] = k0 + c.orders[0] * k1;
        }
    }
  }

  uint32_t L = 1;
  std::vector<uint32_t> all_orders;
  for (auto& c : comps)
    for (uint32_t o : c.orders) {
      all_orders.push_back(o);
      L = uint32_t(std::lcm(L, o));
    }
  size_t ngen = all_orders.size();

  auto roots = std::make_shared<std::vector<std::complex<double>>>(L);
  for (uint32_t k = 0; k < L; ++k) {
    // quarter multiples come out exact
    if (4ull * k % L == 0) {
      uint64_t quadrant = 4ull * k / L;
      static const std::complex<double> exact[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      (*roots)[k] = exact[quadrant];
    } else {
      double t = 2.0 * std::numbers::pi * double(k) / double(L);
      (*roots)[k] = {std::cos(t), std::sin(t)};
    }
  }

  // Per-residue generator exponents.
  std::vector<std::vector<uint32_t>> gexp(q, std::vector<uint32_t>());
  std::vector<bool> unit(q, false);
  for (uint32_t n = 0; n < q; ++n) {
    if (std::gcd<uint64_t>(n, q) != 1) continue;
    unit[n] = true;
    std::vector<uint32_t> e;
    e.reserve(ngen);
    for (size_t i = 0; i < ncomp; ++i) {
      uint32_t r = n % comps[i].pe;
      uint32_t d = dlog[i][r];
      if (comps[i].gens.size() == 1) {
        e.push_back(d);
      } else {
        e.push_back(d % comps[i].orders[0]);
        e.push_back(d / comps[i].orders[0]);
      }
    }
    gexp[n] = std::move(e);
  }

  // Enumerate characters: one index t_j mod order_j per generator.
  uint64_t count = 1;
  for (uint32_t o : all_orders) count *= o;

  std::vector<DirichletCharacter> chars;
  chars.reserve(count);
  std::vector<uint32_t> t(ngen, 0);
  for (uint64_t idx = 0; idx < count; ++idx) {
    DirichletCharacter chi;
    chi.q_ = q;
    chi.L_ = L;
    chi.roots_ = roots;
    chi.principal_ = true;
    for (uint32_t tj : t)
      if (tj != 0) chi.principal_ = false;
    chi.expo_.assign(q == 1 ? 1 : q, DirichletCharacter::kNonUnit);
    if (q == 1) {
      chi.expo_[0] = 0;  // the trivial character: chi(n) = 1 for all n
    } else {
      for (uint32_t n = 0; n < q; ++n) {
        if (!unit[n]) continue;
        uint64_t e = 0;
        for (size_t j = 0; j < ngen; ++j)
          e = (e + uint64_t(t[j]) * gexp[n][j] % all_orders[j] * (L / all_orders[j])) % L;
        chi.expo_[n] = uint32_t(e);
      }
    }
    chars.push_back(std::move(chi));
    // odometer
    for (size_t j = 0; j < ngen; ++j) {
      if (++t[j] < all_orders[j]) break;
      t[j] = 0;
    }
  }

  // Conductor: smallest f | q with chi(n) = 1 for every unit n = 1 mod f.
  std::vector<uint32_t> divisors;
  for (uint32_t f = 1; f <= q; ++f)
    if (q % f == 0) divisors.push_back(f);
  for (auto& chi : chars) {
    for (uint32_t f : divisors) {
      bool ok = true;
      for (uint32_t n = 1 % q; n < q; n += f) {
        if (!unit[n]) continue;
        if (chi.expo_[n] != 0) {
          ok = false;
          break;
        }
      }
      if (q == 1) ok = true;
      if (ok) {
        chi.conductor_ = f;
        break;
      }
    }
  }
  return chars;
}

int chi4(int64_t n) {
  int64_t r = n % 4;
  if (r < 0) r += 4;
  if (r % 2 == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  uint32_t q = chi.modulus();
  kahan re, im;
  for (uint32_t b = 1; b <= q; ++b) {
    if (std::gcd<uint64_t>(b, q) != 1) continue;
    auto cv = chi(b);
    if (cv == std::complex<double>(0.0, 0.0)) continue;
    double t = 2.0 * std::numbers::pi * double(b % q) / double(q);
    std::complex<double> e{std::cos(t), std::sin(t)};
    auto term = cv * e;
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

int64_t ramanujan_sum(uint64_t q, int64_t n, const FactorSieve& sieve) {
  if (q > sieve.limit()) throw precondition_error("ramanujan_sum: q above sieve limit");
  // enumerate divisors of q from its factorization
  auto fac = sieve.factorize(q);
  std::vector<uint64_t> divs{1};
  for (auto [p, e] : fac) {
    size_t base = divs.size();
    uint64_t pk = 1;
    for (uint32_t i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  int64_t s = 0;
  for (uint64_t d : divs) {
    int64_t r = n % int64_t(d);
    if (r != 0) continue;
    s += int64_t(d) * sieve.moebius(q / d);
  }
  return s;
}

Lprime4 lprime_chi4(uint64_t terms) {
  if (terms < 10000) throw precondition_error("lprime_chi4: terms below 1e4");
  // Summed from the tail up so the small terms are not lost.
  kahan acc;
  for (uint64_t k = terms;; --k) {
    double a = double(4 * k + 1);
    double t = (2.0 * std::log(a) - a * std::log1p(2.0 / a)) / (a * (a + 2.0));
    acc.add(t);
    if (k == 0) break;
  }
  double K = double(terms);
  // terms decrease like 2 log(4k)/(4k)^2; integral comparison
  double tail = (std::log(4.0 * K + 1.0) + 1.0) / (2.0 * (4.0 * K + 1.0));
  return {-acc.value(), tail};
}

double lprime_chi4_combined(double lprime_value) {
  return 0.5 * (lprime_value / (std::numbers::pi / 4.0) - std::numbers::egamma - std::numbers::ln2);
}

}  // namespace tsl
