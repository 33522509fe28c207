#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <random>

#include "tsl/expsum.hpp"
#include "tsl/two_squares.hpp"

using namespace tsl;

namespace {
// independent direct summation with plain double phases
std::complex<double> direct_sum(double alpha, uint64_t N, const BMembership& mem,
                                uint64_t q_sift = 1) {
  std::complex<double> s{0, 0};
  for (uint64_t n = 1; n <= N; ++n) {
    if (!mem.test(n)) continue;
    if (q_sift != 1 && std::gcd(n, q_sift) != 1) continue;
    double ph = std::fmod(double(n) * alpha, 1.0);
    s += std::complex<double>{std::cos(2 * std::numbers::pi * ph),
                              std::sin(2 * std::numbers::pi * ph)};
  }
  return s;
}
}  // namespace

TEST_CASE("structured values") {
  BMembership mem(100000);
  CHECK(s_alpha(Alpha::rational(0, 1), 10, mem).value.real() == doctest::Approx(2.0));

  for (uint64_t N : {1000ull, 10000ull, 100000ull}) {
    double BN = double(count_b(N, mem));
    auto S2 = s_alpha(Alpha::rational(1, 2), N, mem);
    CHECK(std::abs(S2.value - std::complex<double>(-BN, 0)) < 1e-9 * BN);
    auto S4 = s_alpha(Alpha::rational(1, 4), N, mem);
    CHECK(std::abs(S4.value - std::complex<double>(0, BN)) < 1e-9 * BN);
  }
}

TEST_CASE("result invariants") {
  BMembership mem(20000);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  uint64_t N = 20000;
  double BN = double(count_b(N, mem));
  for (int t = 0; t < 12; ++t) {
    double x = unif(rng);
    auto Sp = s_alpha(Alpha::from_dd(dd_from(x)), N, mem);
    auto Sm = s_alpha(Alpha::from_dd(dd_from(1.0 - x)), N, mem);  // = S(-x)
    CHECK(std::abs(Sp.value - std::conj(Sm.value)) < 1e-9 * BN + 1e-9);
    CHECK(std::abs(Sp.value) <= BN + 1e-9 * BN);
    CHECK(Sp.terms == uint64_t(BN));
    // periodicity: alpha and alpha + 1 give the same sum
    auto Sshift = s_alpha(Alpha::rational(0, 1, x + 1.0), N, mem);
    CHECK(std::abs(Sp.value - Sshift.value) < 1e-9 * BN + 1e-9);
  }
}

TEST_CASE("cross-implementation check at small rational points") {
  BMembership mem(30000);
  for (uint64_t q = 1; q <= 8; ++q)
    for (uint64_t a = 0; a < q; ++a) {
      if (q > 1 && std::gcd(a, q) != 1) continue;
      auto S = s_alpha(Alpha::rational(int64_t(a), q), 30000, mem);
      auto D = direct_sum(double(a) / double(q), 30000, mem);
      CHECK(std::abs(S.value - D) <= 1e-6 * (std::abs(D) + 1.0));
    }
}

TEST_CASE("deterministic across thread counts") {
  BMembership mem(200000);
  Alpha a = Alpha::sqrt2();
  setenv("TSL_THREADS", "1", 1);
  auto S1 = s_alpha(a, 200000, mem);
  auto G1 = grid_spectrum(2000, 8000, mem);
  setenv("TSL_THREADS", "5", 1);
  auto S5 = s_alpha(a, 200000, mem);
  auto G5 = grid_spectrum(2000, 8000, mem);
  unsetenv("TSL_THREADS");
  CHECK(S1.value.real() == S5.value.real());  // bit identical
  CHECK(S1.value.imag() == S5.value.imag());
  bool grids_identical = true;
  for (size_t j = 0; j < G1.size(); ++j)
    if (G1[j] != G5[j]) grids_identical = false;
  CHECK(grids_identical);
}

TEST_CASE("sifted variant") {
  BMembership mem(10000);
  auto S = s_q(Alpha::rational(0, 1), 30, 1, mem);
  CHECK(S.value.real() == doctest::Approx(6.0));
  auto S5 = s_q(Alpha::rational(0, 1), 30, 5, mem);
  CHECK(S5.value.real() == doctest::Approx(4.0));  // drops 5 and 25
  // only the prime support of the sift modulus matters; 3 never divides a member
  auto S15 = s_q(Alpha::rational(0, 1), 30, 15, mem);
  CHECK(S15.value.real() == doctest::Approx(S5.value.real()));
  auto Sx = s_q(Alpha::sqrt2(), 10000, 5, mem);
  auto Sy = s_q(Alpha::sqrt2(), 10000, 15, mem);
  CHECK(std::abs(Sx.value - Sy.value) < 1e-9);
}

TEST_CASE("family sums") {
  BMembership mem(10000);
  Alpha a = Alpha::sqrt2();
  double f1 = family_sum(a, 1, 10000, mem);
  CHECK(f1 == doctest::Approx(std::abs(s_alpha(a, 10000, mem).value)).epsilon(1e-12));
  double BN = double(count_b(10000, mem));
  CHECK(family_sum(Alpha::rational(0, 1), 7, 10000, mem) == doctest::Approx(7.0 * BN));
  CHECK_THROWS_AS(family_sum(a, 2000, 1000000, mem), precondition_error);
}

TEST_CASE("grid norms") {
  BMembership mem(4000);
  uint64_t N = 2000;
  double BN = double(count_b(N, mem));
  // Parseval: the grid quadrature of |S|^2 is exact once grid > N
  double p2 = lp_norm_grid(2.0, N, 4 * N, mem);
  CHECK(p2 == doctest::Approx(BN).epsilon(1e-9));
  double p2b = lp_norm_grid(2.0, N, 8 * N, mem);
  CHECK(p2b == doctest::Approx(BN).epsilon(1e-9));
  CHECK_THROWS_AS(lp_norm_grid(2.0, N, N, mem), precondition_error);

  BMembership m1(4);
  double one = lp_norm_grid(2.5, 1, 8, m1);  // single member n = 1
  CHECK(one == doctest::Approx(1.0).epsilon(1e-9));

  double p52 = lp_norm_grid(2.5, N, 4 * N, mem);
  CHECK(p52 > 0.0);
  CHECK(p52 >= p2);  // |S| <= B(N) pointwise, ell = 5/2 dominates ell = 2 at peaks
}

TEST_CASE("family sum against the multiple-family envelope") {
  // q = 5741 is a continued-fraction denominator of sqrt(2) inside
  // [sqrt(RN), 2 sqrt(RN)] for R = 100, N = 1e5
  BMembership mem(100000);
  uint64_t R = 100, N = 100000, q = 5741;
  Alpha a = Alpha::rational(2378, q);
  a.beta = dd_sub(dd_add_d(dd_sqrt(2.0), -1.0), dd_div(dd_from(2378.0), dd_from(double(q))));
  double fam = family_sum(a, R, N, mem);
  double eps = 0.05;
  double envelope = double(R) * double(N) / std::sqrt(std::log(double(N))) *
                    (1.0 / std::sqrt(double(q)) +
                     std::sqrt(double(q)) / std::sqrt(double(R) * double(N)) +
                     std::pow(double(R), -1.0 / 3.0) * std::pow(double(N), -1.0 / 6.0) +
                     std::pow(double(R), 1.0 / 3.0) * std::pow(double(N), -1.0 / 3.0)) *
                    std::pow(double(N), eps);
  CHECK(fam > 0.0);
  CHECK(fam <= envelope);  // margin recorded by the ratio below
  CHECK(fam / envelope < 0.5);
}

TEST_CASE("grid norm reference ratio at ell = 5/2") {
  BMembership mem(10000);
  double v = lp_norm_grid(2.5, 10000, 40000, mem);
  double scale = std::pow(10000.0, 1.5) / std::pow(std::log(10000.0), 1.25);
  CHECK(v / scale > 0.1);
  CHECK(v / scale < 1.0);
}

TEST_CASE("global bound report") {
  BMembership mem(100000);
  auto rep0 = bound_check_trigo(Alpha::rational(0, 1), 100000, 2.0, mem);
  CHECK(rep0.envelope_small >= 1.0);
  CHECK(rep0.pass_small);
  CHECK(rep0.measured_ratio == doctest::Approx(0.32651).epsilon(1e-3));

  auto rep3 = bound_check_trigo(Alpha::rational(1, 3), 100000, 2.0, mem);
  CHECK(rep3.phi_q == 2.0);
  CHECK(rep3.pass_small);

  // a convergent-quality point with q near sqrt(N): 169/408 approximates
  // sqrt(2) - 1 to within 1/q^2
  Alpha conv = Alpha::rational(169, 408);
  conv.beta = dd_sub(dd_add_d(dd_sqrt(2.0), -1.0), dd_div(dd_from(169.0), dd_from(408.0)));
  auto repc = bound_check_trigo(conv, 100000, 2.0, mem);
  CHECK(repc.in_regime);
  CHECK(repc.convergent_quality);
  CHECK(repc.pass_large);
}
