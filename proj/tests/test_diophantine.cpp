#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tsl/diophantine.hpp"

using namespace tsl;

TEST_CASE("pell recurrence values and certificates") {
  auto ps = pell_sequence(80);
  REQUIRE(ps.size() == 80);
  CHECK(ps[0].value == 1);
  CHECK(ps[1].value == 2);
  CHECK(ps[2].value == 5);
  CHECK(ps[3].value == 12);
  for (auto& p : ps) {
    CHECK(p.approx_ok);
    CHECK(p.coprime_next);
  }
  // every decade window [y, 3y] contains a term
  for (int j = 1; j <= 7; ++j) {
    mpz_class y = 1;
    for (int i = 0; i < j; ++i) y *= 10;
    bool hit = false;
    for (auto& p : ps)
      if (p.value >= y && p.value <= 3 * y) hit = true;
    CHECK(hit);
  }
  CHECK_THROWS_AS(pell_sequence(81), precondition_error);
  CHECK_THROWS_AS(pell_sequence(0), precondition_error);
}

TEST_CASE("continued fraction convergents") {
  auto cs = convergents(QuadraticIrrational::sqrt_of(2), 1000);
  REQUIRE(cs.size() >= 4);
  CHECK(int64_t(cs[0].a) == 1);
  CHECK(int64_t(cs[0].q) == 1);
  CHECK(int64_t(cs[1].a) == 3);
  CHECK(int64_t(cs[1].q) == 2);
  CHECK(int64_t(cs[2].a) == 7);
  CHECK(int64_t(cs[2].q) == 5);
  CHECK(int64_t(cs[3].a) == 17);
  CHECK(int64_t(cs[3].q) == 12);
  for (auto& c : cs) CHECK(c.quality_ok);
  for (size_t i = 0; i + 1 < cs.size(); ++i) CHECK(cs[i].next_quality_ok);
  for (size_t i = 1; i < cs.size(); ++i) CHECK(cs[i].q > cs[i - 1].q);

  auto gs = convergents(QuadraticIrrational::golden(), 1000);
  std::vector<int64_t> fib{1, 2, 3, 5, 8, 13, 21, 34};
  REQUIRE(gs.size() >= fib.size() + 1);
  CHECK(int64_t(gs[0].q) == 1);
  for (size_t i = 0; i < fib.size(); ++i) CHECK(int64_t(gs[i + 1].q) == fib[i]);

  // denominators reach the requested scale
  auto big = convergents(QuadraticIrrational::sqrt_of(3), 1000000000ull);
  CHECK(int64_t(big.back().q) > 300000000ll);
  for (auto& c : big) CHECK(c.quality_ok);
}

TEST_CASE("quadratic irrational construction") {
  CHECK_THROWS_AS(QuadraticIrrational::make(0, 1, 1, 9), precondition_error);  // square
  CHECK_THROWS_AS(QuadraticIrrational::make(0, 0, 1, 2), precondition_error);
  auto g = QuadraticIrrational::golden();
  CHECK(g.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
  auto neg = QuadraticIrrational::make(1, -1, -2, 5);  // (1 - sqrt5)/(-2) = golden - 1... sign flip
  CHECK(neg.to_double() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("negative quadratic irrationals") {
  // q > 0, r > 0 still covers negative values through p
  auto neg = QuadraticIrrational::make(-3, 1, 1, 2);  // -3 + sqrt(2) = -1.5857...
  CHECK(neg.to_double() == doctest::Approx(std::sqrt(2.0) - 3.0).epsilon(1e-14));
  auto cs = convergents(neg, 100000);
  REQUIRE(cs.size() > 5);
  for (auto& c : cs) CHECK(c.quality_ok);
  for (size_t i = 0; i + 1 < cs.size(); ++i) CHECK(cs[i].next_quality_ok);
  // the convergents are those of sqrt(2) shifted by -3
  CHECK(int64_t(cs[2].q) == 5);
  CHECK(int64_t(cs[2].a) == 7 - 3 * 5);
}

TEST_CASE("clustered counts") {
  BMembership mem(100000);
  auto s2 = QuadraticIrrational::sqrt_of(2);
  uint64_t BN = count_b(100000, mem);

  // the whole circle
  auto all = equidist_count(s2, 0.0, 0.5, 100000, mem);
  CHECK(all.count == BN);
  // empty window at an irrational displacement
  auto none = equidist_count(s2, 0.1234567, 0.0, 100000, mem);
  CHECK(none.count == 0);

  // monotone in delta and in N
  uint64_t prev = 0;
  for (double delta : {0.001, 0.01, 0.05, 0.2, 0.5}) {
    auto c = equidist_count(s2, 0.0, delta, 100000, mem);
    CHECK(c.count >= prev);
    prev = c.count;
  }
  uint64_t prevN = 0;
  for (uint64_t N : {10000ull, 50000ull, 100000ull}) {
    auto c = equidist_count(s2, 0.0, 0.05, N, mem);
    CHECK(c.count >= prevN);
    prevN = c.count;
  }

  // desk-scale equidistribution at lambda = 0.2
  double delta = std::pow(100000.0, -0.2);
  auto c = equidist_count(s2, 0.0, delta, 100000, mem);
  double ratio = double(c.count) / (2.0 * delta * double(BN));
  CHECK(ratio > 0.9);
  CHECK(ratio < 1.1);
}

TEST_CASE("sandwich bound for the clustered count") {
  BMembership mem(100000);
  auto s2 = QuadraticIrrational::sqrt_of(2);

  auto rep = trigo_approx_check(s2, 0.0, std::pow(100000.0, -0.2), 100, 100000, mem);
  CHECK(rep.within);
  CHECK(rep.family_budget > 0.0);

  // R = 1: the truncation budget dominates and the bound is loose
  auto r1 = trigo_approx_check(s2, 0.0, 0.01, 1, 100000, mem);
  CHECK(r1.truncation_budget == doctest::Approx(double(count_b(100000, mem))));
  CHECK(r1.within);

  // nearly rational alpha = 1/3 + 4.7e-7 sqrt(2)-ish: every b avoids the
  // residue 0 mod 3, so the window around 0 is empty -- the clustering
  // degeneracy is visible, and the family budget absorbs it
  auto near_third = QuadraticIrrational::make(1000000, 1, 3000000, 2);
  auto rr = trigo_approx_check(near_third, 0.0, 0.001, 20, 50000, mem);
  CHECK(rr.lhs == 0);
  CHECK(rr.main_term > 0.0);
  CHECK(rr.within);
}
