#include "tsl/diophantine.hpp"

#include <cmath>

#include "tsl/errors.hpp"
#include "tsl/expsum.hpp"

namespace tsl {

std::vector<PellPair> pell_sequence(int k_max) {
  if (k_max < 1 || k_max > 80) throw precondition_error("pell_sequence: k_max in [1, 80]");
  std::vector<PellPair> out;
  mpz_class prev = 1, cur = 2;  // N_1, N_2
  for (int k = 1; k <= k_max; ++k) {
    mpz_class N = prev, next = cur;
    PellPair pp;
    pp.k = k;
    pp.value = N;
    // |sqrt2 - (N_{k+1}-N_k)/N_k| <= 1/(2 N_k^2)
    //   <=> 2 N c <= sqrt2 N + D with D = N_{k+1}-N_k, c = |2N^2 - D^2|
    //   <=> 2Nc - D <= 0  or  (2Nc - D)^2 <= 2 N^2
    mpz_class D = next - N;
    mpz_class c = 2 * N * N - D * D;
    if (c < 0) c = -c;
    mpz_class lhs = 2 * N * c - D;
    pp.approx_ok = lhs <= 0 || lhs * lhs <= 2 * N * N;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), next.get_mpz_t());
    pp.coprime_next = g == 1;
    out.push_back(pp);

    mpz_class nn = 2 * cur + prev;
    prev = cur;
    cur = nn;
  }
  return out;
}

QuadraticIrrational QuadraticIrrational::sqrt_of(uint64_t d) { return make(0, 1, 1, d); }
QuadraticIrrational QuadraticIrrational::golden() { return make(1, 1, 2, 5); }

QuadraticIrrational QuadraticIrrational::make(int64_t p, int64_t q, int64_t r, uint64_t d) {
  if (q < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  if (q == 0 || r == 0) throw precondition_error("QuadraticIrrational: q, r nonzero");
  if (r < 0) throw precondition_error("QuadraticIrrational: r > 0 required (after q > 0)");
  uint64_t s = uint64_t(std::sqrt(double(d)));
  while (s * s > d) --s;
  while ((s + 1) * (s + 1) <= d) ++s;
  if (s * s == d) throw precondition_error("QuadraticIrrational: d must be non-square");
  return {p, q, r, d};
}

dd QuadraticIrrational::to_dd() const {
  dd v = dd_mul_d(dd_sqrt(double(d)), double(q));
  v = dd_add_d(v, double(p));
  return dd_div(v, dd_from(double(r)));
}

namespace {

// floor((P + sqrt(D))/Q) exactly; sqrt(D) irrational.
mpz_class cf_floor(const mpz_class& P, const mpz_class& D, const mpz_class& Q) {
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
  mpz_class num = P + s;
  if (Q < 0) num = num + 1;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
  return q;
}

// sign of A + B sqrt(d) with rational-free exact arithmetic (B any sign)
int sign_quad(const mpz_class& A, const mpz_class& B, const mpz_class& d) {
  if (B == 0) return sgn(A);
  if (A == 0) return sgn(B);
  if (A > 0 && B > 0) return 1;
  if (A < 0 && B < 0) return -1;
  // opposite signs: compare A^2 vs B^2 d
  mpz_class a2 = A * A, b2d = B * B * d;
  if (a2 == b2d) return 0;  // impossible for non-square d, kept for safety
  bool a_wins = a2 > b2d;
  return (A > 0) == a_wins ? 1 : -1;
}

}  // namespace

std::vector<Convergent> convergents(const QuadraticIrrational& alpha, uint64_t q_max) {
  if (q_max > 1000000000000ull) throw precondition_error("convergents: q_max above 1e12");
  // state alpha_k = (P + sqrt(D))/Q, Q | (D - P^2)
  mpz_class P = mpz_class(long(alpha.p)) * long(alpha.r);
  mpz_class D = mpz_class(long(alpha.q)) * long(alpha.q) * long(alpha.r) * long(alpha.r) *
                mpz_class(static_cast<unsigned long>(alpha.d));
  mpz_class Q = mpz_class(long(alpha.r)) * long(alpha.r);
  mpz_class dd_ = mpz_class(static_cast<unsigned long>(alpha.d));

  std::vector<Convergent> out;
  // h_{-2} = 0, h_{-1} = 1; k_{-2} = 1, k_{-1} = 0
  mpz_class h_prev = 0, h_cur = 1, k_prev = 1, k_cur = 0;
  for (int step = 0; step < 400; ++step) {
    mpz_class a = cf_floor(P, D, Q);
    mpz_class h = a * h_cur + h_prev;
    mpz_class k = a * k_cur + k_prev;
    if (k > mpz_class(static_cast<unsigned long>(q_max))) break;

    if (!h.fits_slong_p() || !k.fits_slong_p())
      throw resource_error("convergents: numerator beyond 64 bits");
    Convergent c;
    c.a = i128(mpz_get_si(h.get_mpz_t()));
    c.q = i128(mpz_get_si(k.get_mpz_t()));
    c.next_quality_ok = true;
    // k alpha - h = (A + B sqrt d)/r with A = k p - h r, B = k q;
    // |k alpha - h| <= 1/k  <=>  sign checks on k A -+ r + k B sqrt d.
    {
      mpz_class A = k * long(alpha.p) - h * long(alpha.r);
      mpz_class B = k * long(alpha.q);
      mpz_class R = long(alpha.r);
      mpz_class kA = k * A, kB = k * B;
      c.quality_ok = sign_quad(kA - R, kB, dd_) <= 0 && sign_quad(kA + R, kB, dd_) >= 0;
      // the classical law for the previous entry: |q' alpha - a'| < 1/q
      if (!out.empty()) {
        mpz_class Ap = k_cur * long(alpha.p) - h_cur * long(alpha.r);
        mpz_class Bp = k_cur * long(alpha.q);
        mpz_class kAp = k * Ap, kBp = k * Bp;
        out.back().next_quality_ok =
            sign_quad(kAp - R, kBp, dd_) < 0 && sign_quad(kAp + R, kBp, dd_) > 0;
      }
    }
    out.push_back(c);

    h_prev = h_cur;
    h_cur = h;
    k_prev = k_cur;
    k_cur = k;
    // advance the CF state
    mpz_class Pn = a * Q - P;
    mpz_class Qn = (D - Pn * Pn) / Q;
    P = Pn;
    Q = Qn;
    if (Q == 0) throw precondition_error("convergents: alpha is rational");
  }
  return out;
}

namespace {

// exact decision of ||b alpha - beta0|| <= delta through the quadratic's
// integer polynomial; beta0 and delta are exact dyadic rationals (doubles)
bool exact_cluster_decision(uint64_t b, const QuadraticIrrational& al, double beta0,
                            double delta, long m) {
  // b alpha - beta0 - m = A + B sqrt d with rational A, B
  mpq_class A(0), B(0);
  mpq_class beta0_q(beta0), delta_q(delta);
  mpq_class r(long(al.r));
  A = mpq_class(mpz_class(static_cast<unsigned long>(b)) * long(al.p)) / r - beta0_q - m;
  B = mpq_class(mpz_class(static_cast<unsigned long>(b)) * long(al.q)) / r;
  // |A + B sqrt d| <= delta  <=> (A - delta <= -B sqrt d... do two sign tests
  // sign(A + B sqrt d - delta) <= 0 and sign(A + B sqrt d + delta) >= 0
  auto sign_expr = [&](const mpq_class& shift) {
    mpq_class Ax = A + shift;
    // sign of Ax + B sqrt d: clear denominators
    mpz_class num_a = Ax.get_num() * B.get_den();
    mpz_class num_b = B.get_num() * Ax.get_den();
    mpz_class d(static_cast<unsigned long>(al.d));
    if (num_b == 0) return sgn(num_a);
    if (num_a == 0) return sgn(num_b);
    if (num_a > 0 && num_b > 0) return 1;
    if (num_a < 0 && num_b < 0) return -1;
    mpz_class a2 = num_a * num_a, b2d = num_b * num_b * d;
    bool a_wins = a2 > b2d;
    return (num_a > 0) == a_wins ? 1 : -1;
  };
  return sign_expr(-delta_q) <= 0 && sign_expr(delta_q) >= 0;
}

}  // namespace

EquidistCount equidist_count(const QuadraticIrrational& alpha, double beta0, double delta,
                             uint64_t N, const BMembership& mem) {
  if (N > mem.limit()) throw precondition_error("equidist_count: N above member table");
  EquidistCount out;
  dd af = dd_frac(alpha.to_dd());
  const double guard = 1e-18;
  for (uint32_t b : mem.elements_upto(N)) {
    dd x = dd_frac_mul_u(b, af);
    dd dsh = dd_frac(dd_add_d(x, -beta0));
    double d1 = dsh.hi + dsh.lo;
    double dist = std::min(d1, 1.0 - d1);
    if (std::abs(dist - delta) < guard) {
      ++out.boundary_cases;
      double y = double(b) * alpha.to_double() - beta0;
      long m = std::lround(y);
      if (exact_cluster_decision(b, alpha, beta0, delta, m)) ++out.count;
    } else if (dist <= delta) {
      ++out.count;
    }
  }
  return out;
}

TrigoApproxReport trigo_approx_check(const QuadraticIrrational& alpha, double beta0,
                                     double delta, uint64_t R, uint64_t N,
                                     const BMembership& mem) {
  TrigoApproxReport rep;
  rep.lhs = equidist_count(alpha, beta0, delta, N, mem).count;
  double BN = double(count_b(N, mem));
  rep.main_term = 2.0 * delta * BN;
  Alpha a = Alpha::from_dd(alpha.to_dd());
  rep.family_budget = delta * family_sum(a, R, N, mem);
  rep.truncation_budget = BN / double(R);
  rep.deviation = std::abs(double(rep.lhs) - rep.main_term);
  rep.within = rep.deviation <= 5.0 * (rep.family_budget + rep.truncation_budget);
  return rep;
}

}  // namespace tsl
