#pragma once

#include <cstdint>
#include <vector>

#include "tsl/two_squares.hpp"

namespace tsl {

// Dirichlet dissection with structured centers a/q, q = q_2 q_*, q_2 in
// {1,2,4}, q_* | P(K) = prod_{p<K, p=3[4]} p, q_* <= N/(Q q_2), Q = N/(log N)^B.
struct ArcDissection {
  uint64_t N = 0;
  double K = 0.0;
  double B_exponent = 0.0;
  double Q = 0.0;
  struct Arc {
    uint64_t a, q;
    double radius;  // 1/(qQ)
  };
  std::vector<Arc> arcs;  // sorted by q then a, duplicate-free

  double length_sum() const;                // sum of 2/(qQ)
  bool covers(double alpha) const;          // alpha in some arc (mod 1)
};

ArcDissection dissect(uint64_t N, double K, double B_exponent);

// Selector for the two member subsets of the ternary sum.
struct SubsetSpec {
  enum class Kind { Full, Residue, Thinned, Explicit } kind = Kind::Full;
  uint64_t residue_mod = 1, residue = 0;  // keep members = residue mod residue_mod
  double density = 1.0;                   // relative density within the member set
  uint64_t seed = 0;
  std::vector<uint32_t> list;             // explicit members

  static SubsetSpec full() { return {}; }
  static SubsetSpec residue_class(uint64_t mod, uint64_t r);
  static SubsetSpec thinned(double density, uint64_t seed);
  static SubsetSpec explicit_list(std::vector<uint32_t> xs);
};

// Members of the subset, ascending, all <= N and in the member table.
std::vector<uint32_t> materialize(const SubsetSpec& spec, uint64_t N, const BMembership& mem);

// Exact count of solutions n + b1 + b2 = N with b1 in B1, b2 in B2 (ordered)
// and n a member.  N = 3 mod 4 enforced.  Word-parallel bitset convolution.
uint64_t ternary_count(uint64_t N, const SubsetSpec& b1, const SubsetSpec& b2,
                       const BMembership& mem);

// Ordered pair-sum counts r2[s] = #{(b1,b2): b1+b2 = s}, s <= N.
std::vector<uint32_t> pair_sum_counts(uint64_t N, const SubsetSpec& b1, const SubsetSpec& b2,
                                      const BMembership& mem);

// Main-term forms over M = P(K):
//   flat:     C * M/phi(M) / sqrt(log N) * #{pairs: s <= N, gcd(N-s, M) = 1}
//   weighted: 4C * M/phi(M) * sum_{pairs: N-s >= 3, gcd(N-s,M) = 1}
//                                 1/sqrt(log(N-s))
struct TernaryMainTerm {
  double flat = 0.0;
  double weighted = 0.0;
  uint64_t M = 1;
  uint64_t pair_count_coprime = 0;
};
TernaryMainTerm ternary_main_term(uint64_t N, double K, const SubsetSpec& b1,
                                  const SubsetSpec& b2, const BMembership& mem, double C);

// Grid sweep of |S| over the complement of the dissection.
struct MinorArcMass {
  double max_minor = 0.0;
  double lp_integral_minor = 0.0;   // Riemann sum of |S|^ell over minor points
  double envelope = 0.0;            // N/(K sqrt(log N))
  double covered_fraction = 0.0;    // share of grid points inside the arcs
  bool max_within_envelope = false;
};
MinorArcMass minor_arc_mass(uint64_t N, double K, double B_exponent, double ell,
                            uint64_t grid_size, const BMembership& mem);

// Brute-force oracle for small N (test support).
uint64_t ternary_count_bruteforce(uint64_t N, const std::vector<uint32_t>& b1,
                                  const std::vector<uint32_t>& b2, const BMembership& mem);

}  // namespace tsl
