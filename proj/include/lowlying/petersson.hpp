#pragma once

// Truncated Petersson trace formula terms
//   Delta_k(m, 1) = delta_{m,1} + 2 pi i^kappa sum_{c >= 1, k | c} S(m, 1; c)/c J_{kappa-1}(4 pi sqrt(m)/c)
// with a rigorous bound on the omitted c > c_max.

#include "lowlying/exact_poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lowlying {

struct PeterssonTerm {
  std::uint64_t m;
  std::uint64_t k;
  long kappa;
  double value;
  double tail_estimate;
  std::uint64_t c_max;
  /// False when c_max <= 4 pi sqrt(m); the tail bound is still computed.
  bool tail_rigorous;
  std::vector<std::string> warnings;
};

/// max(1000, ceil(8 pi sqrt(m))).
std::uint64_t default_c_max(std::uint64_t m);

/// D with d(n) <= D n^{1/4} for all n >= 1, computed as
/// prod_{p < 16} max_a (a + 1)/p^{a/4}.
double divisor_bound_constant();

/// Bound on |2 pi sum_{c > c_max, k | c} S(m,1;c)/c J_{kappa-1}(4 pi sqrt(m)/c)|
/// from |S| <= d(c) sqrt(c), d(c) <= D c^{1/4} and
/// |J_nu(y)| <= (y/2)^nu / nu!.
double petersson_tail_bound(std::uint64_t m, std::uint64_t k, long kappa, std::uint64_t c_max);

/// Throws std::invalid_argument for m < 1, k < 1, odd kappa or c_max < k.
PeterssonTerm petersson_delta(std::uint64_t m, std::uint64_t k, long kappa, std::uint64_t c_max,
                              unsigned threads = 1);
PeterssonTerm petersson_delta(std::uint64_t m, std::uint64_t k, long kappa);

struct OldPartSum {
  double value;
  /// Sum of the scaled tail estimates of every included term.
  double tail_total;
  /// 2(k+1)
  double bound;
  std::vector<std::uint64_t> ells;
  std::vector<std::string> warnings;
};

/// Default guard on m = p^k ell^2 before a warning about large Bessel arguments.
inline constexpr std::uint64_t kBesselArgumentGuard = 100'000'000;

/// sum over ell in {1, q, q^2, ...}, ell <= ell_max, of
/// (1/ell) Delta_1(p^k ell^2, 1). Throws std::invalid_argument when p = q,
/// p or q is not prime, or k < 1. c_max = 0 selects default_c_max per term.
OldPartSum old_part_sum(std::uint64_t p, std::uint64_t k, std::uint64_t q, long kappa, std::uint64_t ell_max,
                        std::uint64_t c_max = 0, unsigned threads = 1);

/// nu < 2/r^2, the support condition under which the new part of the P^3
/// average is negligible.
bool new_part_admissible(const Rational& nu, long r);

} // namespace lowlying
