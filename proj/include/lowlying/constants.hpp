#pragma once

// Numerical values of the constants entering the 1/log(q^r) term of the
// one-level density: C_PNT, C, C_Gamma, C_infty, and the support bound nu_max.

#include "lowlying/exact_poly.hpp"
#include "lowlying/lfunc_model.hpp"
#include "lowlying/primes.hpp"

#include <cstdint>

namespace lowlying {

/// theta(t) = sum_{p <= t} log p.
double sieve_theta(std::uint64_t t);
double sieve_theta(const PrimeSieve& sieve, std::uint64_t t, unsigned threads = 1);

/// 1 + integral_1^X (theta(t) - t)/t^2 dt through the exact partial-summation
/// identity sum_{p<=X} log p/p - theta(X)/X - log X. Needs sieve.limit() >= X.
double c_pnt_truncated(const PrimeSieve& sieve, std::uint64_t X, unsigned threads = 1);

struct CpntEstimate {
  double value;
  /// |value(X) - value(max(2, X/10))|: an empirical stabilization figure, not
  /// a rigorous bound.
  double uncertainty;
  std::uint64_t cutoff;
  std::uint64_t reference_cutoff;
};

/// Throws std::invalid_argument for X < 2.
CpntEstimate c_pnt(std::uint64_t X, unsigned threads = 1);

struct CSymEstimate {
  double value;
  /// Rigorous majorant of the omitted sum over primes p > X.
  double tail_bound;
  std::uint64_t cutoff;
};

/// sum_{n > X} log n/(n^{3/2} - n) <= integral_X^inf log t/(t^{3/2} - t) dt
///   <= (2 log X + 4) / (sqrt(X) (1 - X^{-1/2})).
double c_sym_even_tail_bound(std::uint64_t X);

/// sum_{p <= X} log p/(p^{3/2} - p) with its tail bound. Throws for X < 2.
CSymEstimate c_sym_even(std::uint64_t X, unsigned threads = 1);
CSymEstimate c_sym_even(const PrimeSieve& sieve, std::uint64_t X, unsigned threads = 1);

/// C_Gamma written out as the explicit digamma sums over a (odd and even r
/// separately).
double c_gamma(long r, long kappa);

/// sum_j psi(1/4 + mu_j/2) over the gamma shifts.
double c_gamma_from_shifts(const GammaShifts& shifts);

/// -(r+1) log pi + C_Gamma.
double c_infty(long r, long kappa);

/// (1 - 1/(2(kappa - 2 theta0))) * 2/r^2, exactly. Throws
/// std::invalid_argument unless kappa - 2 theta0 > 1/2 and r >= 1.
Rational nu_max(long r, long kappa, const Rational& theta0 = Rational(7, 64));

struct ConstantCutoffs {
  std::uint64_t c_pnt = 10'000'000;
  std::uint64_t c_sym = 1'000'000;
};

struct ConstantsBundle {
  long r;
  long kappa;
  CpntEstimate c_pnt;
  CSymEstimate c_sym;
  double c_gamma;
  double c_infty;
  Rational nu_max;
};

ConstantsBundle compute_constants(long r, long kappa, const ConstantCutoffs& cutoffs = {}, unsigned threads = 1);

} // namespace lowlying
