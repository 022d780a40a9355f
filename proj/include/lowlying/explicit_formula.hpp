#pragma once

// Prime side of the explicit formula for sym^r f and the predicted expansion
// of the averaged one-level density up to order 1/log(q^r).

#include "lowlying/constants.hpp"
#include "lowlying/primes.hpp"
#include "lowlying/synthetic_form.hpp"
#include "lowlying/test_function.hpp"

#include <cstdint>
#include <string>

namespace lowlying {

/// Named pieces of the 1/log(q^r) coefficient and of the main term.
struct ExpansionBreakdown {
  double phi_hat_0;
  double phi_0;
  double c_infty;
  /// -2 (-1)^r C_PNT
  double c_pnt_term;
  /// -2 delta_{2|r} C; exactly 0 for odd r.
  double c_term;
};

struct ExpansionReport {
  long r;
  long kappa;
  std::uint64_t q;
  double main_term;
  double lower_coefficient;
  /// The same coefficient assembled as C_infty + 2 (-1)^{r+1} C_PNT - 2 delta C.
  double lower_coefficient_alt;
  double lower_term;
  /// log(q^r)
  double scale;
  bool admissible;
  Rational nu;
  Rational nu_max;
  ExpansionBreakdown breakdown;
  /// The remainder is only recorded symbolically.
  std::string remainder = "O(1/log^3(q^r))";
};

/// The C_PNT and C values the expansion consumes.
struct PrimeConstants {
  double c_pnt;
  double c_sym;
};

PrimeConstants default_prime_constants(unsigned threads = 1);

/// Assembles [Phi_hat(0) + (-1)^{r+1} Phi(0)/2]
///   + [C_infty - 2(-1)^r C_PNT - 2 delta_{2|r} C] Phi_hat(0)/log(q^r).
/// admissible is the exact comparison nu < nu_max(r, kappa, 7/64); an
/// inadmissible nu is reported, not rejected.
ExpansionReport theorem_b_expansion(long r, long kappa, std::uint64_t q, const TestFunction& phi,
                                    const PrimeConstants& constants);

/// p <= cutoff covers the support of every summand: floor(q^{r nu / divisor}).
std::uint64_t prime_cutoff(std::uint64_t q, long r, double nu, double divisor = 1.0);

/// -(2/log q^r) sum_{p != q} lambda(p^r) (log p/sqrt p) Phi_hat(log p/log q^r).
double p1_term(const SyntheticForm& form, const TestFunction& phi, long r, const PrimeSieve& sieve);
double p1_term(const SyntheticForm& form, const TestFunction& phi, long r);

/// -(2/log q^r) sum_{p != q} lambda(p^{2(r-m)}) (log p/p) Phi_hat(2 log p/log q^r).
/// Throws std::invalid_argument unless 0 <= m <= r-1.
double p2_term(const SyntheticForm& form, const TestFunction& phi, long r, long m, const PrimeSieve& sieve);
double p2_term(const SyntheticForm& form, const TestFunction& phi, long r, long m);

/// sum_{1<=j<=r, j=r (2)} (lambda(p^{jn}) - lambda(p^{jn-2})) at angle theta.
double p3_bracket(double theta, long n, long r);

/// -(2/log q^r) sum_{p != q} sum_{n>=3} bracket (log p/p^{n/2}) Phi_hat(n log p/log q^r).
double p3_term(const SyntheticForm& form, const TestFunction& phi, long r, const PrimeSieve& sieve);
double p3_term(const SyntheticForm& form, const TestFunction& phi, long r);

/// |S(e^{i theta}; 2, r) - (sum_{m<r} (-1)^m lambda(p^{2(r-m)}) + (-1)^r)|.
double s2_identity_check(double theta, long r);

} // namespace lowlying
