#include "lowlying/explicit_formula.hpp"

#include "lowlying/lfunc_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lowlying {

namespace {

double log_conductor(std::uint64_t q, long r) { return static_cast<double>(r) * std::log(static_cast<double>(q)); }

void check_r(long r) {
  if (r < 1) throw std::invalid_argument("symmetric power r must be >= 1");
}

void check_sieve(const PrimeSieve& sieve, std::uint64_t cutoff) {
  if (sieve.limit() < cutoff) throw std::invalid_argument("prime sieve does not reach the support cutoff");
}

// -2/L * sum, with an empty sum reported as +0.
double scaled(double sum, double L) { return sum == 0.0 ? 0.0 : -2.0 / L * sum; }

} // namespace

PrimeConstants default_prime_constants(unsigned threads) {
  const ConstantCutoffs cut;
  const PrimeSieve sieve(std::max(cut.c_pnt, cut.c_sym));
  return {c_pnt_truncated(sieve, cut.c_pnt, threads), c_sym_even(sieve, cut.c_sym, threads).value};
}

ExpansionReport theorem_b_expansion(long r, long kappa, std::uint64_t q, const TestFunction& phi,
                                    const PrimeConstants& constants) {
  check_r(r);
  if (!is_prime(q)) throw std::invalid_argument("theorem_b_expansion: q must be prime");

  ExpansionReport rep{};
  rep.r = r;
  rep.kappa = kappa;
  rep.q = q;
  rep.scale = log_conductor(q, r);

  const double sign_r = (r % 2 == 0) ? 1.0 : -1.0;  // (-1)^r
  const bool even = (r % 2 == 0);

  auto& b = rep.breakdown;
  b.phi_hat_0 = phi.phi_hat(0.0);
  b.phi_0 = phi.phi(0.0);
  b.c_infty = c_infty(r, kappa);
  b.c_pnt_term = -2.0 * sign_r * constants.c_pnt;
  b.c_term = even ? -2.0 * constants.c_sym : 0.0;

  rep.main_term = b.phi_hat_0 + (-sign_r) / 2.0 * b.phi_0;
  rep.lower_coefficient = b.c_infty + b.c_pnt_term + b.c_term;
  rep.lower_coefficient_alt =
      b.c_infty + 2.0 * (-sign_r) * constants.c_pnt - (even ? 2.0 * constants.c_sym : 0.0);
  if (rep.lower_coefficient != rep.lower_coefficient_alt) {
    throw std::logic_error("theorem_b_expansion: the two coefficient forms disagree");
  }
  rep.lower_term = rep.lower_coefficient * b.phi_hat_0 / rep.scale;

  rep.nu = phi.nu_exact();
  rep.nu_max = nu_max(r, kappa, Rational(7, 64));
  rep.admissible = rep.nu < rep.nu_max;
  return rep;
}

std::uint64_t prime_cutoff(std::uint64_t q, long r, double nu, double divisor) {
  const double exponent = static_cast<double>(r) * nu * std::log(static_cast<double>(q)) / divisor;
  if (exponent >= 43.0) throw std::length_error("prime_cutoff: support cutoff q^(r nu) is too large");
  // Slightly generous: primes past the support contribute exactly zero.
  return static_cast<std::uint64_t>(std::floor(std::exp(exponent) * (1.0 + 1e-12)));
}

double p1_term(const SyntheticForm& form, const TestFunction& phi, long r, const PrimeSieve& sieve) {
  check_r(r);
  const std::uint64_t cutoff = prime_cutoff(form.q(), r, phi.nu());
  check_sieve(sieve, cutoff);
  const double L = log_conductor(form.q(), r);
  double sum = 0.0;
  for (std::uint32_t p : sieve.primes_up_to(cutoff)) {
    if (p == form.q()) continue;
    const double lp = std::log(static_cast<double>(p));
    const double weight = phi.phi_hat(lp / L);
    if (weight == 0.0) continue;
    sum += lambda_power(form.angle(p), r) * lp / std::sqrt(static_cast<double>(p)) * weight;
  }
  return scaled(sum, L);
}

double p1_term(const SyntheticForm& form, const TestFunction& phi, long r) {
  return p1_term(form, phi, r, PrimeSieve(prime_cutoff(form.q(), r, phi.nu())));
}

double p2_term(const SyntheticForm& form, const TestFunction& phi, long r, long m, const PrimeSieve& sieve) {
  check_r(r);
  if (m < 0 || m > r - 1) throw std::invalid_argument("p2_term: m must lie in [0, r-1]");
  const std::uint64_t cutoff = prime_cutoff(form.q(), r, phi.nu(), 2.0);
  check_sieve(sieve, cutoff);
  const double L = log_conductor(form.q(), r);
  double sum = 0.0;
  for (std::uint32_t p : sieve.primes_up_to(cutoff)) {
    if (p == form.q()) continue;
    const double lp = std::log(static_cast<double>(p));
    const double weight = phi.phi_hat(2.0 * lp / L);
    if (weight == 0.0) continue;
    sum += lambda_power(form.angle(p), 2 * (r - m)) * lp / static_cast<double>(p) * weight;
  }
  return scaled(sum, L);
}

double p2_term(const SyntheticForm& form, const TestFunction& phi, long r, long m) {
  return p2_term(form, phi, r, m, PrimeSieve(prime_cutoff(form.q(), r, phi.nu(), 2.0)));
}

double p3_bracket(double theta, long n, long r) {
  check_r(r);
  if (n < 1) throw std::invalid_argument("p3_bracket: n must be >= 1");
  double sum = 0.0;
  for (long j = (r % 2 == 0) ? 2 : 1; j <= r; j += 2) {
    const long top = j * n;
    sum += lambda_power(theta, top) - (top >= 2 ? lambda_power(theta, top - 2) : 0.0);
  }
  return sum;
}

double p3_term(const SyntheticForm& form, const TestFunction& phi, long r, const PrimeSieve& sieve) {
  check_r(r);
  const std::uint64_t cutoff = prime_cutoff(form.q(), r, phi.nu());
  const std::uint64_t prime_limit = prime_cutoff(form.q(), r, phi.nu(), 3.0);
  check_sieve(sieve, prime_limit);
  const double L = log_conductor(form.q(), r);
  const double log_cutoff = std::log(static_cast<double>(std::max<std::uint64_t>(cutoff, 1)));
  double sum = 0.0;
  for (std::uint32_t p : sieve.primes_up_to(prime_limit)) {
    if (p == form.q()) continue;
    const double lp = std::log(static_cast<double>(p));
    const double theta = form.angle(p);
    for (long n = 3; static_cast<double>(n) * lp <= log_cutoff + 1e-12; ++n) {
      const double weight = phi.phi_hat(static_cast<double>(n) * lp / L);
      if (weight == 0.0) continue;
      sum += p3_bracket(theta, n, r) * lp / std::pow(static_cast<double>(p), 0.5 * static_cast<double>(n)) * weight;
    }
  }
  return scaled(sum, L);
}

double p3_term(const SyntheticForm& form, const TestFunction& phi, long r) {
  return p3_term(form, phi, r, PrimeSieve(prime_cutoff(form.q(), r, phi.nu(), 3.0)));
}

double s2_identity_check(double theta, long r) {
  check_r(r);
  const double s = power_sum_S(theta, 2, r);
  double rhs = (r % 2 == 0) ? 1.0 : -1.0;
  for (long m = 0; m <= r - 1; ++m) {
    const double term = lambda_power(theta, 2 * (r - m));
    rhs += (m % 2 == 0) ? term : -term;
  }
  return std::fabs(s - rhs);
}

} // namespace lowlying
