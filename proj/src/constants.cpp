#include "lowlying/constants.hpp"

#include "lowlying/parallel.hpp"
#include "lowlying/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowlying {

namespace {

constexpr std::size_t kChunk = 1 << 16;

template <class Term>
double prime_sum(std::span<const std::uint32_t> primes, unsigned threads, Term term) {
  return ordered_chunk_sum(primes.size(), kChunk, threads, [&](std::size_t b, std::size_t e) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += term(static_cast<double>(primes[i]));
    return s;
  });
}

void check_kappa(long kappa) {
  if (kappa < 2 || kappa % 2 != 0) throw std::invalid_argument("weight kappa must be an even integer >= 2");
}

} // namespace

double sieve_theta(const PrimeSieve& sieve, std::uint64_t t, unsigned threads) {
  return prime_sum(sieve.primes_up_to(t), threads, [](double p) { return std::log(p); });
}

double sieve_theta(std::uint64_t t) {
  if (t < 1) throw std::invalid_argument("sieve_theta: t must be >= 1");
  return sieve_theta(PrimeSieve(t), t);
}

double c_pnt_truncated(const PrimeSieve& sieve, std::uint64_t X, unsigned threads) {
  if (X < 2) throw std::invalid_argument("c_pnt: X must be >= 2");
  const auto primes = sieve.primes_up_to(X);
  const double mertens = prime_sum(primes, threads, [](double p) { return std::log(p) / p; });
  const double theta = sieve_theta(sieve, X, threads);
  const double x = static_cast<double>(X);
  return 1.0 + mertens - theta / x - std::log(x);
}

CpntEstimate c_pnt(std::uint64_t X, unsigned threads) {
  if (X < 2) throw std::invalid_argument("c_pnt: X must be >= 2");
  const PrimeSieve sieve(X);
  const std::uint64_t ref = std::max<std::uint64_t>(2, X / 10);
  const double value = c_pnt_truncated(sieve, X, threads);
  const double reference = c_pnt_truncated(sieve, ref, threads);
  return {value, std::fabs(value - reference), X, ref};
}

double c_sym_even_tail_bound(std::uint64_t X) {
  if (X < 2) throw std::invalid_argument("c_sym_even: X must be >= 2");
  const double x = static_cast<double>(X);
  const double root = std::sqrt(x);
  return (2.0 * std::log(x) + 4.0) / (root * (1.0 - 1.0 / root));
}

CSymEstimate c_sym_even(const PrimeSieve& sieve, std::uint64_t X, unsigned threads) {
  if (X < 2) throw std::invalid_argument("c_sym_even: X must be >= 2");
  const double value = prime_sum(sieve.primes_up_to(X), threads,
                                 [](double p) { return std::log(p) / (p * (std::sqrt(p) - 1.0)); });
  return {value, c_sym_even_tail_bound(X), X};
}

CSymEstimate c_sym_even(std::uint64_t X, unsigned threads) {
  if (X < 2) throw std::invalid_argument("c_sym_even: X must be >= 2");
  return c_sym_even(PrimeSieve(X), X, threads);
}

double c_gamma(long r, long kappa) {
  check_kappa(kappa);
  if (r < 1) throw std::invalid_argument("c_gamma: r must be >= 1");
  const double k1 = static_cast<double>(kappa - 1);
  double sum = 0.0;
  if (r % 2 != 0) {
    for (long a = 0; 2 * a <= r - 1; ++a) {
      const double shift = static_cast<double>(2 * a + 1) * k1 / 4.0;
      sum += digamma(0.25 + shift) + digamma(0.25 + 0.5 + shift);
    }
  } else {
    sum += digamma(0.25 + mu_kappa_r(r, kappa) / 2.0);
    for (long a = 1; 2 * a <= r; ++a) {
      const double shift = static_cast<double>(a) * k1 / 2.0;
      sum += digamma(0.25 + shift) + digamma(0.25 + 0.5 + shift);
    }
  }
  return sum;
}

double c_gamma_from_shifts(const GammaShifts& shifts) {
  double sum = 0.0;
  for (double mu : shifts.shifts) sum += digamma(0.25 + mu / 2.0);
  return sum;
}

double c_infty(long r, long kappa) {
  return -static_cast<double>(r + 1) * std::log(std::numbers::pi) + c_gamma(r, kappa);
}

Rational nu_max(long r, long kappa, const Rational& theta0) {
  if (r < 1) throw std::invalid_argument("nu_max: r must be >= 1");
  const Rational gap = Rational(kappa) - 2 * theta0;
  if (gap <= Rational(1, 2)) {
    throw std::invalid_argument("nu_max: need kappa - 2*theta0 > 1/2 for a positive support bound");
  }
  Rational out = (1 - 1 / (2 * gap)) * Rational(2, r * r);
  out.canonicalize();
  return out;
}

ConstantsBundle compute_constants(long r, long kappa, const ConstantCutoffs& cutoffs, unsigned threads) {
  check_kappa(kappa);
  const PrimeSieve sieve(std::max(cutoffs.c_pnt, cutoffs.c_sym));
  if (cutoffs.c_pnt < 2) throw std::invalid_argument("c_pnt: X must be >= 2");
  const std::uint64_t ref = std::max<std::uint64_t>(2, cutoffs.c_pnt / 10);
  const double value = c_pnt_truncated(sieve, cutoffs.c_pnt, threads);
  const double reference = c_pnt_truncated(sieve, ref, threads);
  return ConstantsBundle{
      r,
      kappa,
      CpntEstimate{value, std::fabs(value - reference), cutoffs.c_pnt, ref},
      c_sym_even(sieve, cutoffs.c_sym, threads),
      c_gamma(r, kappa),
      c_infty(r, kappa),
      nu_max(r, kappa),
  };
}

} // namespace lowlying
