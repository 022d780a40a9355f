#include "lowlying/petersson.hpp"

#include "lowlying/kloosterman.hpp"
#include "lowlying/parallel.hpp"
#include "lowlying/primes.hpp"
#include "lowlying/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowlying {

namespace {

constexpr double kPi = std::numbers::pi;

void check_kappa(long kappa) {
  if (kappa < 2 || kappa % 2 != 0) throw std::invalid_argument("weight kappa must be an even integer >= 2");
}

} // namespace

std::uint64_t default_c_max(std::uint64_t m) {
  const auto scaled = static_cast<std::uint64_t>(std::ceil(8.0 * kPi * std::sqrt(static_cast<double>(m))));
  return std::max<std::uint64_t>(1000, scaled);
}

double divisor_bound_constant() {
  static const double value = [] {
    double d = 1.0;
    for (int p : {2, 3, 5, 7, 11, 13}) {
      double best = 1.0;
      for (int a = 1; a < 64; ++a) {
        best = std::max(best, (a + 1) / std::pow(static_cast<double>(p), a / 4.0));
      }
      d *= best;
    }
    return d;
  }();
  return value;
}

double petersson_tail_bound(std::uint64_t m, std::uint64_t k, long kappa, std::uint64_t c_max) {
  check_kappa(kappa);
  if (m < 1 || k < 1 || c_max < k) throw std::invalid_argument("petersson_tail_bound: need m, k >= 1 and c_max >= k");
  const double order = static_cast<double>(kappa - 1);
  const double s = static_cast<double>(kappa) - 0.75;
  const double J = std::floor(static_cast<double>(c_max) / static_cast<double>(k));
  // log of 2 pi D (2 pi sqrt m)^{kappa-1} / (kappa-1)! * k^{-s} J^{1-s} / (s-1)
  const double log_bound = std::log(2.0 * kPi * divisor_bound_constant()) +
                           order * std::log(2.0 * kPi * std::sqrt(static_cast<double>(m))) -
                           std::lgamma(order + 1.0) - s * std::log(static_cast<double>(k)) +
                           (1.0 - s) * std::log(J) - std::log(s - 1.0);
  return std::exp(log_bound);
}

PeterssonTerm petersson_delta(std::uint64_t m, std::uint64_t k, long kappa, std::uint64_t c_max, unsigned threads) {
  check_kappa(kappa);
  if (m < 1 || k < 1) throw std::invalid_argument("petersson_delta: m and k must be >= 1");
  if (c_max < k) throw std::invalid_argument("petersson_delta: c_max must be >= k");

  const double four_pi_root_m = 4.0 * kPi * std::sqrt(static_cast<double>(m));
  const int order = static_cast<int>(kappa - 1);
  const std::uint64_t count = c_max / k;
  const double csum = ordered_chunk_sum(count, 64, threads, [&](std::size_t b, std::size_t e) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      const std::uint64_t c = k * (i + 1);
      const double kl = KloostermanModulus(c).sum(static_cast<std::int64_t>(m % c), 1);
      s += kl / static_cast<double>(c) * bessel_j(order, four_pi_root_m / static_cast<double>(c));
    }
    return s;
  });
  const double i_kappa = (kappa / 2) % 2 == 0 ? 1.0 : -1.0;

  PeterssonTerm out{};
  out.m = m;
  out.k = k;
  out.kappa = kappa;
  out.c_max = c_max;
  out.value = (m == 1 ? 1.0 : 0.0) + 2.0 * kPi * i_kappa * csum;
  out.tail_estimate = petersson_tail_bound(m, k, kappa, c_max);
  out.tail_rigorous = static_cast<double>(c_max) > four_pi_root_m;
  if (!out.tail_rigorous) {
    out.warnings.push_back("c_max <= 4 pi sqrt(m): the truncated c-sum has not entered the small-argument regime");
  }
  return out;
}

PeterssonTerm petersson_delta(std::uint64_t m, std::uint64_t k, long kappa) {
  return petersson_delta(m, k, kappa, std::max(default_c_max(m), k));
}

OldPartSum old_part_sum(std::uint64_t p, std::uint64_t k, std::uint64_t q, long kappa, std::uint64_t ell_max,
                        std::uint64_t c_max, unsigned threads) {
  check_kappa(kappa);
  if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("old_part_sum: p and q must be prime");
  if (p == q) throw std::invalid_argument("old_part_sum: p must differ from q");
  if (k < 1) throw std::invalid_argument("old_part_sum: k must be >= 1");
  if (ell_max < 1) throw std::invalid_argument("old_part_sum: ell_max must be >= 1");

  std::uint64_t pk = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (pk > UINT64_MAX / p) throw std::overflow_error("old_part_sum: p^k overflows");
    pk *= p;
  }

  OldPartSum out{};
  out.bound = 2.0 * static_cast<double>(k + 1);
  bool guard_warned = false;
  for (std::uint64_t ell = 1; ell <= ell_max; ell *= q) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(pk) * ell * ell;
    if (wide > UINT64_MAX) throw std::overflow_error("old_part_sum: p^k ell^2 overflows");
    const auto m = static_cast<std::uint64_t>(wide);
    if (m > kBesselArgumentGuard && !guard_warned) {
      out.warnings.push_back("p^k ell^2 exceeds the Bessel-argument guard");
      guard_warned = true;
    }
    const std::uint64_t cm = c_max == 0 ? default_c_max(m) : c_max;
    const PeterssonTerm term = petersson_delta(m, 1, kappa, cm, threads);
    const double inv = 1.0 / static_cast<double>(ell);
    out.value += inv * term.value;
    out.tail_total += inv * term.tail_estimate;
    out.ells.push_back(ell);
    for (const auto& w : term.warnings) out.warnings.push_back("ell=" + std::to_string(ell) + ": " + w);
    if (ell > ell_max / q) break;
  }
  return out;
}

bool new_part_admissible(const Rational& nu, long r) {
  if (r < 1) throw std::invalid_argument("new_part_admissible: r must be >= 1");
  return nu < Rational(2, r * r);
}

} // namespace lowlying
