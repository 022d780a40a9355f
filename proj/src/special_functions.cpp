#include "lowlying/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace lowlying {

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("digamma: argument must be positive and finite");
  // B_{2k} / (2k) for k = 1..8.
  static constexpr std::array<long double, 8> kCoeff = {
      1.0L / 12.0L,         -1.0L / 120.0L,  1.0L / 252.0L,  -1.0L / 240.0L,
      5.0L / 660.0L,        -691.0L / 32760.0L, 7.0L / 84.0L, -3617.0L / 8160.0L,
  };
  long double v = x;
  long double shift = 0.0L;
  while (v < 10.0L) {
    shift -= 1.0L / v;
    v += 1.0L;
  }
  const long double inv2 = 1.0L / (v * v);
  long double series = 0.0L;
  long double power = inv2;
  for (long double c : kCoeff) {
    series += c * power;
    power *= inv2;
  }
  return static_cast<double>(shift + std::log(v) - 0.5L / v - series);
}

namespace {

double bessel_series(int order, double x) {
  const long double half = 0.5L * x;
  long double term = 1.0L;
  for (int i = 1; i <= order; ++i) term *= half / i;
  long double sum = term;
  const long double q = half * half;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::fabs(term) <= 1e-21L * std::fabs(sum) && k > half) break;
  }
  return static_cast<double>(sum);
}

double bessel_miller(int order, double x) {
  const double top = std::max(static_cast<double>(order), x);
  long start = static_cast<long>(top + std::sqrt(160.0 * top)) + 20;
  if (start % 2 != 0) ++start;

  constexpr double kBig = 1e250;
  constexpr double kSmall = 1e-250;
  double next = 0.0;  // J_{j+1}
  double cur = 1.0;   // J_j
  double norm = 2.0;  // start is even: contributes 2 J_start
  double result = 0.0;
  const double two_over_x = 2.0 / x;
  for (long j = start; j >= 1; --j) {
    const double prev = static_cast<double>(j) * two_over_x * cur - next;  // J_{j-1}
    next = cur;
    cur = prev;
    if (std::fabs(cur) > kBig) {
      cur *= kSmall;
      next *= kSmall;
      norm *= kSmall;
      result *= kSmall;
    }
    const long idx = j - 1;
    if (idx == order) result = cur;
    if (idx == 0) norm += cur;
    else if (idx % 2 == 0) norm += 2.0 * cur;
  }
  return result / norm;
}

} // namespace

double bessel_j(int order, double x) {
  if (order < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("bessel_j: argument must be finite and >= 0");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  if (x <= 12.0) return bessel_series(order, x);
  return bessel_miller(order, x);
}

} // namespace lowlying
