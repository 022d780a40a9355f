#include "lowlying/kloosterman.hpp"

#include "lowlying/primes.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lowlying {

namespace {

std::uint64_t reduce(std::int64_t a, std::uint64_t c) {
  const std::int64_t cc = static_cast<std::int64_t>(c);
  std::int64_t r = a % cc;
  if (r < 0) r += cc;
  return static_cast<std::uint64_t>(r);
}

// Inverse of a unit x modulo c by the extended Euclidean algorithm.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t c) {
  std::int64_t r0 = static_cast<std::int64_t>(c), r1 = static_cast<std::int64_t>(x);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t t = r0 - quot * r1;
    r0 = r1;
    r1 = t;
    t = s0 - quot * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0, c);
}

} // namespace

KloostermanModulus::KloostermanModulus(std::uint64_t c) : c_(c) {
  if (c < 1) throw std::invalid_argument("Kloosterman modulus must be >= 1");
  if (c > (1ULL << 31)) throw std::invalid_argument("Kloosterman modulus too large");
  if (c == 1) {
    units_ = {0};
    inverses_ = {0};
    cosines_ = {1.0};
    return;
  }
  cosines_.resize(c);
  for (std::uint64_t k = 0; k < c; ++k) {
    cosines_[k] = std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(c));
  }
  for (std::uint64_t x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    units_.push_back(x);
    inverses_.push_back(inverse_mod(x, c));
  }
}

double KloostermanModulus::sum(std::int64_t m, std::int64_t n) const {
  const std::uint64_t mm = reduce(m, c_);
  const std::uint64_t nn = reduce(n, c_);
  double total = 0.0;
  for (std::size_t i = 0; i < units_.size(); ++i) {
    total += cosines_[(mm * units_[i] + nn * inverses_[i]) % c_];
  }
  return total;
}

double kloosterman(std::int64_t m, std::int64_t n, std::uint64_t c) {
  return KloostermanModulus(c).sum(m, n);
}

double weil_bound(std::int64_t m, std::int64_t n, std::uint64_t c) {
  const std::uint64_t g =
      std::gcd(std::gcd(static_cast<std::uint64_t>(std::llabs(m)), static_cast<std::uint64_t>(std::llabs(n))), c);
  return static_cast<double>(divisor_count(c)) * std::sqrt(static_cast<double>(g)) *
         std::sqrt(static_cast<double>(c));
}

} // namespace lowlying
