#include "lowlying/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lowlying {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1u) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1u;
  }
  return r;
}

} // namespace

std::uint64_t sieve_cap() {
  if (const char* env = std::getenv("LOWLYING_SIEVE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSieveCap;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

PrimeSieve::PrimeSieve(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
  if (limit > cap) {
    throw std::length_error("sieve limit " + std::to_string(limit) + " exceeds the cap " + std::to_string(cap) +
                            " (raise LOWLYING_SIEVE_CAP to allow it)");
  }
  if (limit > UINT32_MAX) throw std::length_error("sieve limit must fit in 32 bits");
  if (limit < 2) return;
  // Odd numbers only: index i stands for 2i + 1.
  const std::uint64_t half = limit / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  primes_.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i] && 2 * i + 1 <= limit) primes_.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
}

std::span<const std::uint32_t> PrimeSieve::primes_up_to(std::uint64_t x) const {
  if (x > limit_) throw std::out_of_range("PrimeSieve: query beyond the sieve limit");
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), x);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

} // namespace lowlying
