#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lowlying {

/// Default largest sieve the library will allocate.
inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

/// The cap in force: LOWLYING_SIEVE_CAP from the environment when set to a
/// positive integer, kDefaultSieveCap otherwise.
std::uint64_t sieve_cap();

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Number of divisors of n >= 1, by trial division.
std::uint64_t divisor_count(std::uint64_t n);

/// Sieve of Eratosthenes over [0, limit]. Immutable after construction.
class PrimeSieve {
public:
  /// Throws std::length_error when limit exceeds the cap.
  explicit PrimeSieve(std::uint64_t limit, std::uint64_t cap = sieve_cap());

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  /// Primes p <= x (x may exceed the limit only if it is not needed).
  std::span<const std::uint32_t> primes_up_to(std::uint64_t x) const;

private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

} // namespace lowlying
