#pragma once

#include <cstdint>
#include <vector>

namespace lowlying {

/// Units modulo c with their inverses and the table cos(2 pi k / c), so that
/// many sums S(m, n; c) at one modulus share the setup cost.
class KloostermanModulus {
public:
  /// Throws std::invalid_argument for c < 1.
  explicit KloostermanModulus(std::uint64_t c);

  std::uint64_t modulus() const { return c_; }
  std::size_t unit_count() const { return units_.size(); }

  /// S(m, n; c) = sum_{x mod c, (x, c) = 1} e((m x + n xbar)/c). Real because
  /// x -> -x pairs conjugate terms.
  double sum(std::int64_t m, std::int64_t n) const;

private:
  std::uint64_t c_;
  std::vector<std::uint64_t> units_;
  std::vector<std::uint64_t> inverses_;
  std::vector<double> cosines_;
};

double kloosterman(std::int64_t m, std::int64_t n, std::uint64_t c);

/// tau(c) gcd(m, n, c)^{1/2} c^{1/2}.
double weil_bound(std::int64_t m, std::int64_t n, std::uint64_t c);

} // namespace lowlying
