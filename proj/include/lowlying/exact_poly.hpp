#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace lowlying {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// n! for n >= 0.
Integer factorial(long n);

/// Catalan number C(2m, m) / (m + 1).
Integer catalan(long m);

/// Converts a finite double to the rational number it represents exactly.
Rational exact_rational(double x);

/// Dense univariate polynomial over Q in the indeterminate T.
///
/// Coefficient i multiplies T^i. Trailing zeros are always stripped, so the
/// zero polynomial is the empty coefficient vector and equality is plain
/// coefficient-wise comparison.
class ExactPoly {
public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs);

  static ExactPoly constant(const Rational& c);
  static ExactPoly monomial(std::size_t degree, const Rational& c = 1);
  /// The indeterminate T.
  static ExactPoly t();

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of T^i; zero past the degree.
  Rational coeff(std::size_t i) const;

  ExactPoly& operator+=(const ExactPoly& other);
  ExactPoly& operator-=(const ExactPoly& other);
  ExactPoly& operator*=(const Rational& c);

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator-(ExactPoly a) { return a *= Rational(-1); }
  friend ExactPoly operator*(ExactPoly a, const Rational& c) { return a *= c; }
  friend ExactPoly operator*(const Rational& c, ExactPoly a) { return a *= c; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// P^e by repeated squaring; P^0 = 1 (including 0^0).
  ExactPoly pow(unsigned e) const;

  /// Horner evaluation in extended precision.
  long double evaluate(long double x) const;

  /// Human-readable form such as "T^3 - 2*T".
  std::string to_string() const;

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

} // namespace lowlying
