#pragma once

// Exact algebra of the Chebyshev polynomials of the second kind X_n,
// normalized so that X_n(2 cos t) = sin((n + 1) t) / sin(t). They form an
// orthonormal basis of Q[T] for the semicircle inner product on [-2, 2].

#include "lowlying/exact_poly.hpp"

#include <map>

namespace lowlying {

/// Coefficients of a polynomial in the X_j basis. Only nonzero entries are
/// stored.
class ChebExpansion {
public:
  ChebExpansion() = default;
  explicit ChebExpansion(std::map<long, Rational> coeffs);

  /// Projects P onto X_0..X_deg(P) with the semicircle inner product.
  static ChebExpansion from_poly(const ExactPoly& p);

  Rational coeff(long j) const;
  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  ExactPoly to_poly() const;

  friend bool operator==(const ChebExpansion& a, const ChebExpansion& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::map<long, Rational> coeffs_;
};

/// X_n for n >= -2, with X_{-1} = X_{-2} = 0. Throws std::invalid_argument
/// for n < -2.
ExactPoly cheb_poly(long n);

/// (1/pi) * integral_{-2}^{2} P Q sqrt(1 - x^2/4) dx, evaluated exactly from
/// the semicircle moments M_{2m} = Catalan(m), M_{2m+1} = 0.
Rational inner_product(const ExactPoly& p, const ExactPoly& q);

/// x(w, r, j) = <X_r^w, X_j> for 0 <= j <= r*w.
ChebExpansion linearize_power(long w, long r);

/// Sum over 0 <= u <= l, u = l (mod 2) of (-1)^((l-u)/2) C((l+u)/2, u) T^u.
ExactPoly monomial_expansion(long l);

/// Residual of
///   sum_{0<=j<=r, j=r (2)} (X_{jn} - X_{jn-2}) = sum_{j=0}^{r} (-1)^j X_{n-2}^j X_{n(r-j)}.
/// Zero when the identity holds.
ExactPoly verify_S3(long n, long r);

/// Residual of the even chain identity for X_{2k0} - X_{2k0-2}: the chain
/// sum over 1 <= k_j < ... < k_1 < k_0 of
///   (-1)^j prod_i C(2k_i, k_i - k_{i+1}) (T^{2k_j} - C(2k_j, k_j))
/// minus X_{2k0} - X_{2k0-2}.
ExactPoly pair_chain_identity(long k0);

/// Residual of
///   X_{2K+1} - X_{2K-1} = (-1)^K T (1 + sum_{k0=1}^{K} (-1)^{k0} (X_{2k0} - X_{2k0-2})).
ExactPoly odd_identity(long K);

/// The chain sum of (-1)^j prod_i C(2k_i, k_i - k_{i+1}) C(2k_j, k_j) k_j/(1+k_j).
/// Equals -<X_{2k0} - X_{2k0-2}, X_0>: 1 for k0 = 1 and 0 for k0 >= 2.
Rational vanishing_chain_sum(long k0);

/// c_{K,k} in alpha^K + beta^K = sum_k c_{K,k} lambda^k, from the closed
/// forms (with c_{0,0} = 0 as printed). Zero when k and K have different
/// parity. Throws std::invalid_argument unless 0 <= k <= K.
Rational miller_coeff(long K, long k);

/// sum_k c_{K,k} T^k - (X_K - X_{K-2}) for K >= 1.
ExactPoly miller_identity_check(long K);

/// X_n(x) through the three-term recurrence in double precision.
double chebyshev_value(long n, double x);

} // namespace lowlying
