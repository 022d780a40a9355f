#pragma once

// Local data of sym^r f for a form whose Satake parameters at p are
// e^{+i theta}, e^{-i theta}: Hecke eigenvalues at prime powers, the power
// sums S(e^{i theta}; n, r), gamma shifts at infinity and root numbers.

#include <vector>

namespace lowlying {

/// lambda(p^n) = X_n(2 cos theta) = sin((n+1) theta) / sin(theta), with the
/// limits n+1 at theta = 0 and (-1)^n (n+1) at theta = pi.
/// Throws std::domain_error for theta outside [0, pi].
double lambda_power(double theta, long n);

/// The three evaluations of S(e^{i theta}; n, r) = sum_{j=0}^{r} e^{i theta n (2j - r)}.
struct PowerSumRoutes {
  double direct;     // cosine sum
  double ratio;      // sin((r+1) n theta) / sin(n theta)
  double chebyshev;  // X_r(2 cos(n theta)) by recurrence
  double max_discrepancy() const;
};

PowerSumRoutes power_sum_routes(double theta, long n, long r);

/// S(e^{i theta}; n, r), the direct-sum route.
double power_sum_S(double theta, long n, long r);

/// alpha^n + alpha^{-n} = 2 cos(n theta).
double alpha_pair_power(double theta, long n);

/// The Chebyshev form of alpha^n + alpha^{-n}: 2 X_0, X_1, or X_n - X_{n-2}
/// evaluated at 2 cos theta.
double alpha_pair_power_chebyshev(double theta, long n);

/// Shifts mu_0..mu_r of the Gamma_R factors of L_infty(sym^r f, s).
struct GammaShifts {
  std::vector<double> shifts;
};

/// mu_{kappa,r}: 1 when r(kappa-1)/2 is an odd integer, else 0.
int mu_kappa_r(long r, long kappa);

/// Throws std::invalid_argument for odd or non-positive kappa, or r < 1.
GammaShifts gamma_shifts(long r, long kappa);

/// epsilon(kappa, r) for odd r, by r mod 8: i^kappa, -1, -i^kappa, +1.
int epsilon_kappa_r(long r, long kappa);

/// Sign of the functional equation of sym^r f; eps_f models eps_f(q).
int root_number(long r, long kappa, int eps_f);

} // namespace lowlying
