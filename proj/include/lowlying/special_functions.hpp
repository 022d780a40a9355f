#pragma once

namespace lowlying {

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0: upward recurrence to x >= 10, then
/// the asymptotic series with Bernoulli numbers B_2..B_16. Absolute error
/// below 1e-12. Throws std::domain_error for x <= 0.
double digamma(double x);

/// Bessel function of the first kind J_order(x) for integer order >= 0 and
/// x >= 0. Uses the power series for x <= 12 and Miller's backward
/// recurrence, normalized by J_0 + 2 sum J_2k = 1, above that.
/// Throws std::domain_error for x < 0 and std::invalid_argument for order < 0.
double bessel_j(int order, double x);

} // namespace lowlying
